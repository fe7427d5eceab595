// loovar CLI: pointwise LOO elpd and sampling-variance estimates for the
// fixed-variance normal model, analytic reference values, and the simulation
// experiment driver.

#include <cstdio>
#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "loovar/dataset_io.hpp"
#include "loovar/dgp.hpp"
#include "loovar/harness.hpp"
#include "loovar/normal_model.hpp"
#include "loovar/sim_config.hpp"
#include "loovar/variance.hpp"

namespace {

struct EstimateOptions {
  std::string data_path;
  double sigma_m_sq = 0.0;
  double sigma_0_sq = 0.0;
  bool moments = false;
};

int run_estimate(const EstimateOptions& opt) {
  const loovar::Dataset data = loovar::read_dataset(opt.data_path);
  const loovar::ModelConfig config(opt.sigma_m_sq, opt.sigma_0_sq);

  nlohmann::json out;
  if (opt.moments) {
    const auto rm = loovar::raw_moments(data);
    const auto mp = loovar::estimate_moment_products(rm);
    out = {{"n", rm.n},
           {"alpha1", rm.alpha1},
           {"alpha2", rm.alpha2},
           {"alpha3", rm.alpha3},
           {"alpha4", rm.alpha4},
           {"mu4_power", rm.mu4_power},
           {"mu2_sigma2", mp.mu2_sigma2},
           {"sigma4", mp.sigma4},
           {"mu_mu3", mp.mu_mu3},
           {"mu4_central", mp.mu4_central}};
  } else {
    const auto pe = loovar::loo_pointwise_elpd(config, data);
    const auto naive = loovar::naive_variance(pe);
    const auto unbiased = loovar::unbiased_variance(config, data);
    out = {{"elpd_hat", pe.sum},
           {"naive_var", naive.value},
           {"unbiased_var", unbiased.value},
           {"negative_flag", unbiased.negative_flag}};
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

struct AnalyticOptions {
  double mu = 0.0;
  double sigma_sq = 0.0;
  double mu3 = 0.0;
  double mu4 = 0.0;
  std::size_t n = 0;
  double sigma_m_sq = 0.0;
  double sigma_0_sq = 0.0;
};

int run_analytic(const AnalyticOptions& opt) {
  const loovar::ModelConfig config(opt.sigma_m_sq, opt.sigma_0_sq);
  const auto mp =
      loovar::true_products(loovar::TrueMoments{opt.mu, opt.sigma_sq, opt.mu3, opt.mu4});
  const auto coef =
      loovar::coefficients(config, static_cast<int>(opt.n) - 1);
  const auto fm = loovar::fold_moments(coef, mp, opt.n);
  nlohmann::json out = {
      {"total_var", loovar::total_variance(coef, mp, opt.n).value},
      {"var_i", fm.var_i},
      {"cov_ij", fm.cov_ij},
      {"expected_naive", loovar::expected_naive(coef, mp, opt.n)}};
  std::cout << out.dump(2) << "\n";
  return 0;
}

struct SimulateOptions {
  std::string config_path;
  bool paper_defaults = false;
  std::size_t reps = 0;
  std::size_t bb_draws = 0;
  std::uint64_t seed = 0;
  bool seed_set = false;
  std::string out_dir;
  std::string format;
  std::size_t workers = 0;
  bool workers_set = false;
};

void print_summary(const loovar::SimulationReport& report) {
  std::printf("n=%zu replications=%zu bb_draws=%zu bb_alpha=%g seed=%llu\n",
              report.n, report.replications, report.bb_draws, report.bb_alpha,
              static_cast<unsigned long long>(report.seed));
  std::printf("%-18s %12s %12s %14s %14s  %s\n", "dgp", "analytic", "E[naive]",
              "naive BB", "unbiased BB", "sqrt ratios (naive, unbiased)");
  for (const auto& dgp : report.dgps) {
    std::printf("%-18s %12.6g %12.6g %14.6g %14.6g  (%.4f, %.4f)\n",
                dgp.label.c_str(), dgp.analytic_total_var,
                dgp.analytic_expected_naive, dgp.naive_bb.mean,
                dgp.unbiased_bb.mean,
                loovar::sqrt_ratio(dgp.naive_bb.mean, dgp.analytic_total_var),
                loovar::sqrt_ratio(dgp.unbiased_bb.mean, dgp.analytic_total_var));
  }
}

int run_simulate(const SimulateOptions& opt) {
  loovar::SimulationConfig cfg;
  if (opt.paper_defaults) {
    cfg = loovar::paper_defaults();
  } else if (!opt.config_path.empty()) {
    cfg = loovar::load_simulation_config(opt.config_path);
  } else {
    std::fprintf(stderr, "simulate: provide --config FILE or --paper-defaults\n");
    return 2;
  }
  if (opt.reps != 0) cfg.replications = opt.reps;
  if (opt.bb_draws != 0) cfg.bb_draws = opt.bb_draws;
  if (opt.seed_set) cfg.seed = opt.seed;
  if (opt.workers_set) cfg.workers = opt.workers;
  if (!opt.out_dir.empty()) cfg.output_dir = opt.out_dir;
  if (!opt.format.empty())
    cfg.format = opt.format == "json" ? loovar::OutputFormat::json
                                      : loovar::OutputFormat::csv;

  const auto report = loovar::run_experiment(cfg);
  const auto paths = loovar::emit_report(report, cfg.output_dir, cfg.format);
  print_summary(report);
  std::printf("summary: %s\nreplications: %s\n", paths.summary.string().c_str(),
              paths.replications.string().c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact LOO-CV elpd and sampling-distribution variance estimation for "
      "the fixed-variance conjugate normal model"};
  app.require_subcommand(1);

  EstimateOptions est;
  auto* estimate =
      app.add_subcommand("estimate",
                         "Estimate elpd and its sampling variance from a data "
                         "file (one value per line or single-column CSV)");
  estimate->add_option("--data", est.data_path, "Observations file")->required();
  estimate->add_option("--sigma-m-sq", est.sigma_m_sq, "Model data variance")
      ->required();
  estimate->add_option("--sigma-0-sq", est.sigma_0_sq, "Prior variance")
      ->required();
  estimate->add_flag("--moments", est.moments,
                     "Emit raw moments and moment-product estimates instead");

  AnalyticOptions ana;
  auto* analytic = app.add_subcommand(
      "analytic", "Analytic variance quantities from true moments");
  analytic->add_option("--mu", ana.mu, "True mean")->required();
  analytic->add_option("--sigma-sq", ana.sigma_sq, "True variance")->required();
  analytic->add_option("--mu3", ana.mu3, "True third central moment")->required();
  analytic->add_option("--mu4", ana.mu4, "True fourth central moment")
      ->required();
  analytic->add_option("--n", ana.n, "Sample size")->required()
      ->check(CLI::Range(std::size_t{4}, std::size_t{1000000}));
  analytic->add_option("--sigma-m-sq", ana.sigma_m_sq, "Model data variance")
      ->required();
  analytic->add_option("--sigma-0-sq", ana.sigma_0_sq, "Prior variance")
      ->required();

  SimulateOptions sim;
  auto* simulate =
      app.add_subcommand("simulate", "Run the Monte Carlo experiment");
  simulate->add_option("--config", sim.config_path, "Simulation config file");
  simulate->add_flag("--paper-defaults", sim.paper_defaults,
                     "Use the reference setup: 3 DGPs, n=16, 20000 "
                     "replications, 4000 BB draws, alpha=1");
  simulate->add_option("--reps", sim.reps, "Override replication count");
  simulate->add_option("--bb-draws", sim.bb_draws, "Override bootstrap draws");
  simulate->add_option("--seed", sim.seed, "Override RNG seed")
      ->trigger_on_parse()
      ->each([&sim](const std::string&) { sim.seed_set = true; });
  simulate->add_option("--workers", sim.workers, "Worker threads (0 = auto)")
      ->each([&sim](const std::string&) { sim.workers_set = true; });
  simulate->add_option("--out", sim.out_dir, "Output directory");
  simulate->add_option("--format", sim.format, "Summary format")
      ->check(CLI::IsMember({"csv", "json"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (estimate->parsed()) return run_estimate(est);
    if (analytic->parsed()) return run_analytic(ana);
    if (simulate->parsed()) return run_simulate(sim);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 2;
}
