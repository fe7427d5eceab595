#include "loovar/harness.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <fstream>
#include <functional>
#include <limits>
#include <stdexcept>
#include <thread>
#include <utility>

#include <nlohmann/json.hpp>

#include "loovar/normal_model.hpp"
#include "loovar/num_format.hpp"
#include "loovar/variance.hpp"

namespace loovar {

namespace {

// Stream purposes under a DGP's base stream.
constexpr std::uint64_t kDataStream = 0;
constexpr std::uint64_t kBootstrapStream = 1;
constexpr std::uint64_t kNaiveColumn = 0;
constexpr std::uint64_t kUnbiasedColumn = 1;

void validate(const SimulationConfig& cfg) {
  if (cfg.n < 4) throw std::invalid_argument("SimulationConfig: n must be >= 4");
  if (cfg.replications < 2)
    throw std::invalid_argument("SimulationConfig: replications must be >= 2");
  if (cfg.bb_draws < 2)
    throw std::invalid_argument("SimulationConfig: bb_draws must be >= 2");
  if (!(cfg.bb_alpha > 0.0))
    throw std::invalid_argument("SimulationConfig: bb_alpha must be > 0");
}

ReplicationRow run_replication(const SimulationConfig& cfg, const DgpSpec& spec,
                               RngStream stream) {
  const Dataset data = sample(spec, cfg.n, stream);
  const PointwiseElpd pe = loo_pointwise_elpd(cfg.model, data);
  const VarianceEstimate naive = naive_variance(pe);
  const VarianceEstimate unbiased = unbiased_variance(cfg.model, data);
  return ReplicationRow{pe.sum, naive.value, unbiased.value,
                        unbiased.negative_flag};
}

std::vector<ReplicationRow> run_replications(const SimulationConfig& cfg,
                                             const DgpEntry& entry,
                                             const RngStream& data_root) {
  const std::size_t reps = cfg.replications;
  std::vector<ReplicationRow> rows(reps);

  std::size_t workers = cfg.workers != 0
                            ? cfg.workers
                            : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, reps);

  auto worker = [&](std::size_t begin, std::size_t end,
                    std::exception_ptr& error) noexcept {
    for (std::size_t r = begin; r < end; ++r) {
      try {
        rows[r] = run_replication(cfg, entry.spec, data_root.derived(r));
      } catch (...) {
        try {
          std::rethrow_exception(std::current_exception());
        } catch (const std::exception& e) {
          error = std::make_exception_ptr(std::runtime_error(
              "replication " + std::to_string(r) + " of dgp '" + entry.label +
              "': " + e.what()));
        }
        return;
      }
    }
  };

  if (workers <= 1) {
    std::exception_ptr error;
    worker(0, reps, error);
    if (error) std::rethrow_exception(error);
    return rows;
  }

  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(workers);
  const std::size_t chunk = (reps + workers - 1) / workers;
  for (std::size_t t = 0; t < workers; ++t) {
    const std::size_t begin = t * chunk;
    const std::size_t end = std::min(reps, begin + chunk);
    threads.emplace_back(worker, begin, end, std::ref(errors[t]));
  }
  for (auto& th : threads) th.join();
  for (auto& error : errors) {
    if (error) std::rethrow_exception(error);
  }
  return rows;
}

nlohmann::json summary_json(const SimulationReport& report);

}  // namespace

double sqrt_ratio(double value, double reference) {
  if (value < 0.0 || !(reference > 0.0))
    return std::numeric_limits<double>::quiet_NaN();
  return std::sqrt(value / reference);
}

SimulationReport run_experiment(const SimulationConfig& cfg) {
  validate(cfg);
  const RngStream root(cfg.seed);
  const ElpdCoefficients coef =
      coefficients(cfg.model, static_cast<int>(cfg.n) - 1);

  SimulationReport report{cfg.seed, cfg.n,     cfg.replications, cfg.bb_draws,
                          cfg.bb_alpha, cfg.model, {}};
  report.dgps.reserve(cfg.dgps.size());

  for (std::size_t d = 0; d < cfg.dgps.size(); ++d) {
    const DgpEntry& entry = cfg.dgps[d];
    const RngStream dgp_base =
        entry.seed ? RngStream(*entry.seed) : root.derived(d);

    DgpResult result;
    result.label = entry.label;
    result.replications =
        run_replications(cfg, entry, dgp_base.derived(kDataStream));

    std::vector<double> naive_col(cfg.replications);
    std::vector<double> unbiased_col(cfg.replications);
    result.negative_count = 0;
    for (std::size_t r = 0; r < cfg.replications; ++r) {
      naive_col[r] = result.replications[r].naive_var;
      unbiased_col[r] = result.replications[r].unbiased_var;
      if (result.replications[r].negative_flag) ++result.negative_count;
    }

    const RngStream bb_base = dgp_base.derived(kBootstrapStream);
    RngStream bb_naive = bb_base.derived(kNaiveColumn);
    RngStream bb_unbiased = bb_base.derived(kUnbiasedColumn);
    result.naive_bb =
        bayesian_bootstrap(naive_col, cfg.bb_draws, cfg.bb_alpha, bb_naive);
    result.unbiased_bb = bayesian_bootstrap(unbiased_col, cfg.bb_draws,
                                            cfg.bb_alpha, bb_unbiased);

    const MomentProducts mp = true_products(true_moments(entry.spec));
    result.analytic_total_var = total_variance(coef, mp, cfg.n).value;
    result.analytic_expected_naive = expected_naive(coef, mp, cfg.n);

    report.dgps.push_back(std::move(result));
  }
  return report;
}

namespace {

const char* const kSummaryColumns[] = {
    "analytic_var",      "analytic_expected_naive",
    "naive_bb_mean",     "naive_bb_lo",
    "naive_bb_hi",       "unbiased_bb_mean",
    "unbiased_bb_lo",    "unbiased_bb_hi",
};

std::vector<double> summary_values(const DgpResult& r) {
  return {r.analytic_total_var, r.analytic_expected_naive,
          r.naive_bb.mean,      r.naive_bb.ci_low,
          r.naive_bb.ci_high,   r.unbiased_bb.mean,
          r.unbiased_bb.ci_low, r.unbiased_bb.ci_high};
}

nlohmann::json summary_json(const SimulationReport& report) {
  nlohmann::json out;
  out["seed"] = report.seed;
  out["n"] = report.n;
  out["replications"] = report.replications;
  out["bb_draws"] = report.bb_draws;
  out["bb_alpha"] = report.bb_alpha;
  out["model"] = {{"sigma_m_sq", report.model.sigma_m_sq},
                  {"sigma_0_sq", report.model.sigma_0_sq}};
  out["dgps"] = nlohmann::json::array();
  for (const DgpResult& r : report.dgps) {
    nlohmann::json row;
    row["dgp"] = r.label;
    const auto values = summary_values(r);
    for (std::size_t c = 0; c < values.size(); ++c)
      row[kSummaryColumns[c]] = values[c];
    row["negative_reps"] = r.negative_count;
    for (std::size_t c = 0; c < values.size(); ++c)
      row[std::string("sqrt_ratio_") + kSummaryColumns[c]] =
          sqrt_ratio(values[c], r.analytic_total_var);
    out["dgps"].push_back(std::move(row));
  }
  return out;
}

}  // namespace

std::string summary_csv(const SimulationReport& report) {
  std::string out = "dgp";
  for (const char* col : kSummaryColumns) {
    out += ',';
    out += col;
  }
  out += ",negative_reps";
  for (const char* col : kSummaryColumns) {
    out += ",sqrt_ratio_";
    out += col;
  }
  out += '\n';
  for (const DgpResult& r : report.dgps) {
    out += r.label;
    const auto values = summary_values(r);
    for (double v : values) {
      out += ',';
      out += format_double(v);
    }
    out += ',';
    out += std::to_string(r.negative_count);
    for (double v : values) {
      out += ',';
      out += format_double(sqrt_ratio(v, r.analytic_total_var));
    }
    out += '\n';
  }
  return out;
}

std::string summary_json_string(const SimulationReport& report) {
  return summary_json(report).dump(2) + "\n";
}

std::string replications_csv(const SimulationReport& report) {
  std::string out = "dgp,rep,elpd_hat,naive_var,unbiased_var,negative_flag\n";
  for (const DgpResult& r : report.dgps) {
    for (std::size_t i = 0; i < r.replications.size(); ++i) {
      const ReplicationRow& row = r.replications[i];
      out += r.label;
      out += ',';
      out += std::to_string(i);
      out += ',';
      out += format_double(row.elpd_hat);
      out += ',';
      out += format_double(row.naive_var);
      out += ',';
      out += format_double(row.unbiased_var);
      out += ',';
      out += row.negative_flag ? '1' : '0';
      out += '\n';
    }
  }
  return out;
}

namespace {

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace

ReportPaths emit_report(const SimulationReport& report,
                        const std::filesystem::path& dir, OutputFormat format) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec)
    throw std::runtime_error("cannot create output directory: " + dir.string() +
                             " (" + ec.message() + ")");
  ReportPaths paths;
  if (format == OutputFormat::csv) {
    paths.summary = dir / "summary.csv";
    write_file(paths.summary, summary_csv(report));
  } else {
    paths.summary = dir / "summary.json";
    write_file(paths.summary, summary_json_string(report));
  }
  paths.replications = dir / "replications.csv";
  write_file(paths.replications, replications_csv(report));
  return paths;
}

SimulationConfig paper_defaults() {
  SimulationConfig cfg;
  cfg.dgps = {
      {"well_matched", DgpSpec::normal(0.0, 1.2), std::nullopt},
      {"under_dispersed", DgpSpec::normal(2.0, 0.1), std::nullopt},
      {"skewed", DgpSpec::skew_normal(-2.0, 0.16, 10.0), std::nullopt},
  };
  cfg.n = 16;
  cfg.replications = 20000;
  cfg.bb_draws = 4000;
  cfg.bb_alpha = 1.0;
  cfg.model = ModelConfig(1.44, 4.0);
  cfg.seed = 1729;
  return cfg;
}

}  // namespace loovar
