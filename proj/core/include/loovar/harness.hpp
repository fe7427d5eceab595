// Simulation experiment: Monte Carlo replications per DGP, Bayesian-bootstrap
// summaries of the two variance estimators, analytic reference values, and
// plot-ready CSV/JSON reports.

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "loovar/bootstrap.hpp"
#include "loovar/dgp.hpp"
#include "loovar/model.hpp"

namespace loovar {

enum class OutputFormat { csv, json };

struct DgpEntry {
  std::string label;
  DgpSpec spec;
  // Overrides the stream derived from the global seed for this DGP.
  std::optional<std::uint64_t> seed;
};

struct SimulationConfig {
  std::vector<DgpEntry> dgps;
  std::size_t n = 16;
  std::size_t replications = 0;
  std::size_t bb_draws = 0;
  double bb_alpha = 1.0;
  ModelConfig model{1.0, 1.0};
  std::uint64_t seed = 1729;
  // 0 picks the hardware concurrency. The report is identical for any value.
  std::size_t workers = 0;
  std::filesystem::path output_dir = "loovar_out";
  OutputFormat format = OutputFormat::csv;
};

struct ReplicationRow {
  double elpd_hat;
  double naive_var;
  double unbiased_var;
  bool negative_flag;
};

struct DgpResult {
  std::string label;
  double analytic_total_var;
  double analytic_expected_naive;
  BootstrapSummary naive_bb;
  BootstrapSummary unbiased_bb;
  std::size_t negative_count;
  std::vector<ReplicationRow> replications;
};

struct SimulationReport {
  std::uint64_t seed;
  std::size_t n;
  std::size_t replications;
  std::size_t bb_draws;
  double bb_alpha;
  ModelConfig model;
  std::vector<DgpResult> dgps;
};

// sqrt(value / reference); NaN when value is negative (negative estimates are
// reported raw and excluded from the transform) or reference is not positive.
double sqrt_ratio(double value, double reference);

// Runs the full experiment. Replications execute on cfg.workers threads with
// per-replication derived RNG streams and index-ordered aggregation, so the
// report depends only on the config, not on scheduling.
SimulationReport run_experiment(const SimulationConfig& cfg);

// Summary table, one row per DGP (matching JSON keys), and the raw
// replication-level table.
std::string summary_csv(const SimulationReport& report);
std::string summary_json_string(const SimulationReport& report);
std::string replications_csv(const SimulationReport& report);

struct ReportPaths {
  std::filesystem::path summary;
  std::filesystem::path replications;
};

// Writes summary.(csv|json) plus replications.csv under `dir`.
ReportPaths emit_report(const SimulationReport& report,
                        const std::filesystem::path& dir, OutputFormat format);

// The reference experiment configuration: three DGPs, n = 16, 20000
// replications, 4000 bootstrap draws with alpha = 1, model (1.44, 4).
SimulationConfig paper_defaults();

}  // namespace loovar
