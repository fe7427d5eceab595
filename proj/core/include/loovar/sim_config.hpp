// Declarative text format for simulation configurations.
//
// Line-oriented, diff-friendly. '#' starts a comment, blank lines are
// ignored. Scalar settings are `key = value`; each DGP is one line:
//
//   n = 16
//   replications = 20000
//   bb_draws = 4000
//   bb_alpha = 1            # optional, default 1
//   sigma_m_sq = 1.44
//   sigma_0_sq = 4
//   seed = 1729             # optional, default 1729
//   workers = 0             # optional, 0 = hardware concurrency
//   out = results           # optional output directory
//   format = csv            # optional, csv | json
//
//   dgp normal label=well_matched mean=0 sd=1.2
//   dgp normal label=under_dispersed mean=2 variance=0.01
//   dgp skew_normal label=skewed location=-2 scale=0.16 shape=10
//
// Normal DGPs take exactly one of `sd=` / `variance=`. A DGP line may carry
// `seed=` to pin its stream independently of the global seed.

#pragma once

#include <filesystem>
#include <istream>

#include "loovar/harness.hpp"

namespace loovar {

SimulationConfig parse_simulation_config(std::istream& in);

SimulationConfig load_simulation_config(const std::filesystem::path& path);

}  // namespace loovar
