// Bayesian bootstrap summaries of a sample mean.

#pragma once

#include <cstddef>
#include <span>

#include "loovar/rng.hpp"

namespace loovar {

// Mean and equal-tailed 95% credible interval of the bootstrap draws.
struct BootstrapSummary {
  double mean;
  double ci_low;
  double ci_high;
  std::size_t draws_used;
};

// Each draw weights the values with w ~ Dirichlet(alpha * 1_m) and records
// sum_i w_i v_i. Dirichlet weights are normalized Gamma(alpha, 1) variates;
// interval endpoints are the 2.5% / 97.5% empirical quantiles with linear
// interpolation between order statistics. Requires m >= 2 and draws >= 2.
BootstrapSummary bayesian_bootstrap(std::span<const double> values,
                                    std::size_t draws, double alpha,
                                    RngStream& rng);

// Linearly interpolated empirical quantile of a sorted sample, p in [0, 1].
double sorted_quantile(std::span<const double> sorted, double p);

}  // namespace loovar
