// Closed-form posterior-predictive machinery for the fixed-variance conjugate
// normal model, and the pointwise leave-one-out log predictive density.

#pragma once

#include <cstddef>
#include <vector>

#include "loovar/model.hpp"

namespace loovar {

// Quadratic-form coefficients of the log posterior-predictive density after
// conditioning on k observations:
//   log p(y_tilde | y_1..y_k) = a*y_tilde^2 + b*y_tilde*y_bar + c*y_bar^2 + d,
// together with the posterior-mean weight tau(k) and predictive variance
// sigma_pp^2(k) = sigma_m^2 + tau(k).
struct ElpdCoefficients {
  int k;
  double a;
  double b;
  double c;
  double d;
  double tau;
  double sigma_pp_sq;
};

// Pointwise LOO log predictive densities and their sum.
struct PointwiseElpd {
  std::vector<double> values;
  double sum;
};

// How the leave-one-out means are obtained. `subtraction` is the O(n) identity
// mean_{-i} = (n*mean - y_i)/(n-1); `recompute` sums the n-1 remaining values
// from scratch per fold (O(n^2), kept for verification).
enum class LooMeanMode { subtraction, recompute };

// Coefficients for conditioning-set size k >= 1. Uses the simplified rational
// closed forms; these agree with the tau/sigma_pp^2 route to rounding.
ElpdCoefficients coefficients(const ModelConfig& config, int k);

// a*y_tilde^2 + b*y_tilde*y_bar + c*y_bar^2 + d, where y_bar is the mean of
// the k conditioning observations.
double log_predictive_density(const ElpdCoefficients& coef, double y_tilde,
                              double y_bar);

// Pointwise LOO elpd for every observation, with coefficients at k = n-1.
// Requires n >= 2.
PointwiseElpd loo_pointwise_elpd(const ModelConfig& config, const Dataset& data,
                                 LooMeanMode mode = LooMeanMode::subtraction);

}  // namespace loovar
