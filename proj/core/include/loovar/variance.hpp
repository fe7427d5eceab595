// The three variance quantities under comparison: the naive estimator of
// Var(elpd_hat), the unbiased plug-in estimator, and the analytic variance
// with its per-fold variance/covariance decomposition.

#pragma once

#include <algorithm>
#include <cstddef>

#include "loovar/moments.hpp"
#include "loovar/normal_model.hpp"

namespace loovar {

// Sampling moments of the pointwise terms: Var(elpd_i) and the fold
// covariance gamma = Cov(elpd_i, elpd_j) for i != j.
struct FoldMoments {
  double var_i;
  double cov_ij;
};

enum class VarianceMethod { naive, unbiased, analytic };

struct VarianceEstimate {
  double value;
  VarianceMethod method;
  // Set iff value < 0 (possible only for the unbiased method).
  bool negative_flag;

  // Nonnegative convenience value for users needing a standard error.
  // Clamping introduces bias; the primary `value` does not.
  double clamped() const { return std::max(value, 0.0); }
};

// n/(n-1) times the sum of squared deviations of the pointwise terms, i.e.
// n times their unbiased sample variance. Requires n >= 2.
VarianceEstimate naive_variance(const PointwiseElpd& pe);

// Var(elpd_i) and Cov(elpd_i, elpd_j) as linear combinations of the four
// moment products, with coefficients built at conditioning size k = n-1.
FoldMoments fold_moments(const ElpdCoefficients& coef, const MomentProducts& mp,
                         std::size_t n);

// Var(elpd_hat), the four-term linear combination of the moment products.
// Tagged analytic when mp carries true products, unbiased when estimated.
VarianceEstimate total_variance(const ElpdCoefficients& coef,
                                const MomentProducts& mp, std::size_t n);

// The unbiased sampling-variance estimator: raw moments -> moment-product
// estimates -> total variance at k = n-1. Requires n >= 4.
VarianceEstimate unbiased_variance(const ModelConfig& config,
                                   const Dataset& data);

// E[naive] = n Var(elpd_i) - n Cov(elpd_i, elpd_j); mp must be analytic.
double expected_naive(const ElpdCoefficients& coef, const MomentProducts& mp,
                      std::size_t n);

}  // namespace loovar
