#include "loovar/normal_model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "loovar/summation.hpp"

namespace loovar {

ElpdCoefficients coefficients(const ModelConfig& config, int k) {
  if (k < 1) throw std::invalid_argument("coefficients: k must be >= 1");
  const double sm = config.sigma_m_sq;
  const double s0 = config.sigma_0_sq;
  const double kk = static_cast<double>(k);

  const double tau = 1.0 / (1.0 / s0 + kk / sm);
  const double sigma_pp_sq = sm + tau;

  const double r0 = sm + kk * s0;          // sigma_m^2 + k sigma_0^2
  const double r1 = sm + (kk + 1.0) * s0;  // sigma_m^2 + (k+1) sigma_0^2

  ElpdCoefficients coef;
  coef.k = k;
  coef.a = -0.5 * r0 / (sm * r1);
  coef.b = kk * s0 / (sm * r1);
  coef.c = -0.5 * kk * kk * s0 * s0 / (sm * r0 * r1);
  // log of the variance ratio; never exponentiates densities.
  coef.d = -0.5 * std::log(2.0 * std::numbers::pi * sm * r1 / r0);
  coef.tau = tau;
  coef.sigma_pp_sq = sigma_pp_sq;
  return coef;
}

double log_predictive_density(const ElpdCoefficients& coef, double y_tilde,
                              double y_bar) {
  if (!std::isfinite(y_tilde) || !std::isfinite(y_bar))
    throw std::invalid_argument("log_predictive_density: non-finite input");
  return coef.a * y_tilde * y_tilde + coef.b * y_tilde * y_bar +
         coef.c * y_bar * y_bar + coef.d;
}

PointwiseElpd loo_pointwise_elpd(const ModelConfig& config, const Dataset& data,
                                 LooMeanMode mode) {
  const std::size_t n = data.size();
  if (n < 2) throw std::invalid_argument("loo_pointwise_elpd: n must be >= 2");

  const ElpdCoefficients coef =
      coefficients(config, static_cast<int>(n) - 1);
  const auto y = data.values();
  const double nd = static_cast<double>(n);

  PointwiseElpd out;
  out.values.resize(n);

  if (mode == LooMeanMode::subtraction) {
    const double y_bar = data.mean();
    for (std::size_t i = 0; i < n; ++i) {
      const double loo_mean = (nd * y_bar - y[i]) / (nd - 1.0);
      out.values[i] = log_predictive_density(coef, y[i], loo_mean);
    }
  } else {
    std::vector<double> rest(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
      rest.clear();
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i) rest.push_back(y[j]);
      }
      out.values[i] = log_predictive_density(coef, y[i], pairwise_mean(rest));
    }
  }

  out.sum = pairwise_sum(out.values);
  return out;
}

}  // namespace loovar
