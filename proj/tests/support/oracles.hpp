// Independent oracles and Monte Carlo helpers shared by the test suites.
// Nothing here may call the implementation path it is used to check.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>
#include <vector>

#include "loovar/model.hpp"

namespace loovar::testing {

// Pointwise LOO elpd by literally refitting the posterior on the n-1
// remaining observations and evaluating the predictive normal log density.
// Shares no code with loovar::coefficients / loo_pointwise_elpd.
inline std::vector<double> refit_pointwise_elpd(const ModelConfig& config,
                                                std::span<const double> y) {
  const std::size_t n = y.size();
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    double rest_sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) rest_sum += y[j];
    }
    const double k = static_cast<double>(n) - 1.0;
    const double tau = 1.0 / (1.0 / config.sigma_0_sq + k / config.sigma_m_sq);
    const double pred_var = config.sigma_m_sq + tau;
    const double pred_mean = tau * rest_sum / config.sigma_m_sq;
    const double dev = y[i] - pred_mean;
    out[i] = -0.5 * std::log(2.0 * std::numbers::pi * pred_var) -
             dev * dev / (2.0 * pred_var);
  }
  return out;
}

// Direct normal log density.
inline double normal_log_pdf(double x, double mean, double var) {
  const double dev = x - mean;
  return -0.5 * std::log(2.0 * std::numbers::pi * var) - dev * dev / (2.0 * var);
}

// Average of y_{i1} y_{i2} y_{i3} y_{i4} over all distinct 4-subsets, by
// explicit enumeration. `scale` is the average of the absolute products, the
// natural magnitude against which the signed average can cancel.
struct BruteForceMu4 {
  double value;
  double scale;
};

inline BruteForceMu4 mu4_power_brute_force(std::span<const double> y) {
  const std::size_t n = y.size();
  double sum = 0.0;
  double abs_sum = 0.0;
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        for (std::size_t l = k + 1; l < n; ++l) {
          const double product = y[i] * y[j] * y[k] * y[l];
          sum += product;
          abs_sum += std::abs(product);
          ++count;
        }
  return {sum / static_cast<double>(count),
          abs_sum / static_cast<double>(count)};
}

// Relative error of an algebraic identity lhs == rhs whose sides are sums of
// terms of magnitude `term_scale`; normalizing by the cancelled result alone
// would demand more precision than the arithmetic carries.
inline double identity_rel_error(double lhs, double rhs, double term_scale) {
  const double denom =
      std::max({std::abs(lhs), std::abs(rhs), std::abs(term_scale), 1e-300});
  return std::abs(lhs - rhs) / denom;
}

struct CentralMoments {
  double mu;
  double sigma_sq;
  double mu3;
  double mu4;
};

// First four central moments of the Azzalini skew-normal by composite-Simpson
// quadrature of the density 2 phi(z) Phi(shape*z) over z in [-12, 12].
inline CentralMoments skew_normal_moments_quadrature(double location,
                                                     double scale,
                                                     double shape) {
  constexpr std::size_t kPoints = 40001;  // odd, Simpson-compatible
  constexpr double kLo = -12.0, kHi = 12.0;
  const double h = (kHi - kLo) / static_cast<double>(kPoints - 1);

  std::vector<double> x(kPoints), dens(kPoints), w(kPoints, 2.0);
  w.front() = w.back() = 1.0;
  for (std::size_t i = 1; i + 1 < kPoints; i += 2) w[i] = 4.0;
  for (std::size_t i = 0; i < kPoints; ++i) {
    const double z = kLo + h * static_cast<double>(i);
    const double phi =
        std::exp(-0.5 * z * z) / std::sqrt(2.0 * std::numbers::pi);
    const double cdf = 0.5 * std::erfc(-shape * z / std::numbers::sqrt2);
    x[i] = location + scale * z;
    dens[i] = 2.0 * phi * cdf;
  }
  auto integrate = [&](auto&& f) {
    double acc = 0.0;
    for (std::size_t i = 0; i < kPoints; ++i) acc += w[i] * f(x[i]) * dens[i];
    return acc * h / 3.0;
  };

  CentralMoments m{};
  m.mu = integrate([](double v) { return v; });
  m.sigma_sq = integrate([&](double v) { return (v - m.mu) * (v - m.mu); });
  m.mu3 = integrate([&](double v) {
    const double d = v - m.mu;
    return d * d * d;
  });
  m.mu4 = integrate([&](double v) {
    const double d = v - m.mu;
    return d * d * d * d;
  });
  return m;
}

inline double sample_mean(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

inline double sample_variance(std::span<const double> v) {
  const double m = sample_mean(v);
  double s = 0.0;
  for (double x : v) s += (x - m) * (x - m);
  return s / (static_cast<double>(v.size()) - 1.0);
}

// Standard error of the sample mean.
inline double mean_se(std::span<const double> v) {
  return std::sqrt(sample_variance(v) / static_cast<double>(v.size()));
}

inline double sample_covariance(std::span<const double> x,
                                std::span<const double> y) {
  const double mx = sample_mean(x);
  const double my = sample_mean(y);
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += (x[i] - mx) * (y[i] - my);
  return s / (static_cast<double>(x.size()) - 1.0);
}

// Asymptotic standard error of the sample covariance,
// se^2 = (mean of ((x-mx)(y-my))^2 - cov^2) / R.
inline double covariance_se(std::span<const double> x,
                            std::span<const double> y) {
  const double mx = sample_mean(x);
  const double my = sample_mean(y);
  const double cov = sample_covariance(x, y);
  double m22 = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double p = (x[i] - mx) * (y[i] - my);
    m22 += p * p;
  }
  m22 /= static_cast<double>(x.size());
  return std::sqrt((m22 - cov * cov) / static_cast<double>(x.size()));
}

// Asymptotic standard error of the unbiased sample variance,
// se^2 = (m4 - s^4 (R-3)/(R-1)) / R with sample central moments.
inline double variance_se(std::span<const double> v) {
  const double r = static_cast<double>(v.size());
  const double m = sample_mean(v);
  const double s2 = sample_variance(v);
  double m4 = 0.0;
  for (double x : v) {
    const double d = x - m;
    m4 += d * d * d * d;
  }
  m4 /= r;
  return std::sqrt((m4 - s2 * s2 * (r - 3.0) / (r - 1.0)) / r);
}

}  // namespace loovar::testing
