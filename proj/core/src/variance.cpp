#include "loovar/variance.hpp"

#include <stdexcept>
#include <vector>

#include "loovar/summation.hpp"

namespace loovar {

namespace {

void require_loo_coefficients(const ElpdCoefficients& coef, std::size_t n) {
  if (n < 4) throw std::invalid_argument("variance: n must be >= 4");
  if (coef.k != static_cast<int>(n) - 1)
    throw std::invalid_argument("variance: coefficients must be built at k = n-1");
}

}  // namespace

VarianceEstimate naive_variance(const PointwiseElpd& pe) {
  const std::size_t n = pe.values.size();
  if (n < 2) throw std::invalid_argument("naive_variance: n must be >= 2");
  const double mean = pairwise_mean(pe.values);
  std::vector<double> sq(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double dev = pe.values[i] - mean;
    sq[i] = dev * dev;
  }
  const double nd = static_cast<double>(n);
  const double value = nd / (nd - 1.0) * pairwise_sum(sq);
  return VarianceEstimate{value, VarianceMethod::naive, false};
}

FoldMoments fold_moments(const ElpdCoefficients& coef, const MomentProducts& mp,
                         std::size_t n_obs) {
  require_loo_coefficients(coef, n_obs);
  const double n = static_cast<double>(n_obs);
  const double a = coef.a;
  const double b = coef.b;
  const double c = coef.c;
  const double m = n - 1.0;
  const double m2 = m * m;
  const double m3 = m2 * m;
  const double m4 = m2 * m2;

  const double var_i =
      (4.0 * a * a + n / m * b * b + 4.0 / m * c * c + 4.0 * a * b +
       4.0 / m * b * c) *
          mp.mu2_sigma2 +
      (-a * a + 1.0 / m * b * b + (2.0 * n - 5.0) / m3 * c * c) * mp.sigma4 +
      (4.0 * a * a + 4.0 / m2 * c * c + 2.0 * a * b + 2.0 / m2 * b * c) *
          mp.mu_mu3 +
      (a * a + 1.0 / m3 * c * c) * mp.mu4_central;

  const double cov_ij =
      ((3.0 * n - 4.0) / m2 * b * b + 4.0 * (n - 2.0) / m2 * c * c +
       4.0 / m * a * b + 8.0 / m * a * c + 4.0 * (2.0 * n - 3.0) / m2 * b * c) *
          mp.mu2_sigma2 +
      (1.0 / m2 * b * b + (n - 2.0) * (2.0 * n - 7.0) / m4 * c * c -
       2.0 / m2 * a * c + 4.0 * (n - 2.0) / m3 * b * c) *
          mp.sigma4 +
      (4.0 * (n - 2.0) / m3 * c * c + 2.0 / m * a * b + 4.0 * n / m2 * a * c +
       (4.0 * n - 6.0) / m3 * b * c) *
          mp.mu_mu3 +
      ((n - 2.0) / m4 * c * c + 2.0 / m2 * a * c) * mp.mu4_central;

  return FoldMoments{var_i, cov_ij};
}

VarianceEstimate total_variance(const ElpdCoefficients& coef,
                                const MomentProducts& mp, std::size_t n_obs) {
  require_loo_coefficients(coef, n_obs);
  const double n = static_cast<double>(n_obs);
  const double a = coef.a;
  const double b = coef.b;
  const double c = coef.c;
  const double m = n - 1.0;
  const double abc = a + b + c;

  const double value =
      4.0 * n * abc * abc * mp.mu2_sigma2 +
      (-n * a * a + 2.0 * n / m * b * b +
       n * (2.0 * n - 3.0) * (n - 3.0) / (m * m * m) * c * c -
       2.0 * n / m * a * c + 4.0 * n * (n - 2.0) / (m * m) * b * c) *
          mp.sigma4 +
      4.0 * n * abc * (a * m + c) / m * mp.mu_mu3 +
      (n * a * a + n / (m * m) * c * c + 2.0 * n / m * a * c) * mp.mu4_central;

  const VarianceMethod method = mp.provenance == Provenance::analytic
                                    ? VarianceMethod::analytic
                                    : VarianceMethod::unbiased;
  return VarianceEstimate{value, method, value < 0.0};
}

VarianceEstimate unbiased_variance(const ModelConfig& config,
                                   const Dataset& data) {
  const std::size_t n = data.size();
  if (n < 4) throw std::invalid_argument("unbiased_variance: n must be >= 4");
  const RawMoments rm = raw_moments(data);
  const MomentProducts mp = estimate_moment_products(rm);
  const ElpdCoefficients coef = coefficients(config, static_cast<int>(n) - 1);
  return total_variance(coef, mp, n);
}

double expected_naive(const ElpdCoefficients& coef, const MomentProducts& mp,
                      std::size_t n_obs) {
  if (mp.provenance != Provenance::analytic)
    throw std::invalid_argument("expected_naive: requires analytic moment products");
  const FoldMoments fm = fold_moments(coef, mp, n_obs);
  const double n = static_cast<double>(n_obs);
  return n * fm.var_i - n * fm.cov_ij;
}

}  // namespace loovar
