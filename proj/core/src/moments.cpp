#include "loovar/moments.hpp"

#include <stdexcept>
#include <vector>

#include "loovar/summation.hpp"

namespace loovar {

RawMoments raw_moments(const Dataset& data) {
  const std::size_t n = data.size();
  if (n < 4) throw std::invalid_argument("raw_moments: n must be >= 4");
  const auto y = data.values();

  std::vector<double> pow2(n), pow3(n), pow4(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double v = y[i];
    const double v2 = v * v;
    pow2[i] = v2;
    pow3[i] = v2 * v;
    pow4[i] = v2 * v2;
  }
  // Newton's identities: the degree-4 elementary symmetric polynomial from
  // power sums. The intermediate products (p1*e3 etc.) are far larger than
  // e4 itself, so the recursion runs in extended precision.
  long double p1 = 0.0L, p2 = 0.0L, p3 = 0.0L, p4 = 0.0L;
  for (std::size_t i = 0; i < n; ++i) {
    const long double v = y[i];
    const long double v2 = v * v;
    p1 += v;
    p2 += v2;
    p3 += v2 * v;
    p4 += v2 * v2;
  }
  const long double e1 = p1;
  const long double e2 = (e1 * p1 - p2) / 2.0L;
  const long double e3 = (e2 * p1 - e1 * p2 + p3) / 3.0L;
  const long double e4 = (e3 * p1 - e2 * p2 + e1 * p3 - p4) / 4.0L;

  const double nd = static_cast<double>(n);
  const long double binom_n4 =
      static_cast<long double>(nd * (nd - 1.0) * (nd - 2.0) * (nd - 3.0)) / 24.0L;

  RawMoments rm;
  rm.n = n;
  rm.alpha1 = pairwise_sum(y) / nd;
  rm.alpha2 = pairwise_sum(pow2) / nd;
  rm.alpha3 = pairwise_sum(pow3) / nd;
  rm.alpha4 = pairwise_sum(pow4) / nd;
  rm.mu4_power = static_cast<double>(e4 / binom_n4);
  return rm;
}

double fourth_moment_aux(const RawMoments& rm) {
  const double n = static_cast<double>(rm.n);
  return n / (n - 1.0) *
         (rm.alpha4 - 4.0 * rm.alpha3 * rm.alpha1 + 3.0 * rm.alpha2 * rm.alpha2);
}

MomentProducts estimate_moment_products(const RawMoments& rm) {
  if (rm.n < 4)
    throw std::invalid_argument("estimate_moment_products: n must be >= 4");
  const double n = static_cast<double>(rm.n);
  const double a1 = rm.alpha1;
  const double a2 = rm.alpha2;
  const double a3 = rm.alpha3;
  const double a4 = rm.alpha4;
  const double mu4p = rm.mu4_power;

  const double n2 = n * n;
  const double n3 = n2 * n;
  const double n4 = n3 * n;
  const double a1sq = a1 * a1;
  const double a1p4 = a1sq * a1sq;
  const double denom = (n - 3.0) * (n - 2.0) * (n - 1.0);

  const double mu2_sigma2 =
      (-n3 * a1p4 + 2.0 * n3 * a2 * a1sq - 4.0 * (n - 1.0) * n * a3 * a1 -
       (2.0 * n2 - 3.0 * n) * a2 * a2 + 2.0 * (2.0 * n - 3.0) * a4) /
          (2.0 * denom) -
      0.5 * mu4p;

  const double sigma4 =
      (n3 * a1p4 - 2.0 * n3 * a2 * a1sq + (n3 - 3.0 * n2 + 3.0 * n) * a2 * a2 +
       4.0 * n * (n - 1.0) * a3 * a1 + n * (1.0 - n) * a4) /
      denom;

  const double mu_mu3 =
      (-2.0 * (n2 + n - 3.0) * a4 - 6.0 * n3 * a1sq * a2 +
       n * (6.0 * n - 9.0) * a2 * a2 + 3.0 * n3 * a1p4 +
       2.0 * n2 * (n + 1.0) * a1 * a3) /
          (2.0 * denom) +
      0.5 * mu4p;

  const double mu4_central =
      (-3.0 * n4 * a1p4 + 6.0 * n4 * a1sq * a2 + (9.0 - 6.0 * n) * n2 * a2 * a2 +
       (-12.0 + 8.0 * n - 4.0 * n2) * n2 * a1 * a3 +
       (3.0 * n - 2.0 * n2 + n3) * n * a4) /
      (denom * n);

  return MomentProducts{mu2_sigma2, sigma4, mu_mu3, mu4_central, mu4p,
                        Provenance::estimated};
}

}  // namespace loovar
