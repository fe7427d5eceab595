// Sample raw moments and unbiased estimators of the moment products
// mu^2*sigma^2, sigma^4, mu*mu_3 and mu_4 entering the elpd-sum variance.

#pragma once

#include <cstddef>

#include "loovar/model.hpp"

namespace loovar {

// Raw sample moments alpha_k = (1/n) sum y_i^k for k = 1..4, plus the
// unbiased fourth-power-of-the-mean estimate
//   mu4_power = e_4(y) / C(n,4),
// the average of y_{i1} y_{i2} y_{i3} y_{i4} over distinct index 4-subsets.
struct RawMoments {
  std::size_t n;
  double alpha1;
  double alpha2;
  double alpha3;
  double alpha4;
  double mu4_power;
};

// Where a set of moment products came from: `estimated` values are unbiased
// sample estimates (and may be negative), `analytic` values are exact products
// of a known data-generating process.
enum class Provenance { estimated, analytic };

struct MomentProducts {
  double mu2_sigma2;   // mu^2 sigma^2
  double sigma4;       // sigma^4
  double mu_mu3;       // mu mu_3
  double mu4_central;  // mu_4
  double mu4_power;    // mu^4
  Provenance provenance;
};

// Raw moments of the sample. The degree-4 elementary symmetric polynomial is
// computed in O(n) from power sums via Newton's identities rather than by
// enumerating the C(n,4) index subsets. Requires n >= 4.
RawMoments raw_moments(const Dataset& data);

// Auxiliary statistic t = n/(n-1) (alpha4 - 4 alpha3 alpha1 + 3 alpha2^2)
// with expectation mu_4 + 3 sigma^4.
double fourth_moment_aux(const RawMoments& rm);

// The four unbiased moment-product estimators, evaluated as the printed
// rational expressions in (alpha1..alpha4, mu4_power, n). Estimates of the
// nonnegative targets can legitimately come out negative; values are reported
// unclamped with provenance = estimated.
MomentProducts estimate_moment_products(const RawMoments& rm);

}  // namespace loovar
