// Data-generating processes for the simulation experiment and their exact
// moments, used for the analytic reference lines.

#pragma once

#include <cstddef>
#include <variant>

#include "loovar/model.hpp"
#include "loovar/moments.hpp"
#include "loovar/rng.hpp"

namespace loovar {

struct NormalDgp {
  double mean;
  double sd;
};

// Azzalini parameterization: location xi, scale omega (> 0, not a variance),
// shape alpha. shape = 0 recovers N(location, scale^2).
struct SkewNormalDgp {
  double location;
  double scale;
  double shape;
};

class DgpSpec {
 public:
  // Second argument is the standard deviation.
  static DgpSpec normal(double mean, double sd);
  // Explicit variance reading of the second parameter.
  static DgpSpec normal_with_variance(double mean, double variance);
  static DgpSpec skew_normal(double location, double scale, double shape);

  bool is_normal() const { return std::holds_alternative<NormalDgp>(params_); }
  const NormalDgp& as_normal() const { return std::get<NormalDgp>(params_); }
  const SkewNormalDgp& as_skew_normal() const {
    return std::get<SkewNormalDgp>(params_);
  }

 private:
  explicit DgpSpec(std::variant<NormalDgp, SkewNormalDgp> params);
  std::variant<NormalDgp, SkewNormalDgp> params_;
};

// First four moments of a DGP: mean, variance, third and fourth central.
struct TrueMoments {
  double mu;
  double sigma_sq;
  double mu3;
  double mu4;
};

// n independent draws. Skew-normal uses the representation
// X = location + scale*(delta*|Z0| + sqrt(1-delta^2)*Z1),
// delta = shape/sqrt(1+shape^2), with Z0, Z1 independent standard normals.
Dataset sample(const DgpSpec& spec, std::size_t n, RngStream& rng);

double sample_one(const DgpSpec& spec, RngStream& rng);

TrueMoments true_moments(const DgpSpec& spec);

// Packs {mu^2 sigma^2, sigma^4, mu mu_3, mu_4, mu^4} with analytic provenance.
MomentProducts true_products(const TrueMoments& tm);

}  // namespace loovar
