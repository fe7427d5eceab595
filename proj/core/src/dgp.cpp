#include "loovar/dgp.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace loovar {

namespace {

void require_finite(double v, const char* what) {
  if (!std::isfinite(v))
    throw std::invalid_argument(std::string("DgpSpec: non-finite ") + what);
}

double skew_delta(double shape) { return shape / std::sqrt(1.0 + shape * shape); }

}  // namespace

DgpSpec::DgpSpec(std::variant<NormalDgp, SkewNormalDgp> params)
    : params_(std::move(params)) {}

DgpSpec DgpSpec::normal(double mean, double sd) {
  require_finite(mean, "mean");
  require_finite(sd, "sd");
  if (!(sd > 0.0)) throw std::invalid_argument("DgpSpec: sd must be > 0");
  return DgpSpec(NormalDgp{mean, sd});
}

DgpSpec DgpSpec::normal_with_variance(double mean, double variance) {
  require_finite(variance, "variance");
  if (!(variance > 0.0))
    throw std::invalid_argument("DgpSpec: variance must be > 0");
  return normal(mean, std::sqrt(variance));
}

DgpSpec DgpSpec::skew_normal(double location, double scale, double shape) {
  require_finite(location, "location");
  require_finite(scale, "scale");
  require_finite(shape, "shape");
  if (!(scale > 0.0)) throw std::invalid_argument("DgpSpec: scale must be > 0");
  return DgpSpec(SkewNormalDgp{location, scale, shape});
}

double sample_one(const DgpSpec& spec, RngStream& rng) {
  if (spec.is_normal()) {
    const auto& p = spec.as_normal();
    return p.mean + p.sd * rng.standard_normal();
  }
  const auto& p = spec.as_skew_normal();
  const double delta = skew_delta(p.shape);
  const double z0 = std::abs(rng.standard_normal());
  const double z1 = rng.standard_normal();
  return p.location +
         p.scale * (delta * z0 + std::sqrt(1.0 - delta * delta) * z1);
}

Dataset sample(const DgpSpec& spec, std::size_t n, RngStream& rng) {
  if (n < 1) throw std::invalid_argument("sample: n must be >= 1");
  std::vector<double> ys(n);
  for (auto& y : ys) y = sample_one(spec, rng);
  return Dataset(std::move(ys));
}

TrueMoments true_moments(const DgpSpec& spec) {
  if (spec.is_normal()) {
    const auto& p = spec.as_normal();
    const double s2 = p.sd * p.sd;
    return TrueMoments{p.mean, s2, 0.0, 3.0 * s2 * s2};
  }
  // Standard skew-normal central-moment identities with m = delta*sqrt(2/pi):
  //   mean     = location + scale*m
  //   variance = scale^2 (1 - m^2)
  //   mu3      = (4 - pi)/2 * m^3 * scale^3
  //   mu4      = (3 (1 - m^2)^2 + 2 (pi - 3) m^4) * scale^4
  const auto& p = spec.as_skew_normal();
  const double pi = std::numbers::pi;
  const double m = skew_delta(p.shape) * std::sqrt(2.0 / pi);
  const double m2 = m * m;
  const double w2 = p.scale * p.scale;
  TrueMoments tm;
  tm.mu = p.location + p.scale * m;
  tm.sigma_sq = w2 * (1.0 - m2);
  tm.mu3 = 0.5 * (4.0 - pi) * m2 * m * w2 * p.scale;
  tm.mu4 = (3.0 * (1.0 - m2) * (1.0 - m2) + 2.0 * (pi - 3.0) * m2 * m2) * w2 * w2;
  return tm;
}

MomentProducts true_products(const TrueMoments& tm) {
  return MomentProducts{tm.mu * tm.mu * tm.sigma_sq,
                        tm.sigma_sq * tm.sigma_sq,
                        tm.mu * tm.mu3,
                        tm.mu4,
                        tm.mu * tm.mu * tm.mu * tm.mu,
                        Provenance::analytic};
}

}  // namespace loovar
