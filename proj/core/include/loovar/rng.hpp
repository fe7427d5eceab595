// Seedable, splittable random streams for deterministic parallel simulation.
//
// The engine is std::mt19937_64 (output standardized across platforms) and all
// variate transforms are implemented here, so a given (seed, stream path)
// yields identical draws on every platform and at every worker count.

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <stdexcept>

namespace loovar {

// SplitMix64 finalizer keyed by a stream index. Used to derive child stream
// seeds; distinct (base, index) pairs map to well-spread 64-bit seeds.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : base_(seed), engine_(seed) {}

  // Child stream addressed by index; independent of this stream's draw state.
  RngStream derived(std::uint64_t index) const {
    return RngStream(derive_seed(base_, index));
  }

  std::uint64_t seed() const { return base_; }

  // U(0,1) with 53 random bits, never exactly 0 or 1.
  double uniform() {
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
  }

  // Box-Muller, one variate per call.
  double standard_normal() {
    const double u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
  }

  // Marsaglia-Tsang squeeze method; alpha < 1 handled by boosting.
  double gamma(double alpha) {
    if (!(alpha > 0.0)) throw std::invalid_argument("gamma: alpha must be > 0");
    if (alpha < 1.0) {
      const double boost = std::pow(uniform(), 1.0 / alpha);
      return boost * gamma(alpha + 1.0);
    }
    const double d = alpha - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
      double x;
      double v;
      do {
        x = standard_normal();
        v = 1.0 + c * x;
      } while (v <= 0.0);
      v = v * v * v;
      const double u = uniform();
      if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
      if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
    }
  }

 private:
  std::uint64_t base_;
  std::mt19937_64 engine_;
};

}  // namespace loovar
