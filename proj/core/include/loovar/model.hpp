// Model configuration and observed-data value types.

#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "loovar/summation.hpp"

namespace loovar {

// Fixed hyperparameters of the normal model: data variance and prior variance.
// The prior mean is fixed at zero and is not configurable.
struct ModelConfig {
  double sigma_m_sq;
  double sigma_0_sq;

  ModelConfig(double sigma_m_sq_, double sigma_0_sq_)
      : sigma_m_sq(sigma_m_sq_), sigma_0_sq(sigma_0_sq_) {
    if (!(std::isfinite(sigma_m_sq) && sigma_m_sq > 0.0))
      throw std::invalid_argument("ModelConfig: sigma_m_sq must be finite and > 0");
    if (!(std::isfinite(sigma_0_sq) && sigma_0_sq > 0.0))
      throw std::invalid_argument("ModelConfig: sigma_0_sq must be finite and > 0");
  }
};

// Ordered sample of finite observations. Consumers impose their own minimum
// size (pointwise elpd needs n >= 2, the moment estimators need n >= 4).
class Dataset {
 public:
  explicit Dataset(std::vector<double> values) : y_(std::move(values)) {
    if (y_.empty()) throw std::invalid_argument("Dataset: empty sample");
    for (double v : y_) {
      if (!std::isfinite(v))
        throw std::invalid_argument("Dataset: non-finite observation");
    }
  }

  std::span<const double> values() const { return y_; }
  std::size_t size() const { return y_.size(); }
  double operator[](std::size_t i) const { return y_[i]; }

  double mean() const { return pairwise_mean(y_); }

 private:
  std::vector<double> y_;
};

}  // namespace loovar
