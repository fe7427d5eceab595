#include "loovar/bootstrap.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "loovar/summation.hpp"

namespace loovar {

double sorted_quantile(std::span<const double> sorted, double p) {
  if (sorted.empty()) throw std::invalid_argument("sorted_quantile: empty sample");
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("sorted_quantile: p must be in [0, 1]");
  const double h = p * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(h);
  if (lo + 1 >= sorted.size()) return sorted.back();
  const double frac = h - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

BootstrapSummary bayesian_bootstrap(std::span<const double> values,
                                    std::size_t draws, double alpha,
                                    RngStream& rng) {
  const std::size_t m = values.size();
  if (m < 2) throw std::invalid_argument("bayesian_bootstrap: need at least 2 values");
  if (draws < 2) throw std::invalid_argument("bayesian_bootstrap: need at least 2 draws");
  if (!(alpha > 0.0) || !std::isfinite(alpha))
    throw std::invalid_argument("bayesian_bootstrap: alpha must be finite and > 0");

  std::vector<double> weighted(m);
  std::vector<double> draw_means(draws);
  std::vector<double> w(m);
  for (std::size_t t = 0; t < draws; ++t) {
    for (auto& wi : w) wi = rng.gamma(alpha);
    const double total = pairwise_sum(w);
    for (std::size_t i = 0; i < m; ++i) weighted[i] = w[i] / total * values[i];
    draw_means[t] = pairwise_sum(weighted);
  }

  const double mean = pairwise_mean(draw_means);
  std::sort(draw_means.begin(), draw_means.end());
  return BootstrapSummary{mean, sorted_quantile(draw_means, 0.025),
                          sorted_quantile(draw_means, 0.975), draws};
}

}  // namespace loovar
