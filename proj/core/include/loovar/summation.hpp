// Pairwise (tree) reduction helpers used for all floating-point accumulation.

#pragma once

#include <cstddef>
#include <span>

namespace loovar {

namespace detail {

inline double pairwise_sum_impl(std::span<const double> xs) {
  // Below the block size a sequential loop is both faster and accurate enough.
  constexpr std::size_t kBlock = 32;
  if (xs.size() <= kBlock) {
    double acc = 0.0;
    for (double x : xs) acc += x;
    return acc;
  }
  const std::size_t half = xs.size() / 2;
  return pairwise_sum_impl(xs.first(half)) + pairwise_sum_impl(xs.subspan(half));
}

}  // namespace detail

// Sum with O(log n) rounding-error growth. The tree shape depends only on the
// length, so equal inputs give bitwise-equal sums.
inline double pairwise_sum(std::span<const double> xs) {
  return detail::pairwise_sum_impl(xs);
}

inline double pairwise_mean(std::span<const double> xs) {
  return pairwise_sum(xs) / static_cast<double>(xs.size());
}

}  // namespace loovar
