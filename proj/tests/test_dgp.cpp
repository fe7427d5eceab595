// Tests for the data-generating processes: sampler moments against exact
// moments, closed-form moments against quadrature, reproducibility.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "loovar/dgp.hpp"
#include "loovar/rng.hpp"
#include "support/oracles.hpp"

using namespace loovar;
namespace oracle = loovar::testing;

namespace {

struct SampleMoments {
  // central moments m[2..8] (index by order), plus the mean
  double mean;
  std::array<double, 9> m;
};

SampleMoments central_moments(std::span<const double> x) {
  SampleMoments sm{};
  sm.mean = oracle::sample_mean(x);
  for (double v : x) {
    const double d = v - sm.mean;
    double p = d;
    for (int k = 2; k <= 8; ++k) {
      p *= d;
      sm.m[static_cast<std::size_t>(k)] += p;
    }
  }
  for (int k = 2; k <= 8; ++k)
    sm.m[static_cast<std::size_t>(k)] /= static_cast<double>(x.size());
  return sm;
}

// Delta-method standard errors of the sample mean and sample central moments,
// with empirical higher moments plugged in.
void check_sampler_moments(const DgpSpec& spec, std::uint64_t seed) {
  constexpr std::size_t kDraws = 1000000;
  RngStream rng(seed);
  std::vector<double> x(kDraws);
  for (auto& v : x) v = sample_one(spec, rng);

  const auto sm = central_moments(x);
  const auto tm = true_moments(spec);
  const double n = static_cast<double>(kDraws);
  const auto& m = sm.m;

  const double se_mean = std::sqrt(m[2] / n);
  const double se_m2 = std::sqrt((m[4] - m[2] * m[2]) / n);
  const double se_m3 =
      std::sqrt((m[6] - m[3] * m[3] - 6.0 * m[2] * m[4] + 9.0 * m[2] * m[2] * m[2]) / n);
  const double se_m4 = std::sqrt(
      (m[8] - m[4] * m[4] - 8.0 * m[3] * m[5] + 16.0 * m[2] * m[3] * m[3]) / n);

  CHECK(std::abs(sm.mean - tm.mu) < 5.0 * se_mean);
  CHECK(std::abs(m[2] - tm.sigma_sq) < 5.0 * se_m2);
  CHECK(std::abs(m[3] - tm.mu3) < 5.0 * se_m3);
  CHECK(std::abs(m[4] - tm.mu4) < 5.0 * se_m4);
}

}  // namespace

TEST_CASE("normal sampler matches its moments") {
  check_sampler_moments(DgpSpec::normal(0.0, 1.2), 71);
  check_sampler_moments(DgpSpec::normal(2.0, 0.1), 72);
}

TEST_CASE("skew-normal sampler matches its moments") {
  check_sampler_moments(DgpSpec::skew_normal(-2.0, 0.16, 10.0), 73);
  check_sampler_moments(DgpSpec::skew_normal(1.0, 2.0, -4.0), 74);
}

TEST_CASE("skew-normal with shape 0 collapses to the normal") {
  const auto tm = true_moments(DgpSpec::skew_normal(0.7, 1.3, 0.0));
  CHECK(tm.mu == doctest::Approx(0.7).epsilon(1e-14));
  CHECK(tm.sigma_sq == doctest::Approx(1.69).epsilon(1e-14));
  CHECK(tm.mu3 == 0.0);  // delta = 0 zeroes the skew term exactly
  CHECK(tm.mu4 == doctest::Approx(3.0 * 1.69 * 1.69).epsilon(1e-14));
  check_sampler_moments(DgpSpec::skew_normal(0.7, 1.3, 0.0), 75);
}

TEST_CASE("normal true moments") {
  const auto tm = true_moments(DgpSpec::normal(0.0, 1.2));
  CHECK(tm.mu == 0.0);
  CHECK(tm.sigma_sq == doctest::Approx(1.44).epsilon(1e-14));
  CHECK(tm.mu3 == 0.0);
  CHECK(tm.mu4 == doctest::Approx(6.2208).epsilon(1e-14));
}

TEST_CASE("normal spec accepts a variance reading") {
  const auto tm = true_moments(DgpSpec::normal_with_variance(2.0, 0.01));
  CHECK(tm.sigma_sq == doctest::Approx(0.01).epsilon(1e-14));
  const auto tm_sd = true_moments(DgpSpec::normal(2.0, 0.1));
  CHECK(tm.sigma_sq == doctest::Approx(tm_sd.sigma_sq).epsilon(1e-14));
}

TEST_CASE("skew-normal closed-form moments agree with quadrature") {
  const struct {
    double location, scale, shape;
  } cases[] = {
      {-2.0, 0.16, 10.0},  // the experiment's third DGP
      {0.0, 1.0, 2.0},
      {1.3, 0.7, -3.0},
      {5.0, 2.5, 0.5},
  };
  for (const auto& c : cases) {
    const auto tm = true_moments(DgpSpec::skew_normal(c.location, c.scale, c.shape));
    const auto q =
        oracle::skew_normal_moments_quadrature(c.location, c.scale, c.shape);
    CHECK(std::abs(tm.mu - q.mu) < 1e-8);
    CHECK(std::abs(tm.sigma_sq - q.sigma_sq) < 1e-8);
    CHECK(std::abs(tm.mu3 - q.mu3) < 1e-8);
    CHECK(std::abs(tm.mu4 - q.mu4) < 1e-8);
  }
}

TEST_CASE("extreme shape drives the mean to location +- scale sqrt(2/pi)") {
  const double limit = std::sqrt(2.0 / std::numbers::pi);
  const auto hi = true_moments(DgpSpec::skew_normal(0.0, 1.0, 1e4));
  CHECK(std::abs(hi.mu - limit) < 1e-3);
  const auto lo = true_moments(DgpSpec::skew_normal(0.0, 1.0, -1e4));
  CHECK(std::abs(lo.mu + limit) < 1e-3);
}

TEST_CASE("true products packs the five moment products") {
  const auto p1 = true_products(TrueMoments{0.0, 1.0, 0.0, 3.0});
  CHECK(p1.mu2_sigma2 == 0.0);
  CHECK(p1.sigma4 == 1.0);
  CHECK(p1.mu_mu3 == 0.0);
  CHECK(p1.mu4_central == 3.0);
  CHECK(p1.mu4_power == 0.0);
  CHECK(p1.provenance == Provenance::analytic);

  const auto p2 = true_products(TrueMoments{2.0, 0.01, 0.0, 3e-4});
  CHECK(p2.mu2_sigma2 == doctest::Approx(0.04).epsilon(1e-14));
  CHECK(p2.sigma4 == doctest::Approx(1e-4).epsilon(1e-14));
  CHECK(p2.mu_mu3 == 0.0);
  CHECK(p2.mu4_central == doctest::Approx(3e-4).epsilon(1e-14));
  CHECK(p2.mu4_power == doctest::Approx(16.0).epsilon(1e-14));
}

TEST_CASE("samplers are reproducible and streams are order-independent") {
  const auto spec = DgpSpec::skew_normal(-2.0, 0.16, 10.0);
  RngStream a(99);
  RngStream b(99);
  const Dataset da = sample(spec, 32, a);
  const Dataset db = sample(spec, 32, b);
  for (std::size_t i = 0; i < 32; ++i) CHECK(da[i] == db[i]);

  // derived streams do not depend on the parent's draw position
  RngStream parent(123);
  const RngStream child_before = parent.derived(5);
  (void)parent.uniform();
  const RngStream child_after = parent.derived(5);
  RngStream c1 = child_before, c2 = child_after;
  CHECK(c1.uniform() == c2.uniform());
}

TEST_CASE("invalid specs are rejected at construction") {
  CHECK_THROWS_AS(DgpSpec::normal(0.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(DgpSpec::normal(0.0, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(DgpSpec::normal(std::nan(""), 1.0), std::invalid_argument);
  CHECK_THROWS_AS(DgpSpec::normal_with_variance(0.0, -4.0), std::invalid_argument);
  CHECK_THROWS_AS(DgpSpec::skew_normal(0.0, 0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(DgpSpec::skew_normal(0.0, 1.0, std::nan("")),
                  std::invalid_argument);
}

TEST_CASE("sample rejects n = 0") {
  const auto spec = DgpSpec::normal(0.0, 1.0);
  RngStream rng(1);
  CHECK_THROWS_AS(sample(spec, 0, rng), std::invalid_argument);
}
