// Microbenchmarks for the estimator hot paths and one full replication.

#include <benchmark/benchmark.h>

#include <vector>

#include "loovar/bootstrap.hpp"
#include "loovar/dgp.hpp"
#include "loovar/normal_model.hpp"
#include "loovar/rng.hpp"
#include "loovar/variance.hpp"

namespace {

const loovar::ModelConfig kModel(1.44, 4.0);
const loovar::DgpSpec kDgp = loovar::DgpSpec::normal(0.0, 1.2);

loovar::Dataset make_data(std::size_t n) {
  loovar::RngStream rng(n);
  return loovar::sample(kDgp, n, rng);
}

void BM_loo_pointwise_elpd(benchmark::State& state) {
  const auto data = make_data(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(loovar::loo_pointwise_elpd(kModel, data));
  }
}
BENCHMARK(BM_loo_pointwise_elpd)->Arg(16)->Arg(256)->Arg(4096);

void BM_raw_moments(benchmark::State& state) {
  const auto data = make_data(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(loovar::raw_moments(data));
  }
}
BENCHMARK(BM_raw_moments)->Arg(16)->Arg(256)->Arg(4096);

void BM_unbiased_variance(benchmark::State& state) {
  const auto data = make_data(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(loovar::unbiased_variance(kModel, data));
  }
}
BENCHMARK(BM_unbiased_variance)->Arg(16)->Arg(256)->Arg(4096);

void BM_bayesian_bootstrap(benchmark::State& state) {
  const std::size_t m = static_cast<std::size_t>(state.range(0));
  loovar::RngStream data_rng(7);
  std::vector<double> values(m);
  for (auto& v : values) v = data_rng.standard_normal();
  for (auto _ : state) {
    loovar::RngStream rng(11);
    benchmark::DoNotOptimize(loovar::bayesian_bootstrap(values, 100, 1.0, rng));
  }
}
BENCHMARK(BM_bayesian_bootstrap)->Arg(200)->Arg(2000);

// sample + pointwise elpd + both estimators, as run per replication
void BM_full_replication(benchmark::State& state) {
  std::uint64_t rep = 0;
  const loovar::RngStream root(42);
  for (auto _ : state) {
    loovar::RngStream stream = root.derived(rep++);
    const auto data = loovar::sample(kDgp, 16, stream);
    const auto pe = loovar::loo_pointwise_elpd(kModel, data);
    benchmark::DoNotOptimize(loovar::naive_variance(pe));
    benchmark::DoNotOptimize(loovar::unbiased_variance(kModel, data));
  }
}
BENCHMARK(BM_full_replication);

}  // namespace

BENCHMARK_MAIN();
