#include <benchmark/benchmark.h>

#include <random>

#include "domekit/hyperbolic.hpp"
#include "domekit/lamination.hpp"

using namespace domekit;

namespace {

// Nested leaves cutting off shrinking arcs around angle pi.
FiniteLamination nested(std::size_t n) {
  std::vector<GeodesicH2> leaves;
  std::vector<double> weights;
  for (std::size_t k = 0; k < n; ++k) {
    const double h = 3.0 * std::pow(0.93, static_cast<double>(k));
    leaves.emplace_back(kPi - h, kPi + h);
    weights.push_back(1.0);
  }
  return {leaves, weights};
}

void BM_Roundness(benchmark::State& state) {
  const FiniteLamination lam = nested(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(roundness(lam));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Roundness)->RangeMultiplier(2)->Range(2, 64)->Complexity();

void BM_SampledRoundness(benchmark::State& state) {
  const FiniteLamination lam = nested(16);
  for (auto _ : state) benchmark::DoNotOptimize(sampled_roundness(lam, 10000, 1));
}
BENCHMARK(BM_SampledRoundness);

}  // namespace

BENCHMARK_MAIN();
