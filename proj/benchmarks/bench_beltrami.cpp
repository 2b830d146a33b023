#include <benchmark/benchmark.h>

#include "domekit/qc.hpp"

using namespace domekit;

namespace {

void BM_BeltramiEstimate(benchmark::State& state) {
  const Fixture f = make_fixture("power", static_cast<std::size_t>(state.range(0)), 2.0);
  for (auto _ : state) benchmark::DoNotOptimize(beltrami_estimate(f.sample, 1));
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}
BENCHMARK(BM_BeltramiEstimate)->Arg(128)->Arg(256)->Arg(512);

void BM_VerifyScaling(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_scaling_dilatation(Complex(0.0, 2.0), 1.5707963267948966, 256, 1));
}
BENCHMARK(BM_VerifyScaling);

}  // namespace

BENCHMARK_MAIN();
