#include <benchmark/benchmark.h>

#include <cmath>
#include <random>

#include "domekit/dome.hpp"

using namespace domekit;

namespace {

IdealConfiguration random_configuration(std::size_t n) {
  std::mt19937_64 rng(n);
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<ExtendedComplex> pts;
  for (std::size_t k = 0; k < n; ++k) {
    const double x = g(rng), y = g(rng), z = g(rng);
    const double r = std::sqrt(x * x + y * y + z * z);
    pts.push_back(from_sphere({x / r, y / r, z / r}));
  }
  return IdealConfiguration(pts);
}

void BM_BuildHull(benchmark::State& state) {
  const IdealConfiguration cfg = random_configuration(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_hull(cfg));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BuildHull)->RangeMultiplier(2)->Range(4, 64)->Complexity();

void BM_BendingLamination(benchmark::State& state) {
  const HullPolyhedron hull = build_hull(random_configuration(32));
  for (auto _ : state) benchmark::DoNotOptimize(bending_lamination(hull));
}
BENCHMARK(BM_BendingLamination);

}  // namespace

BENCHMARK_MAIN();
