#include <benchmark/benchmark.h>

#include <cmath>
#include <random>

#include "domekit/dome.hpp"

using namespace domekit;

namespace {

void BM_Retract(benchmark::State& state) {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<ExtendedComplex> pts;
  for (int k = 0; k < state.range(0); ++k) {
    const double x = g(rng), y = g(rng), z = g(rng);
    const double r = std::sqrt(x * x + y * y + z * z);
    pts.push_back(from_sphere({x / r, y / r, z / r}));
  }
  const HullPolyhedron hull = build_hull(IdealConfiguration(pts));
  std::uniform_real_distribution<double> u(-0.5, 0.5);
  std::vector<Complex> queries;
  for (int k = 0; k < 256; ++k) queries.emplace_back(u(rng), u(rng));
  std::size_t i = 0;
  for (auto _ : state) {
    try {
      benchmark::DoNotOptimize(retract(hull, queries[i++ % queries.size()]));
    } catch (const Error&) {
    }
  }
}
BENCHMARK(BM_Retract)->Arg(8)->Arg(32)->Arg(64);

void BM_InjectivityRadius(benchmark::State& state) {
  const HullPolyhedron hull = build_hull(IdealConfiguration({Complex(0.0), Complex(1.0), ExtendedComplex::infinity()}));
  for (auto _ : state) benchmark::DoNotOptimize(dome_injectivity_radius(hull, 0, PointH3(0.5, 0.0, 0.8660254037844386)));
}
BENCHMARK(BM_InjectivityRadius);

}  // namespace

BENCHMARK_MAIN();
