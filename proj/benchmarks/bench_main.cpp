#include <benchmark/benchmark.h>

#include "sawlab/families.hpp"
#include "sawlab/graph.hpp"
#include "sawlab/height.hpp"
#include "sawlab/isomorphism.hpp"
#include "sawlab/quotient.hpp"
#include "sawlab/registry.hpp"
#include "sawlab/saw.hpp"

namespace {

void BM_CountSquare(benchmark::State& state) {
  auto fam = sawlab::parse_family("z:2");
  auto hf = sawlab::default_height(fam);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto c = sawlab::count_walks(*fam, hf.get(), fam->origin(), n, false, {});
    benchmark::DoNotOptimize(c.saw.back());
  }
}
BENCHMARK(BM_CountSquare)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

void BM_BridgesHex(benchmark::State& state) {
  auto fam = sawlab::parse_family("hex");
  auto hf = sawlab::default_height(fam);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto c = sawlab::count_walks(*fam, hf.get(), fam->origin(), n, true, {});
    benchmark::DoNotOptimize(c.bridge.back());
  }
}
BENCHMARK(BM_BridgesHex)->DenseRange(8, 14, 3)->Unit(benchmark::kMillisecond);

void BM_BallIsomorphism(benchmark::State& state) {
  auto plane = sawlab::parse_family("z:2");
  auto cyl = sawlab::cylinder(2, {0, 10});
  const int radius = static_cast<int>(state.range(0));
  const auto a = sawlab::ball(*plane, plane->origin(), radius);
  const auto b = sawlab::ball(*cyl, cyl->origin(), radius);
  for (auto _ : state) benchmark::DoNotOptimize(sawlab::ball_isomorphic(a, b));
}
BENCHMARK(BM_BallIsomorphism)->DenseRange(2, 5)->Unit(benchmark::kMicrosecond);

}  // namespace
BENCHMARK_MAIN();
