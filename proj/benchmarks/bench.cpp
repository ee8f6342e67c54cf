#include <benchmark/benchmark.h>

#include <random>

#include "l2lab/catalog.hpp"
#include "l2lab/decisions.hpp"
#include "l2lab/homology.hpp"
#include "l2lab/script.hpp"
#include "l2lab/subdivision.hpp"

using namespace l2lab;

static void BM_Cubulation(benchmark::State& state) {
  const auto L = special_complex("polygon", static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(davis_pl(L));
}
BENCHMARK(BM_Cubulation)->Arg(5)->Arg(8)->Arg(10);

static void BM_IntegralHomology(benchmark::State& state) {
  const auto X = davis_pl(special_complex("polygon", static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(integral_homology(X));
}
BENCHMARK(BM_IntegralHomology)->Arg(5)->Arg(8);

static void BM_CoverTower(benchmark::State& state) {
  const auto X = davis_pl(special_complex("polygon", 5));
  for (auto _ : state) benchmark::DoNotOptimize(growth_series(X, {{1}, {2}, {3}}, 3));
}
BENCHMARK(BM_CoverTower)->Unit(benchmark::kMillisecond);

static void BM_OctahedronScript(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_script(script_octahedron(n, {})));
}
BENCHMARK(BM_OctahedronScript)->Arg(2)->Arg(3)->Arg(4);

static void BM_DeriveBarycentric(benchmark::State& state) {
  const auto L = special_complex("bary-boundary-simplex", static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(derive(L, 0));
}
BENCHMARK(BM_DeriveBarycentric)->Arg(2)->Arg(3)->Arg(4);

static void BM_Trivalent(benchmark::State& state) {
  const auto G = special_complex("petersen");
  for (auto _ : state) benchmark::DoNotOptimize(trivalent_decision(G));
}
BENCHMARK(BM_Trivalent);
BENCHMARK_MAIN();
