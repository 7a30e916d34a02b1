#include <benchmark/benchmark.h>

#include "fallkit/generators.hpp"
#include "fallkit/reductions.hpp"
#include "fallkit/solvers.hpp"
#include "fallkit/transforms.hpp"

using namespace fallkit;

static void BM_OracleCycle(benchmark::State& state) {
  Graph g = cycle(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(oracle_fall(g, 3).feasible);
}
BENCHMARK(BM_OracleCycle)->DenseRange(6, 12, 3);

static void BM_BacktrackCycle(benchmark::State& state) {
  Graph g = cycle(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(fall_decide_backtrack(g, 3).feasible);
}
BENCHMARK(BM_BacktrackCycle)->DenseRange(12, 48, 12);

static void BM_IncExcRandom(benchmark::State& state) {
  Graph g = gen_gnp(static_cast<int>(state.range(0)), 0.4, 7);
  for (auto _ : state)
    benchmark::DoNotOptimize(fall_count_incexc(g, 3).count);
}
BENCHMARK(BM_IncExcRandom)->DenseRange(10, 18, 2);

static void BM_PolyspaceRandom(benchmark::State& state) {
  Graph g = gen_gnp(static_cast<int>(state.range(0)), 0.4, 7);
  for (auto _ : state)
    benchmark::DoNotOptimize(fall_decide_polyspace(g, 3).feasible);
}
BENCHMARK(BM_PolyspaceRandom)->DenseRange(10, 18, 2);

static void BM_BacktrackReductionTarget(benchmark::State& state) {
  Graph g = gen_gnp(static_cast<int>(state.range(0)), 0.5, 3);
  auto [target, trace] = reduce_3col_to_fall3(g);
  for (auto _ : state)
    benchmark::DoNotOptimize(fall_decide_backtrack(target, 3).feasible);
}
BENCHMARK(BM_BacktrackReductionTarget)->DenseRange(4, 10, 2);

static void BM_MisEnumeration(benchmark::State& state) {
  Graph g = gen_gnp(static_cast<int>(state.range(0)), 0.3, 5);
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_mis(g).size());
}
BENCHMARK(BM_MisEnumeration)->DenseRange(12, 24, 4);

static void BM_FallSetOuterplanar(benchmark::State& state) {
  Graph g = gen_maximal_outerplanar(static_cast<int>(state.range(0)), 11);
  for (auto _ : state)
    benchmark::DoNotOptimize(fall_set(g).members.size());
}
BENCHMARK(BM_FallSetOuterplanar)->DenseRange(8, 16, 4);

BENCHMARK_MAIN();
