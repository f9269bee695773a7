#include <benchmark/benchmark.h>

#include "cubepack/bounds.hpp"
#include "cubepack/codes.hpp"
#include "cubepack/coloring.hpp"

using namespace cubepack;

static void BM_MinDistance(benchmark::State& state) {
  const int i = static_cast<int>(state.range(0));
  const int m = static_cast<int>(state.range(1));
  for (auto _ : state) {
    // fresh object each round, the cache would short-circuit otherwise
    LinearCode code = code_A(i, m);
    benchmark::DoNotOptimize(code.min_distance());
  }
}
BENCHMARK(BM_MinDistance)->Args({0, 4})->Args({1, 5})->Args({2, 6});

static void BM_MinWeightScanExtended5(benchmark::State& state) {
  for (auto _ : state) {
    LinearCode code = extended_hamming_code(5);  // 2^26 codewords
    benchmark::DoNotOptimize(code.min_distance());
  }
}
BENCHMARK(BM_MinWeightScanExtended5)->Unit(benchmark::kMillisecond);

static void BM_NarrowedCode(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(narrowed_code(0, ceil_log2(n), n));
  }
}
BENCHMARK(BM_NarrowedCode)->Arg(9)->Arg(13)->Arg(20);

static void BM_ConstructColoring(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(construct_packing_coloring(n));
  }
}
BENCHMARK(BM_ConstructColoring)->Arg(8)->Arg(12)->Arg(16)
    ->Unit(benchmark::kMillisecond);

static void BM_VerifyColoring(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  PackingColoring pc = construct_packing_coloring(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_packing_coloring(pc));
  }
}
BENCHMARK(BM_VerifyColoring)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_BoundTable(benchmark::State& state) {
  for (auto _ : state) {
    for (int n = 5; n <= 64; ++n) {
      benchmark::DoNotOptimize(general_upper_bound(n));
      benchmark::DoNotOptimize(torres_bound(n));
    }
  }
}
BENCHMARK(BM_BoundTable);

BENCHMARK_MAIN();
