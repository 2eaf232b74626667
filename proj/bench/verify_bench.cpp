// Serial reference vs. OpenMP grid verification on the same grid.

#include <benchmark/benchmark.h>

#include "ledin/oracle.hpp"

namespace {

ledin::GridRanges bench_grid(long n_max) {
  ledin::GridRanges grid = ledin::default_grid();
  grid.m = {0, 4};
  grid.n = {0, n_max};
  grid.r = {-4, 4};
  return grid;
}

void BM_VerifySerial(benchmark::State& state) {
  const auto grid = bench_grid(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ledin::verify_grid_serial(grid));
}

void BM_VerifyParallel(benchmark::State& state) {
  const auto grid = bench_grid(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ledin::verify_grid(grid));
}

}  // namespace

BENCHMARK(BM_VerifySerial)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_VerifyParallel)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
