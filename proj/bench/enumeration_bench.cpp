// Parallel enumeration kernel against the serial reference.

#include <benchmark/benchmark.h>

#include "hoffman/enumeration.hpp"

namespace {

void BM_Serial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int chi = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(hoffman::enumerate_hoffman_serial(n, chi).counts.total);
}

void BM_Parallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int chi = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(hoffman::enumerate_hoffman(n, chi).counts.total);
}

void cases(benchmark::internal::Benchmark* b) {
  b->Args({12, 3})->Args({14, 3})->Args({15, 4})->Args({16, 5})->Unit(benchmark::kMillisecond)->UseRealTime();
}

}  // namespace

BENCHMARK(BM_Serial)->Apply(cases);
BENCHMARK(BM_Parallel)->Apply(cases);

BENCHMARK_MAIN();
