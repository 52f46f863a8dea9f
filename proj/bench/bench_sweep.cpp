// Parallel vs serial family classification over a p range.

#include <benchmark/benchmark.h>

#include "steinobd/sweep.hpp"

namespace {

std::vector<steinobd::FamilyParams> make_batch(int64_t count, int64_t n) {
  steinobd::FamilyParams base;
  base.variant = steinobd::Variant::B;
  base.m0 = 3;
  base.m1 = 4;
  base.m2 = 1;
  base.n = n;
  return steinobd::p_range(base, 1, count);
}

void BM_SweepSerial(benchmark::State& state) {
  auto batch = make_batch(state.range(0), 3);
  for (auto _ : state) benchmark::DoNotOptimize(steinobd::classify_batch_serial(batch));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SweepParallel(benchmark::State& state) {
  auto batch = make_batch(state.range(0), 3);
  for (auto _ : state) benchmark::DoNotOptimize(steinobd::classify_batch(batch));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

} // namespace

BENCHMARK(BM_SweepSerial)->Arg(100)->Arg(1000);
BENCHMARK(BM_SweepParallel)->Arg(100)->Arg(1000);

BENCHMARK_MAIN();
