#include <benchmark/benchmark.h>

#include "ral/stats.hpp"

namespace {

void BM_ExactMaxMoments(benchmark::State& state) {
  const std::int64_t m = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(ral::exact_max_moments(m).mean);
}
BENCHMARK(BM_ExactMaxMoments)->RangeMultiplier(100)->Range(1, 10'000'000)->Unit(benchmark::kMicrosecond);

void BM_MomentPrefix(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ral::exact_max_moment_prefix(state.range(0)).back().mean);
}
BENCHMARK(BM_MomentPrefix)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
