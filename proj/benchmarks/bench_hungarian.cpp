#include <benchmark/benchmark.h>

#include "ral/sampling.hpp"
#include "ral/solver.hpp"

namespace {

void BM_HungarianMax(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto m = ral::gen_matrix(n, ral::DistributionKind::Gaussian, {2, 0});
  for (auto _ : state) benchmark::DoNotOptimize(ral::hungarian_max(m).value);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_HungarianMax)->RangeMultiplier(2)->Range(8, 1024)->Unit(benchmark::kMicrosecond)->Complexity(benchmark::oNCubed);

void BM_HungarianMinExponential(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto m = ral::gen_matrix(n, ral::DistributionKind::Exponential, {2, 1});
  for (auto _ : state) benchmark::DoNotOptimize(ral::hungarian_min(m).value);
}
BENCHMARK(BM_HungarianMinExponential)->Arg(10)->Arg(100)->Arg(500)->Unit(benchmark::kMicrosecond);

void BM_BruteForce(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto m = ral::gen_matrix(n, ral::DistributionKind::Gaussian, {2, 2});
  for (auto _ : state) benchmark::DoNotOptimize(ral::brute_force_max(m).value);
}
BENCHMARK(BM_BruteForce)->DenseRange(4, 8)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
