#include <benchmark/benchmark.h>

#include "ral/greedy.hpp"
#include "ral/sampling.hpp"

namespace {

void BM_GreedyAssign(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto m = ral::gen_matrix(n, ral::DistributionKind::Gaussian, {1, 0});
  for (auto _ : state) benchmark::DoNotOptimize(ral::greedy_assign(m).value);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_GreedyAssign)->RangeMultiplier(4)->Range(16, 4096)->Complexity(benchmark::oNSquared);

// Generation and greedy in one pass, the per-trial cost of a greedy experiment.
void BM_GreedyStreamed(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::uint64_t trial = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ral::greedy_assign_streamed(n, ral::DistributionKind::Gaussian, {1, trial++}).value);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}
BENCHMARK(BM_GreedyStreamed)->RangeMultiplier(4)->Range(16, 4096);

}  // namespace

BENCHMARK_MAIN();
