#include <benchmark/benchmark.h>

#include "ral/sampling.hpp"

namespace {

void BM_GenMatrix(benchmark::State& state) {
  const auto dist = static_cast<ral::DistributionKind>(state.range(0));
  const auto n = static_cast<std::size_t>(state.range(1));
  std::uint64_t trial = 0;
  for (auto _ : state) benchmark::DoNotOptimize(ral::gen_matrix(n, dist, {3, trial++}).entries().data());
  state.SetItemsProcessed(state.iterations() * state.range(1) * state.range(1));
}
BENCHMARK(BM_GenMatrix)->ArgsProduct({{0, 1, 2}, {64, 1024}});

void BM_Gaussian(benchmark::State& state) {
  auto stream = ral::derive_stream({3, 0});
  for (auto _ : state) benchmark::DoNotOptimize(stream.gaussian());
}
BENCHMARK(BM_Gaussian);

}  // namespace

BENCHMARK_MAIN();
