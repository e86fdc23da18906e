#include "ral/greedy.hpp"

namespace ral {

std::size_t AvailableColumns::argmax(std::span<const double> row) const noexcept {
  std::size_t best = row.size();
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (taken_[j]) continue;
    if (best == row.size() || row[j] > row[best]) best = j;
  }
  return best;
}

namespace {

struct GreedyPass {
  std::vector<std::size_t> perm;
  std::vector<double> picks;
};

template <typename RowSource>
GreedyPass run_greedy(std::size_t n, RowSource&& next_row) {
  GreedyPass pass;
  pass.perm.reserve(n);
  pass.picks.reserve(n);
  AvailableColumns cols(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::span<const double> row = next_row(i);
    const std::size_t j = cols.argmax(row);
    cols.take(j);
    pass.perm.push_back(j);
    pass.picks.push_back(row[j]);
  }
  return pass;
}

double sum_in_order(const std::vector<double>& picks) {
  double sum = 0.0;
  for (double x : picks) sum += x;
  return sum;
}

}  // namespace

AssignmentResult greedy_assign(const CostMatrix& m) {
  auto pass = run_greedy(m.n(), [&](std::size_t i) { return m.row(i); });
  const double value = sum_in_order(pass.picks);
  return {Permutation(std::move(pass.perm)), value, Method::Greedy};
}

std::vector<double> greedy_marginals(const CostMatrix& m) {
  return run_greedy(m.n(), [&](std::size_t i) { return m.row(i); }).picks;
}

AssignmentResult greedy_assign_streamed(std::size_t n, DistributionKind dist, RunSeed seed) {
  if (n == 0) throw InvalidSize("greedy_assign_streamed requires n >= 1");
  auto stream = derive_stream(seed);
  std::vector<double> row(n);
  auto pass = run_greedy(n, [&](std::size_t) {
    stream.fill(dist, row);
    return std::span<const double>(row);
  });
  const double value = sum_in_order(pass.picks);
  return {Permutation(std::move(pass.perm)), value, Method::Greedy};
}

}  // namespace ral
