#include "ral/solver.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

namespace ral {

namespace {
// Slack differences below this count as ties; the smaller column index wins.
constexpr double kSlackTolerance = 1e-12;
}  // namespace

SolverLimits::SolverLimits(std::size_t brute_force_max_n) : max_n_(brute_force_max_n) {
  if (max_n_ > kHardCeiling) {
    throw DomainError("brute_force_max_n must be <= " + std::to_string(kHardCeiling));
  }
}

AssignmentResult brute_force_max(const CostMatrix& m, const SolverLimits& limits) {
  const std::size_t n = m.n();
  if (n > limits.brute_force_max_n()) {
    throw SizeExceeded("brute force limited to n <= " +
                       std::to_string(limits.brute_force_max_n()) + ", got " + std::to_string(n));
  }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::vector<std::size_t> best = perm;
  double best_value = -std::numeric_limits<double>::infinity();
  do {
    double v = 0.0;
    for (std::size_t i = 0; i < n; ++i) v += m(i, perm[i]);
    if (v > best_value) {
      best_value = v;
      best = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {Permutation(std::move(best)), best_value, Method::BruteForce};
}

AssignmentResult hungarian_min(const CostMatrix& m) {
  const std::size_t n = m.n();
  constexpr double inf = std::numeric_limits<double>::infinity();
  // 1-based internally; column 0 is the virtual root of each augmenting tree.
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0), min_slack(n + 1);
  std::vector<std::size_t> row_of(n + 1, 0), way(n + 1, 0);
  std::vector<char> used(n + 1);

  for (std::size_t i = 1; i <= n; ++i) {
    row_of[0] = i;
    std::size_t col = 0;
    std::fill(min_slack.begin(), min_slack.end(), inf);
    std::fill(used.begin(), used.end(), 0);
    do {
      used[col] = 1;
      const std::size_t row = row_of[col];
      double delta = inf;
      std::size_t next = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double reduced = m(row - 1, j - 1) - u[row] - v[j];
        if (reduced < min_slack[j]) {
          min_slack[j] = reduced;
          way[j] = col;
        }
        if (next == 0 || min_slack[j] < delta - kSlackTolerance) {
          delta = min_slack[j];
          next = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[row_of[j]] += delta;
          v[j] -= delta;
        } else {
          min_slack[j] -= delta;
        }
      }
      col = next;
    } while (row_of[col] != 0);
    // Flip the alternating path back to the root.
    do {
      const std::size_t prev = way[col];
      row_of[col] = row_of[prev];
      col = prev;
    } while (col != 0);
  }

  std::vector<std::size_t> perm(n);
  for (std::size_t j = 1; j <= n; ++j) perm[row_of[j] - 1] = j - 1;
  Permutation p(std::move(perm));
  const double value = assignment_value(m, p);
  return {std::move(p), value, Method::Hungarian};
}

AssignmentResult hungarian_max(const CostMatrix& m) {
  AssignmentResult r = hungarian_min(m.negated());
  r.value = -r.value;
  return r;
}

}  // namespace ral
