#pragma once

#include <vector>

#include "ral/core.hpp"
#include "ral/sampling.hpp"

namespace ral {

/// Columns not yet taken by earlier rows of the greedy pass.
class AvailableColumns {
 public:
  explicit AvailableColumns(std::size_t n) : taken_(n, 0), remaining_(n) {}

  std::size_t remaining() const noexcept { return remaining_; }
  bool available(std::size_t col) const noexcept { return !taken_[col]; }

  /// Largest available entry of `row`, ties to the smallest column index.
  /// Requires remaining() > 0.
  std::size_t argmax(std::span<const double> row) const noexcept;

  void take(std::size_t col) noexcept {
    taken_[col] = 1;
    --remaining_;
  }

 private:
  std::vector<char> taken_;
  std::size_t remaining_;
};

/// Rows in natural order, each picks its largest still-available column.
AssignmentResult greedy_assign(const CostMatrix& m);

/// The per-row picks m(i, pi*(i)); they sum to greedy_assign(m).value.
std::vector<double> greedy_marginals(const CostMatrix& m);

/// Same result as greedy_assign(gen_matrix(n, dist, seed)) but draws one row
/// at a time, so memory is O(n) instead of O(n^2).
AssignmentResult greedy_assign_streamed(std::size_t n, DistributionKind dist, RunSeed seed);

}  // namespace ral
