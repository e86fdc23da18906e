#pragma once

#include "ral/core.hpp"

namespace ral {

/// Size cap for exhaustive enumeration. 10! ~ 3.6e6 permutations is the ceiling.
class SolverLimits {
 public:
  static constexpr std::size_t kHardCeiling = 10;

  SolverLimits() = default;
  /// Throws DomainError above kHardCeiling.
  explicit SolverLimits(std::size_t brute_force_max_n);

  std::size_t brute_force_max_n() const noexcept { return max_n_; }

 private:
  std::size_t max_n_ = 8;
};

/// Exhaustive maximum over all n! permutations in lexicographic order; on ties
/// the lexicographically smallest permutation wins. Throws SizeExceeded when
/// n > limits.brute_force_max_n().
AssignmentResult brute_force_max(const CostMatrix& m, const SolverLimits& limits = {});

/// Exact minimum-cost perfect matching by successive shortest augmenting
/// paths with row/column potentials, O(n^3).
AssignmentResult hungarian_min(const CostMatrix& m);

/// hungarian_min on the negated matrix, value negated back.
AssignmentResult hungarian_max(const CostMatrix& m);

}  // namespace ral
