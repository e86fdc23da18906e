#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "ral/errors.hpp"

namespace ral {

/// Law that generated the entries of a cost matrix.
enum class DistributionKind { Gaussian, Exponential, Uniform };

std::string_view to_string(DistributionKind kind);

/// Dense n x n matrix of finite costs, row-major. Immutable once built.
class CostMatrix {
 public:
  /// Takes ownership of `entries` (row-major, size n*n). Throws InvalidSize
  /// when n == 0 or the size is wrong, DomainError on a non-finite entry.
  CostMatrix(std::size_t n, std::vector<double> entries,
             DistributionKind label = DistributionKind::Gaussian);

  /// Builds from nested rows; every row must have rows.size() entries.
  static CostMatrix from_rows(const std::vector<std::vector<double>>& rows,
                              DistributionKind label = DistributionKind::Gaussian);

  std::size_t n() const noexcept { return n_; }
  DistributionKind dist_label() const noexcept { return label_; }

  double operator()(std::size_t row, std::size_t col) const noexcept {
    return entries_[row * n_ + col];
  }
  std::span<const double> row(std::size_t i) const noexcept {
    return {entries_.data() + i * n_, n_};
  }
  std::span<const double> entries() const noexcept { return entries_; }

  /// Entry-wise negation; keeps the distribution label.
  CostMatrix negated() const;

 private:
  std::size_t n_;
  std::vector<double> entries_;
  DistributionKind label_;
};

/// A candidate mapping rows -> columns. Stored 0-based; serialized 1-based.
/// Construction does not enforce bijectivity, see validate_permutation.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::size_t> zero_based) : map_(std::move(zero_based)) {}

  static Permutation identity(std::size_t n);
  /// Converts 1-based indices; a 0 becomes an out-of-range index.
  static Permutation from_one_based(std::span<const std::size_t> one_based);

  std::size_t size() const noexcept { return map_.size(); }
  std::size_t operator[](std::size_t row) const noexcept { return map_[row]; }
  std::span<const std::size_t> mapping() const noexcept { return map_; }
  std::vector<std::size_t> to_one_based() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> map_;
};

enum class Method { Greedy, Hungarian, BruteForce };

std::string_view to_string(Method method);

struct AssignmentResult {
  Permutation perm;
  double value = 0.0;
  Method method = Method::Greedy;
};

/// True iff `p` is a bijection on {0..n-1} of length n.
bool validate_permutation(const Permutation& p, std::size_t n) noexcept;

/// Sum of m(i, p[i]) over rows in natural order.
/// Throws DimensionMismatch if p.size() != m.n(), InvalidPermutation if p is
/// not a bijection.
double assignment_value(const CostMatrix& m, const Permutation& p);

}  // namespace ral
