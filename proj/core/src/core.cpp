#include "ral/core.hpp"

#include <cmath>
#include <numeric>
#include <string>

namespace ral {

std::string_view to_string(DistributionKind kind) {
  switch (kind) {
    case DistributionKind::Gaussian: return "gaussian";
    case DistributionKind::Exponential: return "exp";
    case DistributionKind::Uniform: return "uniform";
  }
  return "unknown";
}

std::string_view to_string(Method method) {
  switch (method) {
    case Method::Greedy: return "greedy";
    case Method::Hungarian: return "hungarian";
    case Method::BruteForce: return "brute_force";
  }
  return "unknown";
}

CostMatrix::CostMatrix(std::size_t n, std::vector<double> entries, DistributionKind label)
    : n_(n), entries_(std::move(entries)), label_(label) {
  if (n_ == 0) throw InvalidSize("cost matrix must have n >= 1");
  if (entries_.size() != n_ * n_) {
    throw InvalidSize("cost matrix of side " + std::to_string(n_) + " needs " +
                      std::to_string(n_ * n_) + " entries, got " +
                      std::to_string(entries_.size()));
  }
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    if (!std::isfinite(entries_[k])) {
      throw DomainError("non-finite cost at row " + std::to_string(k / n_ + 1) +
                        ", column " + std::to_string(k % n_ + 1));
    }
  }
}

CostMatrix CostMatrix::from_rows(const std::vector<std::vector<double>>& rows,
                                 DistributionKind label) {
  const std::size_t n = rows.size();
  std::vector<double> flat;
  flat.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw InvalidSize("row " + std::to_string(i + 1) + " has " +
                        std::to_string(rows[i].size()) + " entries, expected " +
                        std::to_string(n));
    }
    flat.insert(flat.end(), rows[i].begin(), rows[i].end());
  }
  return CostMatrix(n, std::move(flat), label);
}

CostMatrix CostMatrix::negated() const {
  std::vector<double> neg(entries_.size());
  for (std::size_t k = 0; k < entries_.size(); ++k) neg[k] = -entries_[k];
  return CostMatrix(n_, std::move(neg), label_);
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> map(n);
  std::iota(map.begin(), map.end(), std::size_t{0});
  return Permutation(std::move(map));
}

Permutation Permutation::from_one_based(std::span<const std::size_t> one_based) {
  std::vector<std::size_t> map(one_based.size());
  for (std::size_t i = 0; i < one_based.size(); ++i) map[i] = one_based[i] - 1;
  return Permutation(std::move(map));
}

std::vector<std::size_t> Permutation::to_one_based() const {
  std::vector<std::size_t> out(map_.size());
  for (std::size_t i = 0; i < map_.size(); ++i) out[i] = map_[i] + 1;
  return out;
}

bool validate_permutation(const Permutation& p, std::size_t n) noexcept {
  if (p.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (std::size_t j : p.mapping()) {
    if (j >= n || seen[j]) return false;
    seen[j] = true;
  }
  return true;
}

double assignment_value(const CostMatrix& m, const Permutation& p) {
  if (p.size() != m.n()) {
    throw DimensionMismatch("permutation of length " + std::to_string(p.size()) +
                            " applied to matrix of side " + std::to_string(m.n()));
  }
  if (!validate_permutation(p, m.n())) throw InvalidPermutation("mapping is not a bijection");
  double sum = 0.0;
  for (std::size_t i = 0; i < m.n(); ++i) sum += m(i, p[i]);
  return sum;
}

}  // namespace ral
