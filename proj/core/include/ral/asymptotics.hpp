#pragma once

#include <cstdint>
#include <numbers>

namespace ral {

struct MathConstants {
  static constexpr double euler_gamma = std::numbers::egamma;  // 0.5772156649015329
  static constexpr double zeta2 = std::numbers::pi * std::numbers::pi / 6.0;
  static constexpr double zeta3 = 1.2020569031595942854;  // Apery's constant
};

/// Centering a_m and scaling b_m for the maximum of m standard normals.
struct GumbelNorming {
  double a = 0.0;
  double b = 0.0;
  std::int64_t m = 2;
};

/// First-order centering and variance for the greedy sum.
struct CltConstants {
  double A_n = 0.0;
  double B_n_sq = 1.0;
  std::int64_t n = 1;
};

/// n * sqrt(2 log n). DomainError for n < 2.
double leading_order(std::int64_t n);

/// sqrt(2 n log(n!)), the Gaussian-maximum upper bound on E max_pi S(pi).
/// log(n!) by log-gamma once n > 20. DomainError for n < 1.
double fernique_upper(std::int64_t n);

/// log(n!) exactly summed for n <= 20, log-gamma beyond.
double log_factorial(std::int64_t n);

/// a_m = sqrt(2 log m) - (log log m + log 4 pi) / (2 sqrt(2 log m)),
/// b_m = (2 log m)^(-1/2). DomainError for m < 2.
GumbelNorming gumbel_norming(std::int64_t m);

/// Lower bound (1/sqrt(2 pi)) (1/r - 1/r^3) exp(-r^2/2) on the normal tail.
/// DomainError for r <= 1.
double normal_tail_lower(double r);

/// r (1 - exp(-m * normal_tail_lower(r))) at r = sqrt(2 log m) - 1.
/// Lower-bounds the positive part of the expected maximum of m normals.
/// DomainError for m < 3.
double lower_bound_witness(std::int64_t m);

/// Sum over m = 2..n of (a_m + gamma b_m) and zeta(2) b_m^2, plus the exact
/// single-normal moments (0, 1) for the m = 1 row. DomainError for n < 1.
CltConstants clt_constants(std::int64_t n);

/// sum_{k=1}^{n} 1/k^2. DomainError for n < 1.
double parisi_sum(std::int64_t n);

/// zeta(2) - (zeta(2) + 2 zeta(3)) / n. DomainError for n < 2.
double steele_expansion(std::int64_t n);

}  // namespace ral
