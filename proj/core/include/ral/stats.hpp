#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace ral {

/// Standard normal CDF through erfc; absolute error well under 1e-12.
double phi_cdf(double x);
/// 1 - phi_cdf(x) evaluated directly, no cancellation in the upper tail.
double phi_tail(double x);
/// log phi_cdf(x), accurate in both tails.
double log_phi_cdf(double x);
/// Standard normal density.
double phi_pdf(double x);

/// exp(-exp(-x)).
double gumbel_cdf(double x);
double gumbel_pdf(double x);
/// (mean, variance) = (Euler's gamma, pi^2 / 6).
std::pair<double, double> gumbel_moments();

/// Adaptive Gauss-Kronrod over consecutive breakpoints. The summed error
/// estimate must stay below `abs_tol`, otherwise QuadratureFailure.
double integrate(const std::function<double(double)>& f, std::span<const double> breakpoints,
                 double abs_tol = 1e-10);

/// Moments of the maximum of m i.i.d. standard normals.
struct MaxMoments {
  std::int64_t m = 1;
  double mean = 0.0;
  double variance = 1.0;
  double third_abs_central = 0.0;
};

/// Quadrature of the density m phi(t) Phi(t)^(m-1) over [-12, a_m + 40 b_m].
/// Valid for 1 <= m <= 1e7 (DomainError otherwise).
MaxMoments exact_max_moments(std::int64_t m);

/// Running sums of exact_max_moments(m) for m = 1..n.
struct MaxMomentSums {
  std::int64_t n = 0;
  double mean = 0.0;
  double variance = 0.0;
  double third_abs_central = 0.0;
};

/// Prefix sums for every m in 1..n_max; entry k holds the sums up to m = k + 1.
std::vector<MaxMomentSums> exact_max_moment_prefix(std::int64_t n_max);

/// Kolmogorov distance between the empirical law of a sorted sample and `cdf`.
/// Throws EmptySample, DomainError when the sample is not sorted.
double ks_distance(std::span<const double> sorted_sample,
                   const std::function<double(double)>& cdf);

struct SampleSummary {
  std::int64_t count = 0;
  double mean = 0.0;
  double variance = 0.0;  // divisor count - 1
  double third_abs_central = 0.0;
  double std_error = 0.0;
};

/// Welford accumulator for count, mean and second central moment; partial
/// accumulators merge with the pairwise update.
class MomentAccumulator {
 public:
  void add(double x) noexcept;
  void merge(const MomentAccumulator& other) noexcept;

  std::int64_t count() const noexcept { return count_; }
  double mean() const noexcept { return mean_; }
  /// Unbiased variance; requires count() >= 2.
  double variance() const noexcept { return m2_ / static_cast<double>(count_ - 1); }

 private:
  std::int64_t count_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

/// One Welford pass for mean and variance, then a centered pass for the third
/// absolute moment. Throws InsufficientData for fewer than 2 values.
SampleSummary summarize(std::span<const double> sample);

/// B_n^{-3} sum_{m<=n} rho_m with B_n^2 = sum_{m<=n} Var, both from the
/// quadrature oracle. DomainError for n < 2.
double lyapunov_fraction(std::int64_t n);
double lyapunov_fraction(const MaxMomentSums& sums);

}  // namespace ral
