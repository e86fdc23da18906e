#include "ral/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "ral/asymptotics.hpp"
#include "ral/errors.hpp"

namespace ral {

double phi_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

double phi_tail(double x) { return 0.5 * std::erfc(x / std::numbers::sqrt2); }

double log_phi_cdf(double x) {
  if (x < 0.0) return std::log(phi_cdf(x));
  return std::log1p(-phi_tail(x));
}

double phi_pdf(double x) {
  constexpr double inv_sqrt_2pi = 0.5 * std::numbers::inv_sqrtpi * std::numbers::sqrt2;
  return inv_sqrt_2pi * std::exp(-0.5 * x * x);
}

double gumbel_cdf(double x) { return std::exp(-std::exp(-x)); }

double gumbel_pdf(double x) { return std::exp(-x - std::exp(-x)); }

std::pair<double, double> gumbel_moments() {
  return {MathConstants::euler_gamma, MathConstants::zeta2};
}

namespace {

using KronrodRule = boost::math::quadrature::gauss_kronrod<double, 61>;

struct Estimate {
  double value = 0.0;
  double error = 0.0;
};

// Bisects until each piece meets its share of the absolute error budget.
Estimate integrate_piece(const std::function<double(double)>& f, double a, double b,
                         double budget, unsigned depth) {
  Estimate e;
  e.value = KronrodRule::integrate(f, a, b, 0, 0.0, &e.error);
  if (e.error <= budget || depth == 0) return e;
  const double mid = 0.5 * (a + b);
  const auto left = integrate_piece(f, a, mid, 0.5 * budget, depth - 1);
  const auto right = integrate_piece(f, mid, b, 0.5 * budget, depth - 1);
  return {left.value + right.value, left.error + right.error};
}

}  // namespace

double integrate(const std::function<double(double)>& f, std::span<const double> breakpoints,
                 double abs_tol) {
  constexpr unsigned kMaxDepth = 24;
  if (breakpoints.size() < 2) return 0.0;
  const double span = breakpoints.back() - breakpoints.front();
  double total = 0.0;
  double total_err = 0.0;
  for (std::size_t k = 0; k + 1 < breakpoints.size(); ++k) {
    const double a = breakpoints[k], b = breakpoints[k + 1];
    // Budget proportional to width, halved to leave headroom for the sum.
    const double budget = 0.5 * abs_tol * (b - a) / span;
    const auto e = integrate_piece(f, a, b, budget, kMaxDepth);
    total += e.value;
    total_err += e.error;
  }
  if (!(total_err <= abs_tol) || !std::isfinite(total)) {
    throw QuadratureFailure("quadrature error estimate " + std::to_string(total_err) +
                            " exceeds tolerance " + std::to_string(abs_tol));
  }
  return total;
}

namespace {

constexpr double kWindowLow = -12.0;

struct Window {
  double lo, hi, center, scale;
};

Window max_window(std::int64_t m) {
  if (m == 1) return {kWindowLow, 12.0, 0.0, 1.0};
  const auto g = gumbel_norming(m);
  return {kWindowLow, g.a + 40.0 * g.b, g.a, g.b};
}

// Breakpoints that resolve the bulk of the density at any m: dense around the
// Gumbel centering, plus an optional extra point (the mean, where |t - mu|^3 kinks).
std::vector<double> breakpoints(const Window& w, std::optional<double> extra = std::nullopt) {
  std::vector<double> pts{w.lo, w.hi};
  for (double k : {-16.0, -8.0, -4.0, -2.0, -1.0, 0.0, 1.0, 2.0, 4.0, 8.0, 16.0}) {
    const double t = w.center + k * w.scale;
    if (t > w.lo && t < w.hi) pts.push_back(t);
  }
  if (extra && *extra > w.lo && *extra < w.hi) pts.push_back(*extra);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

}  // namespace

MaxMoments exact_max_moments(std::int64_t m) {
  if (m < 1 || m > 10'000'000) {
    throw DomainError("exact_max_moments requires 1 <= m <= 1e7 (got " + std::to_string(m) + ")");
  }
  const double mm = static_cast<double>(m);
  const auto density = [mm](double t) {
    if (mm == 1.0) return phi_pdf(t);
    return mm * phi_pdf(t) * std::exp((mm - 1.0) * log_phi_cdf(t));
  };
  const Window w = max_window(m);
  const auto pts = breakpoints(w);

  MaxMoments out;
  out.m = m;
  out.mean = integrate([&](double t) { return t * density(t); }, pts);
  const double mu = out.mean;
  const auto pts_mu = breakpoints(w, mu);
  out.variance = integrate([&](double t) { return (t - mu) * (t - mu) * density(t); }, pts_mu);
  out.third_abs_central = integrate(
      [&](double t) {
        const double d = std::abs(t - mu);
        return d * d * d * density(t);
      },
      pts_mu);
  return out;
}

std::vector<MaxMomentSums> exact_max_moment_prefix(std::int64_t n_max) {
  if (n_max < 1) throw DomainError("exact_max_moment_prefix requires n >= 1");
  std::vector<MaxMomentSums> out;
  out.reserve(static_cast<std::size_t>(n_max));
  MaxMomentSums acc;
  for (std::int64_t m = 1; m <= n_max; ++m) {
    const auto mo = exact_max_moments(m);
    acc.n = m;
    acc.mean += mo.mean;
    acc.variance += mo.variance;
    acc.third_abs_central += mo.third_abs_central;
    out.push_back(acc);
  }
  return out;
}

double ks_distance(std::span<const double> sorted_sample,
                   const std::function<double(double)>& cdf) {
  if (sorted_sample.empty()) throw EmptySample("ks_distance needs at least one point");
  if (!std::is_sorted(sorted_sample.begin(), sorted_sample.end())) {
    throw DomainError("ks_distance expects an ascending sample");
  }
  const double count = static_cast<double>(sorted_sample.size());
  double sup = 0.0;
  for (std::size_t i = 0; i < sorted_sample.size(); ++i) {
    const double f = cdf(sorted_sample[i]);
    const double above = static_cast<double>(i + 1) / count - f;
    const double below = f - static_cast<double>(i) / count;
    sup = std::max({sup, std::abs(above), std::abs(below)});
  }
  return sup;
}

void MomentAccumulator::add(double x) noexcept {
  ++count_;
  const double delta = x - mean_;
  mean_ += delta / static_cast<double>(count_);
  m2_ += delta * (x - mean_);
}

void MomentAccumulator::merge(const MomentAccumulator& other) noexcept {
  if (other.count_ == 0) return;
  if (count_ == 0) {
    *this = other;
    return;
  }
  const double na = static_cast<double>(count_);
  const double nb = static_cast<double>(other.count_);
  const double n = na + nb;
  const double delta = other.mean_ - mean_;
  mean_ += delta * nb / n;
  m2_ += other.m2_ + delta * delta * na * nb / n;
  count_ += other.count_;
}

SampleSummary summarize(std::span<const double> sample) {
  if (sample.size() < 2) throw InsufficientData("summarize needs at least two values");
  MomentAccumulator acc;
  for (double x : sample) acc.add(x);

  // Neumaier-compensated sum of |x - mean|^3.
  double sum = 0.0, comp = 0.0;
  for (double x : sample) {
    const double d = std::abs(x - acc.mean());
    const double term = d * d * d;
    const double t = sum + term;
    comp += std::abs(sum) >= std::abs(term) ? (sum - t) + term : (term - t) + sum;
    sum = t;
  }

  SampleSummary s;
  s.count = acc.count();
  s.mean = acc.mean();
  s.variance = std::max(0.0, acc.variance());
  s.third_abs_central = (sum + comp) / static_cast<double>(s.count);
  s.std_error = std::sqrt(s.variance / static_cast<double>(s.count));
  return s;
}

double lyapunov_fraction(const MaxMomentSums& sums) {
  if (sums.n < 2) throw DomainError("lyapunov_fraction requires n >= 2");
  const double b = std::sqrt(sums.variance);
  return sums.third_abs_central / (b * b * b);
}

double lyapunov_fraction(std::int64_t n) {
  if (n < 2) throw DomainError("lyapunov_fraction requires n >= 2");
  return lyapunov_fraction(exact_max_moment_prefix(n).back());
}

}  // namespace ral
