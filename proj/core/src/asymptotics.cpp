#include "ral/asymptotics.hpp"

#include <cmath>
#include <string>

#include <boost/math/special_functions/gamma.hpp>

#include "ral/errors.hpp"

namespace ral {

namespace {

void require(bool ok, const char* what, std::int64_t got) {
  if (!ok) throw DomainError(std::string(what) + " (got " + std::to_string(got) + ")");
}

}  // namespace

double leading_order(std::int64_t n) {
  require(n >= 2, "leading_order requires n >= 2", n);
  const double x = static_cast<double>(n);
  return x * std::sqrt(2.0 * std::log(x));
}

double log_factorial(std::int64_t n) {
  require(n >= 0, "log_factorial requires n >= 0", n);
  if (n <= 20) {
    double acc = 0.0;
    for (std::int64_t k = 2; k <= n; ++k) acc += std::log(static_cast<double>(k));
    return acc;
  }
  return boost::math::lgamma(static_cast<double>(n) + 1.0);
}

double fernique_upper(std::int64_t n) {
  require(n >= 1, "fernique_upper requires n >= 1", n);
  return std::sqrt(2.0 * log_factorial(n) * static_cast<double>(n));
}

GumbelNorming gumbel_norming(std::int64_t m) {
  require(m >= 2, "gumbel_norming requires m >= 2", m);
  const double root = std::sqrt(2.0 * std::log(static_cast<double>(m)));
  const double shift =
      (std::log(std::log(static_cast<double>(m))) + std::log(4.0 * std::numbers::pi)) /
      (2.0 * root);
  return {root - shift, 1.0 / root, m};
}

double normal_tail_lower(double r) {
  if (!(r > 1.0)) throw DomainError("normal_tail_lower requires r > 1");
  constexpr double inv_sqrt_2pi = 0.5 * std::numbers::inv_sqrtpi * std::numbers::sqrt2;
  return inv_sqrt_2pi * (1.0 / r - 1.0 / (r * r * r)) * std::exp(-0.5 * r * r);
}

double lower_bound_witness(std::int64_t m) {
  require(m >= 3, "lower_bound_witness requires m >= 3", m);
  const double r = std::sqrt(2.0 * std::log(static_cast<double>(m))) - 1.0;
  // m = 3 gives r ~ 0.48 where the tail bound is undefined; the witness is 0.
  if (r <= 1.0) return 0.0;
  return r * -std::expm1(-static_cast<double>(m) * normal_tail_lower(r));
}

CltConstants clt_constants(std::int64_t n) {
  require(n >= 1, "clt_constants requires n >= 1", n);
  CltConstants c{0.0, 1.0, n};
  for (std::int64_t m = 2; m <= n; ++m) {
    const auto g = gumbel_norming(m);
    c.A_n += g.a + MathConstants::euler_gamma * g.b;
    c.B_n_sq += MathConstants::zeta2 * g.b * g.b;
  }
  return c;
}

double parisi_sum(std::int64_t n) {
  require(n >= 1, "parisi_sum requires n >= 1", n);
  double acc = 0.0;
  for (std::int64_t k = n; k >= 1; --k) {
    const double x = static_cast<double>(k);
    acc += 1.0 / (x * x);
  }
  return acc;
}

double steele_expansion(std::int64_t n) {
  require(n >= 2, "steele_expansion requires n >= 2", n);
  return MathConstants::zeta2 -
         (MathConstants::zeta2 + 2.0 * MathConstants::zeta3) / static_cast<double>(n);
}

}  // namespace ral
