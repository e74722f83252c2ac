#pragma once

#include <cmath>

#include "rapidity/errors.hpp"
#include "rapidity/velocity.hpp"

namespace rapidity {

/// Additive image of a velocity under the isomorphism family: an
/// element of (R, +).
class Rapidity {
 public:
  static Rapidity from_value(double value) {
    detail::require_finite(value, "rapidity");
    return Rapidity(value, detail::Unchecked{});
  }

  constexpr Rapidity(double value, detail::Unchecked) noexcept : value_(value) {}

  [[nodiscard]] double value() const noexcept { return value_; }

  friend bool operator==(Rapidity a, Rapidity b) noexcept { return a.value_ == b.value_; }

 private:
  double value_;
};

/// The forward map of the family, alpha_k(u) = k ln((c+u)/(c-u)) in
/// physical units, evaluated in the cancellation-free beta form
///
///   alpha = k (log1p(beta) - log1p(-beta)) = 2k atanh(beta).
///
/// The difference form is exactly odd under beta -> -beta (IEEE
/// subtraction negates bit-for-bit) and keeps full precision against
/// the boundary, where the literal quotient (c+u)/(c-u) loses every
/// significant digit. |result| <= ~37.4k for any representable beta, so
/// sums of rapidities stay finite for any k below ~DBL_MAX/75; there is
/// no runtime overflow check.
inline Rapidity to_rapidity(Velocity u, IsoParams p) noexcept {
  const double b = u.beta();
  const double x = p.k * (std::log1p(b) - std::log1p(-b));
  return Rapidity(x, detail::Unchecked{});
}

/// The inverse map, beta_k(x) = c (e^{x/k} - 1)/(e^{x/k} + 1), evaluated
/// as tanh(x/(2k)): an exact rewrite that cannot overflow for any finite
/// x. Sign is applied explicitly so the map is odd bit-for-bit. For |x|
/// large enough that tanh rounds to 1, the result is clamped to the
/// nearest value strictly inside (-1, 1).
inline Velocity to_velocity(Rapidity x, IsoParams p) noexcept {
  const double t = std::tanh(std::abs(x.value()) / (2.0 * p.k));
  double beta = std::copysign(t, x.value());
  bool saturated = false;
  beta = detail::clamp_interior(beta, &saturated);
  return Velocity(beta, detail::Unchecked{});
}

/// Scale parameter from the slope of the map at zero, k = c^2 alpha'(0).
/// InvalidInput unless both arguments are positive (k must be > 0).
inline double k_from_slope(double alpha_prime_at_zero, double c) {
  detail::require_finite(alpha_prime_at_zero, "alpha'(0)");
  detail::require_finite(c, "c");
  if (alpha_prime_at_zero <= 0.0) throw InvalidInput("alpha'(0) must be > 0 (k > 0)");
  if (c <= 0.0) throw InvalidInput("c must be > 0");
  return c * c * alpha_prime_at_zero;
}

/// Derivative of the forward map with respect to the physical velocity
/// u = c beta:
///
///   d alpha / du = 2 k c / (c^2 - u^2) = 2k / (c (1 - beta^2)).
///
/// Strictly positive on the open carrier.
inline double rapidity_derivative(Velocity v, IsoParams p) noexcept {
  const double b = v.beta();
  return 2.0 * p.k / (p.c * (1.0 - b * b));
}

/// Derivative in normalized form, d alpha / d beta = 2k / (1 - beta^2).
inline double rapidity_derivative_beta(Velocity v, IsoParams p) noexcept {
  const double b = v.beta();
  return 2.0 * p.k / (1.0 - b * b);
}

/// Composition routed through rapidity space:
///
///   u * v = beta^{-1}(alpha(u) + alpha(v)).
///
/// Mathematically equal to compose_sr and independent of k; numerically
/// preferable near the boundary, where the direct quotient cancels but
/// rapidities add benignly.
inline Velocity compose_via_rapidity(Velocity u, Velocity v, IsoParams p) noexcept {
  const double sum = to_rapidity(u, p).value() + to_rapidity(v, p).value();
  return to_velocity(Rapidity(sum, detail::Unchecked{}), p);
}

}  // namespace rapidity
