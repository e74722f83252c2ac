#pragma once

#include <cmath>
#include <string>

#include "rapidity/errors.hpp"

namespace rapidity {

/// Default absolute comparison tolerance on beta. Near double-precision
/// limits for the well-conditioned interior, loose enough for
/// associativity chains.
inline constexpr double kDefaultBetaTolerance = 1e-12;

/// Largest representable beta strictly inside (-1, 1): 1 - 2^-53.
inline constexpr double kMaxInteriorBeta = 1.0 - 0x1p-53;

namespace detail {

// Passkey for constructing velocity types from values already known to
// satisfy the invariant (outputs of the composition laws).
struct Unchecked {
  explicit Unchecked() = default;
};

inline void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) throw InvalidInput(std::string(what) + " must be finite");
}

}  // namespace detail

/// A collinear velocity strictly inside the light cone, stored as the
/// dimensionless beta = u/c in (-1, 1). The speed of light enters only
/// at construction/formatting boundaries; the composition law in beta
/// form, (u + v) / (1 + u v), is unit-free.
class Velocity {
 public:
  /// beta must be finite (InvalidInput) and satisfy |beta| < 1 (DomainError).
  static Velocity from_beta(double beta) {
    detail::require_finite(beta, "beta");
    if (std::abs(beta) >= 1.0) {
      throw DomainError("|beta| must be < 1 for a subluminal velocity");
    }
    return Velocity(beta, detail::Unchecked{});
  }

  constexpr Velocity(double beta, detail::Unchecked) noexcept : beta_(beta) {}

  [[nodiscard]] double beta() const noexcept { return beta_; }

  /// Physical velocity for a given light speed.
  [[nodiscard]] double physical(double c) const noexcept { return beta_ * c; }

  friend bool operator==(Velocity a, Velocity b) noexcept { return a.beta_ == b.beta_; }

 private:
  double beta_;
};

/// A velocity in the closed interval [-c, c]; carrier of the extended
/// composition where light speed itself is attainable.
class ExtendedVelocity {
 public:
  static ExtendedVelocity from_beta(double beta) {
    detail::require_finite(beta, "beta");
    if (std::abs(beta) > 1.0) {
      throw DomainError("|beta| must be <= 1 for an extended velocity");
    }
    return ExtendedVelocity(beta, detail::Unchecked{});
  }

  constexpr ExtendedVelocity(double beta, detail::Unchecked) noexcept : beta_(beta) {}

  [[nodiscard]] double beta() const noexcept { return beta_; }
  [[nodiscard]] double physical(double c) const noexcept { return beta_ * c; }

  friend bool operator==(ExtendedVelocity a, ExtendedVelocity b) noexcept {
    return a.beta_ == b.beta_;
  }

 private:
  double beta_;
};

/// A Newtonian velocity: any finite real, in the same unit as c.
class NewtonVelocity {
 public:
  static NewtonVelocity from_value(double value) {
    detail::require_finite(value, "value");
    return NewtonVelocity(value, detail::Unchecked{});
  }

  constexpr NewtonVelocity(double value, detail::Unchecked) noexcept : value_(value) {}

  [[nodiscard]] double value() const noexcept { return value_; }

  friend bool operator==(NewtonVelocity a, NewtonVelocity b) noexcept {
    return a.value_ == b.value_;
  }

 private:
  double value_;
};

/// Parameters (c, k) selecting one member of the isomorphism family.
/// c is the light speed in physical units, k the positive scale of the
/// rapidity map.
struct IsoParams {
  double c = 1.0;
  double k = 1.0;

  static IsoParams make(double c, double k) {
    detail::require_finite(c, "c");
    detail::require_finite(k, "k");
    if (c <= 0.0) throw InvalidInput("c must be > 0");
    if (k <= 0.0) throw InvalidInput("k must be > 0");
    return IsoParams{c, k};
  }

  /// Natural units, the canonical representative of the family.
  static constexpr IsoParams natural() noexcept { return IsoParams{1.0, 1.0}; }
};

namespace detail {

/// Clamp a composed beta back into the open interval. Sets *saturated
/// when clamping happened.
inline double clamp_interior(double beta, bool* saturated) noexcept {
  if (beta >= 1.0) {
    *saturated = true;
    return kMaxInteriorBeta;
  }
  if (beta <= -1.0) {
    *saturated = true;
    return -kMaxInteriorBeta;
  }
  return beta;
}

}  // namespace detail

/// Construct a Velocity from a physical velocity and light speed.
inline Velocity make_velocity(double value, double c) {
  detail::require_finite(value, "value");
  detail::require_finite(c, "c");
  if (c <= 0.0) throw InvalidInput("c must be > 0");
  if (std::abs(value) >= c) throw DomainError("|value| must be < c");
  // |value| < c guarantees |beta| < 1 mathematically, but for
  // non-power-of-two c the quotient can round to exactly 1; keep the
  // invariant by landing on the nearest interior value.
  bool saturated = false;
  const double beta = detail::clamp_interior(value / c, &saturated);
  return Velocity(beta, detail::Unchecked{});
}

/// Result of a relativistic composition. `saturated` marks that rounding
/// pushed a mathematically interior result onto the boundary and it was
/// clamped to the nearest value strictly inside (-1, 1).
struct Composition {
  Velocity value;
  bool saturated = false;
};

/// Relativistic composition u * v = (u + v) / (1 + u v) in beta form.
/// Total on Velocity x Velocity. IEEE-754 + and * are commutative, so
/// the result is bit-symmetric in u and v.
inline Composition compose_sr(Velocity u, Velocity v) noexcept {
  const double num = u.beta() + v.beta();
  const double den = 1.0 + u.beta() * v.beta();
  bool saturated = false;
  const double w = detail::clamp_interior(num / den, &saturated);
  return Composition{Velocity(w, detail::Unchecked{}), saturated};
}

/// Three-velocity form u * v * w = (u+v+w+uvw) / (1+uv+uw+vw).
/// The denominator factors as (1+uv)(1 + w * (u*v)) and is strictly
/// positive on the open cube.
inline Composition compose_sr3(Velocity u, Velocity v, Velocity w) noexcept {
  const double ub = u.beta(), vb = v.beta(), wb = w.beta();
  const double num = ub + vb + wb + ub * vb * wb;
  const double den = 1.0 + (ub * vb + ub * wb + vb * wb);
  bool saturated = false;
  const double z = detail::clamp_interior(num / den, &saturated);
  return Composition{Velocity(z, detail::Unchecked{}), saturated};
}

/// Group inverse: -u.
inline Velocity inverse(Velocity u) noexcept {
  return Velocity(-u.beta(), detail::Unchecked{});
}

/// Neutral element of the velocity group.
inline Velocity identity_sr() noexcept { return Velocity(0.0, detail::Unchecked{}); }

/// Newtonian addition; OverflowError when the sum is not finite.
inline NewtonVelocity compose_newton(NewtonVelocity x, NewtonVelocity y) {
  const double sum = x.value() + y.value();
  if (!std::isfinite(sum)) throw OverflowError("Newtonian sum overflows");
  return NewtonVelocity(sum, detail::Unchecked{});
}

/// d(u * v)/du = (1 - v^2) / (1 + u v)^2 in beta form; > 0 everywhere
/// on the open square.
inline double partial_derivative_sr(Velocity u, Velocity v) noexcept {
  const double den = 1.0 + u.beta() * v.beta();
  return (1.0 - v.beta() * v.beta()) / (den * den);
}

/// Widening conversion onto the closed carrier; always safe.
inline ExtendedVelocity widen(Velocity u) noexcept {
  return ExtendedVelocity(u.beta(), detail::Unchecked{});
}

/// Checked narrowing back to the open carrier; DomainError at |beta| = 1.
inline Velocity narrow(ExtendedVelocity u) {
  if (std::abs(u.beta()) >= 1.0) {
    throw DomainError("light-speed velocity has no interior counterpart");
  }
  return Velocity(u.beta(), detail::Unchecked{});
}

/// Extended composition on [-1, 1]^2 minus the pairs with u v = -1.
/// Light speed is absorbing: composing +-1 with any interior velocity
/// yields +-1 exactly (numerator and denominator round identically).
inline ExtendedVelocity compose_extended(ExtendedVelocity u, ExtendedVelocity v) {
  if (u.beta() * v.beta() == -1.0) {
    throw DomainError("excluded pair: u v = -c^2 (u = c, v = -c or u = -c, v = c)");
  }
  const double num = u.beta() + v.beta();
  const double den = 1.0 + u.beta() * v.beta();
  double w = num / den;
  // Interior pairs can overshoot the closed interval by one ulp.
  if (w > 1.0) w = 1.0;
  if (w < -1.0) w = -1.0;
  return ExtendedVelocity(w, detail::Unchecked{});
}

/// Absolute-tolerance comparison on beta.
inline bool approx_equal(double a, double b, double tol = kDefaultBetaTolerance) noexcept {
  return std::abs(a - b) <= tol;
}

}  // namespace rapidity
