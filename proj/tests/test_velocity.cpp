#include <doctest.h>

#include <cmath>
#include <random>

#include "rapidity/velocity.hpp"

using namespace rapidity;

namespace {

double random_beta(std::mt19937_64& rng, double scale = 0.999) {
  const double u01 = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return std::tanh(8.0 * (2.0 * u01 - 1.0)) * scale;
}

}  // namespace

TEST_CASE("make_velocity normalizes physical velocities") {
  CHECK(make_velocity(0.0, 1.0).beta() == 0.0);
  CHECK(make_velocity(149896229.0, 299792458.0).beta() == 0.5);
  CHECK_THROWS_AS(make_velocity(299792458.0, 299792458.0), DomainError);
  CHECK_THROWS_AS(make_velocity(-299792458.0, 299792458.0), DomainError);
  CHECK_THROWS_AS(make_velocity(3e8, 299792458.0), DomainError);

  CHECK_THROWS_AS(make_velocity(std::nan(""), 1.0), InvalidInput);
  CHECK_THROWS_AS(make_velocity(0.5, std::nan("")), InvalidInput);
  CHECK_THROWS_AS(make_velocity(0.5, 0.0), InvalidInput);
  CHECK_THROWS_AS(make_velocity(0.5, -1.0), InvalidInput);
  CHECK_THROWS_AS(make_velocity(HUGE_VAL, 1.0), InvalidInput);
}

TEST_CASE("Velocity::from_beta enforces the open interval") {
  CHECK(Velocity::from_beta(0.25).beta() == 0.25);
  CHECK(Velocity::from_beta(kMaxInteriorBeta).beta() == kMaxInteriorBeta);
  CHECK_THROWS_AS(Velocity::from_beta(1.0), DomainError);
  CHECK_THROWS_AS(Velocity::from_beta(-1.0), DomainError);
  CHECK_THROWS_AS(Velocity::from_beta(1.5), DomainError);
  CHECK_THROWS_AS(Velocity::from_beta(std::nan("")), InvalidInput);
  CHECK_THROWS_AS(Velocity::from_beta(HUGE_VAL), InvalidInput);
}

TEST_CASE("compose_sr matches hand-evaluated cases") {
  const auto half = Velocity::from_beta(0.5);
  CHECK(compose_sr(half, half).value.beta() == 0.8);  // 1.0 / 1.25

  // u * 0 = u and 0 * u = u, exactly
  const auto u = Velocity::from_beta(0.37);
  CHECK(compose_sr(u, identity_sr()).value == u);
  CHECK(compose_sr(identity_sr(), u).value == u);

  // u * (-u) = 0, exactly
  const auto v = Velocity::from_beta(0.6);
  CHECK(compose_sr(v, inverse(v)).value.beta() == 0.0);

  const auto nine = Velocity::from_beta(0.9);
  CHECK(compose_sr(nine, nine).value.beta() == 1.8 / 1.81);
}

TEST_CASE("compose_sr is commutative bit-for-bit") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 2000; ++i) {
    const auto u = Velocity::from_beta(random_beta(rng));
    const auto v = Velocity::from_beta(random_beta(rng));
    const Composition uv = compose_sr(u, v);
    const Composition vu = compose_sr(v, u);
    CHECK(uv.value == vu.value);
    CHECK(uv.saturated == vu.saturated);
  }
}

TEST_CASE("compose_sr stays strictly inside the interval") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 5000; ++i) {
    const auto u = Velocity::from_beta(random_beta(rng, 1.0 - 1e-16));
    const auto v = Velocity::from_beta(random_beta(rng, 1.0 - 1e-16));
    const Composition r = compose_sr(u, v);
    CHECK(std::abs(r.value.beta()) < 1.0);
  }
}

TEST_CASE("saturation triggers exactly where rounding reaches the boundary") {
  // Quotient rounds to 1.0 here: clamp + flag.
  const auto near = Velocity::from_beta(1.0 - 1e-9);
  const Composition sat = compose_sr(near, near);
  CHECK(sat.saturated);
  CHECK(sat.value.beta() == kMaxInteriorBeta);

  const Composition msat = compose_sr(inverse(near), inverse(near));
  CHECK(msat.saturated);
  CHECK(msat.value.beta() == -kMaxInteriorBeta);

  // One decade further out the quotient still rounds below 1.
  const auto safe = Velocity::from_beta(1.0 - 1e-8);
  CHECK_FALSE(compose_sr(safe, safe).saturated);

  // Inputs kept a modest distance from the boundary never saturate.
  std::mt19937_64 rng(7);
  for (int i = 0; i < 5000; ++i) {
    const auto u = Velocity::from_beta(random_beta(rng, 1.0 - 1e-7));
    const auto v = Velocity::from_beta(random_beta(rng, 1.0 - 1e-7));
    CHECK_FALSE(compose_sr(u, v).saturated);
  }
}

TEST_CASE("compose_sr3 matches the expanded three-velocity form") {
  const auto half = Velocity::from_beta(0.5);
  const Composition r = compose_sr3(half, half, half);
  CHECK(r.value.beta() == 1.625 / 1.75);
  CHECK(r.value.beta() == doctest::Approx(0.9285714285714286).epsilon(1e-15));

  const auto u = Velocity::from_beta(-0.73);
  CHECK(compose_sr3(u, identity_sr(), identity_sr()).value == u);

  // Agreement with nested pairwise composition in the interior.
  const auto a = Velocity::from_beta(0.3);
  const auto b = Velocity::from_beta(0.4);
  const auto c = Velocity::from_beta(-0.3);
  const double nested = compose_sr(compose_sr(a, b).value, c).value.beta();
  CHECK(compose_sr3(a, b, c).value.beta() == doctest::Approx(nested).epsilon(1e-15));
}

TEST_CASE("compose_sr3 agrees with nested composition away from the boundary") {
  // At per-operand margin 1e-3 the worst disagreement stays within the
  // library tolerance; closer to the boundary the nested intermediate's
  // quantization is amplified by ~2/margin and the bound no longer holds.
  std::mt19937_64 rng(11);
  for (int i = 0; i < 5000; ++i) {
    const auto u = Velocity::from_beta(random_beta(rng, 1.0 - 1e-3));
    const auto v = Velocity::from_beta(random_beta(rng, 1.0 - 1e-3));
    const auto w = Velocity::from_beta(random_beta(rng, 1.0 - 1e-3));
    const double nested = compose_sr(compose_sr(u, v).value, w).value.beta();
    const double direct = compose_sr3(u, v, w).value.beta();
    CHECK(std::abs(direct - nested) <= kDefaultBetaTolerance);
  }
}

TEST_CASE("inverse negates and identity is neutral") {
  CHECK(inverse(Velocity::from_beta(0.25)).beta() == -0.25);
  CHECK(inverse(Velocity::from_beta(-0.9)).beta() == 0.9);
  CHECK(inverse(identity_sr()).beta() == 0.0);
  CHECK(identity_sr().beta() == 0.0);
}

TEST_CASE("compose_newton adds and overflows loudly") {
  const auto x = NewtonVelocity::from_value(3.0);
  const auto y = NewtonVelocity::from_value(4.0);
  CHECK(compose_newton(x, y).value() == 7.0);
  CHECK(compose_newton(x, NewtonVelocity::from_value(0.0)) == x);
  CHECK(compose_newton(NewtonVelocity::from_value(5.0), NewtonVelocity::from_value(-5.0))
            .value() == 0.0);

  const auto big = NewtonVelocity::from_value(1.7e308);
  CHECK_THROWS_AS(compose_newton(big, big), OverflowError);
  CHECK_THROWS_AS(NewtonVelocity::from_value(std::nan("")), InvalidInput);
}

TEST_CASE("partial_derivative_sr evaluates item-5 cases and stays positive") {
  const auto zero = identity_sr();
  const auto half = Velocity::from_beta(0.5);
  CHECK(partial_derivative_sr(zero, zero) == 1.0);
  CHECK(partial_derivative_sr(zero, half) == 0.75);
  CHECK(partial_derivative_sr(half, half) == 0.48);  // 0.75 / 1.25^2

  const auto nine = Velocity::from_beta(0.9);
  CHECK(partial_derivative_sr(nine, nine) ==
        doctest::Approx((1.0 - 0.81) / (1.81 * 1.81)).epsilon(1e-15));

  std::mt19937_64 rng(13);
  for (int i = 0; i < 5000; ++i) {
    const auto u = Velocity::from_beta(random_beta(rng, 1.0 - 1e-12));
    const auto v = Velocity::from_beta(random_beta(rng, 1.0 - 1e-12));
    CHECK(partial_derivative_sr(u, v) > 0.0);
  }
}

TEST_CASE("partial_derivative_sr matches central finite differences") {
  constexpr double h = 1e-6;
  for (double ub : {-0.99, -0.4, 0.0, 0.33, 0.99}) {
    for (double vb : {-0.99, -0.5, 0.0, 0.7, 0.99}) {
      const auto v = Velocity::from_beta(vb);
      const double fd = (compose_sr(Velocity::from_beta(ub + h), v).value.beta() -
                         compose_sr(Velocity::from_beta(ub - h), v).value.beta()) /
                        (2.0 * h);
      const double closed = partial_derivative_sr(Velocity::from_beta(ub), v);
      CHECK(std::abs(fd - closed) / closed <= 1e-6);
    }
  }
}

TEST_CASE("extended composition absorbs light speed exactly") {
  const auto light = ExtendedVelocity::from_beta(1.0);
  const auto back = ExtendedVelocity::from_beta(-1.0);

  for (double b : {-0.999999999, -0.5, 0.0, 0.3, 0.99, 1.0 - 1e-12}) {
    const auto v = ExtendedVelocity::from_beta(b);
    CHECK(compose_extended(light, v).beta() == 1.0);
    CHECK(compose_extended(v, light).beta() == 1.0);
    CHECK(compose_extended(back, v).beta() == -1.0);
    CHECK(compose_extended(v, back).beta() == -1.0);
  }

  // Same-direction light composes to light; only uv = -1 is excluded.
  CHECK(compose_extended(light, light).beta() == 1.0);
  CHECK(compose_extended(back, back).beta() == -1.0);
  CHECK_THROWS_AS(compose_extended(light, back), DomainError);
  CHECK_THROWS_AS(compose_extended(back, light), DomainError);
}

TEST_CASE("extended composition matches the open composition on the interior") {
  const auto a = ExtendedVelocity::from_beta(0.5);
  CHECK(compose_extended(a, a).beta() == 0.8);

  std::mt19937_64 rng(4242);
  for (int i = 0; i < 2000; ++i) {
    const double ub = random_beta(rng);
    const double vb = random_beta(rng);
    const double open =
        compose_sr(Velocity::from_beta(ub), Velocity::from_beta(vb)).value.beta();
    const double closed =
        compose_extended(ExtendedVelocity::from_beta(ub), ExtendedVelocity::from_beta(vb))
            .beta();
    CHECK(open == closed);
  }
}

TEST_CASE("widening is total, narrowing rejects the boundary") {
  const auto u = Velocity::from_beta(0.7);
  const ExtendedVelocity wide = widen(u);
  CHECK(wide.beta() == 0.7);
  CHECK(narrow(wide) == u);

  CHECK_THROWS_AS(narrow(ExtendedVelocity::from_beta(1.0)), DomainError);
  CHECK_THROWS_AS(narrow(ExtendedVelocity::from_beta(-1.0)), DomainError);

  CHECK(ExtendedVelocity::from_beta(1.0).beta() == 1.0);
  CHECK_THROWS_AS(ExtendedVelocity::from_beta(1.0 + 1e-9), DomainError);
  CHECK_THROWS_AS(ExtendedVelocity::from_beta(std::nan("")), InvalidInput);
}

TEST_CASE("IsoParams validates its domain") {
  const IsoParams p = IsoParams::make(299792458.0, 2.5);
  CHECK(p.c == 299792458.0);
  CHECK(p.k == 2.5);
  CHECK_THROWS_AS(IsoParams::make(0.0, 1.0), InvalidInput);
  CHECK_THROWS_AS(IsoParams::make(1.0, 0.0), InvalidInput);
  CHECK_THROWS_AS(IsoParams::make(-1.0, 1.0), InvalidInput);
  CHECK_THROWS_AS(IsoParams::make(1.0, -2.0), InvalidInput);
  CHECK_THROWS_AS(IsoParams::make(std::nan(""), 1.0), InvalidInput);
}

TEST_CASE("physical conversion round-trips through make_velocity") {
  const double c = 299792458.0;
  const Velocity v = make_velocity(0.25 * c, c);
  CHECK(v.beta() == 0.25);
  CHECK(v.physical(c) == 0.25 * c);
}
