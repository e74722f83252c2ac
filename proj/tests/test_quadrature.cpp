#include <doctest.h>

#include <cmath>

#include "rapidity/quadrature.hpp"

using namespace rapidity;

TEST_CASE("integrate_adaptive handles textbook integrals") {
  // K15 integrates low-degree polynomials exactly.
  const auto cubic = [](double x) { return x * x * x; };
  const QuadratureResult r = integrate_adaptive(cubic, 0.0, 1.0, 1e-12);
  CHECK(r.value == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(r.evaluations == 15);

  const auto sine = [](double x) { return std::sin(x); };
  const QuadratureResult s = integrate_adaptive(sine, 0.0, std::acos(-1.0), 1e-12);
  CHECK(std::abs(s.value - 2.0) <= 1e-12);

  CHECK(integrate_adaptive(cubic, 0.5, 0.5, 1e-12).value == 0.0);
  CHECK_THROWS_AS(integrate_adaptive(cubic, 0.0, 1.0, 0.0), InvalidInput);
  CHECK_THROWS_AS(integrate_adaptive(cubic, 0.0, 1.0, -1e-3), InvalidInput);
}

TEST_CASE("integrate_adaptive reports convergence failure honestly") {
  // Discrepancy estimates bottom out at rounding noise, far above 1e-300.
  const auto f = [](double x) { return 1.0 / (1.0 + x * x); };
  CHECK_THROWS_AS(integrate_adaptive(f, 0.0, 1.0, 1e-300), ConvergenceError);
}

TEST_CASE("quadrature route reproduces the closed-form map") {
  const IsoParams half_k = IsoParams::make(1.0, 0.5);
  const IsoParams unit = IsoParams::natural();

  CHECK(rapidity_by_quadrature(identity_sr(), unit, 1e-10).value() == 0.0);

  // 0.5 ln 3 at k = 0.5
  const double q = rapidity_by_quadrature(Velocity::from_beta(0.5), half_k, 1e-10).value();
  CHECK(std::abs(q - 0.5493061443340548) <= 1e-10);

  struct Case {
    double beta;
    double k;
    double reference;  // k ln((1+beta)/(1-beta)), 25-digit evaluation
  };
  const Case cases[] = {
      {0.9, 1.0, 2.944438979166440460009027},
      {0.999, 1.0, 7.600402334500400063551935},
      {0.999, 0.5, 3.800201167250200031775967},
  };
  for (const Case& c : cases) {
    const IsoParams p = IsoParams::make(1.0, c.k);
    const double got = rapidity_by_quadrature(Velocity::from_beta(c.beta), p, 1e-10).value();
    CHECK(std::abs(got - c.reference) <= 1e-10);
    const double neg =
        rapidity_by_quadrature(Velocity::from_beta(-c.beta), p, 1e-10).value();
    CHECK(std::abs(neg + c.reference) <= 1e-10);
  }
}

TEST_CASE("quadrature route agrees with the closed form near the boundary") {
  const IsoParams p = IsoParams::natural();
  // Spec-level case at looser tolerance.
  const auto v999 = Velocity::from_beta(0.999);
  const double q999 = rapidity_by_quadrature(v999, p, 1e-8).value();
  CHECK(std::abs(q999 - to_rapidity(v999, p).value()) <= 1e-8);

  // Substituted-tail path: |beta| beyond the direct-integration split.
  for (double b : {1.0 - 1e-7, 1.0 - 1e-9, 1.0 - 1e-12, kMaxInteriorBeta}) {
    const auto v = Velocity::from_beta(b);
    const double got = rapidity_by_quadrature(v, p, 1e-10).value();
    const double closed = to_rapidity(v, p).value();
    CHECK(std::abs(got - closed) <= 1e-9);  // closed form itself carries ~ulp(40)
  }
}

TEST_CASE("rapidity_by_quadrature validates its tolerance") {
  const IsoParams p = IsoParams::natural();
  const auto v = Velocity::from_beta(0.5);
  CHECK_THROWS_AS(rapidity_by_quadrature(v, p, 0.0), InvalidInput);
  CHECK_THROWS_AS(rapidity_by_quadrature(v, p, -1.0), InvalidInput);
  CHECK_THROWS_AS(rapidity_by_quadrature(v, p, 1e-300), ConvergenceError);
}
