#include "rapidity/quadrature.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include "rapidity/errors.hpp"

namespace rapidity {

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK dqk15
// constants). Abscissae are for the symmetric interval [-1, 1]; odd
// indices are the embedded Gauss nodes.
constexpr std::array<double, 8> kNodes = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691,
    0.7415311855993944, 0.5860872354676911, 0.4058451513773972,
    0.2077849550078985, 0.0};

constexpr std::array<double, 8> kKronrodWeights = {
    0.0229353220105292, 0.0630920926299786, 0.1047900103222502,
    0.1406532597155259, 0.1690047266392679, 0.1903505780647854,
    0.2044329400752989, 0.2094821410847278};

constexpr std::array<double, 4> kGaussWeights = {
    0.1294849661688697, 0.2797053914892767, 0.3818300505051189,
    0.4179591836734694};

struct Panel {
  double lo = 0.0;
  double hi = 0.0;
  double kronrod = 0.0;
  double discrepancy = 0.0;  // |K15 - G7|
  int depth = 0;
};

struct WorstFirst {
  bool operator()(const Panel& a, const Panel& b) const {
    return a.discrepancy < b.discrepancy;
  }
};

Panel evaluate_panel(const std::function<double(double)>& f, double lo, double hi,
                     int depth) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);

  const double fc = f(center);
  double kronrod = kKronrodWeights[7] * fc;
  double gauss = kGaussWeights[3] * fc;

  for (int i = 0; i < 7; ++i) {
    const double offset = half * kNodes[i];
    const double sum = f(center - offset) + f(center + offset);
    kronrod += kKronrodWeights[i] * sum;
    if (i % 2 == 1) gauss += kGaussWeights[i / 2] * sum;
  }

  kronrod *= half;
  gauss *= half;
  return Panel{lo, hi, kronrod, std::abs(kronrod - gauss), depth};
}

// Bisection beyond this depth cannot reveal new structure; such panels
// are frozen at their current estimate.
constexpr int kMaxDepth = 52;

// A panel whose discrepancy is down at the rounding noise of its own
// value cannot be improved by splitting.
constexpr double kRoundoffFloor = 100.0 * std::numeric_limits<double>::epsilon();

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a,
                                    double b, double abs_tol, long max_evaluations) {
  if (!(abs_tol > 0.0) || !std::isfinite(abs_tol)) {
    throw InvalidInput("quadrature tolerance must be positive and finite");
  }
  if (a == b) return QuadratureResult{0.0, 0.0, 0};

  std::priority_queue<Panel, std::vector<Panel>, WorstFirst> active;
  std::vector<Panel> frozen;
  long evaluations = 15;
  active.push(evaluate_panel(f, a, b, 0));
  double active_disc = active.top().discrepancy;
  double frozen_disc = 0.0;

  // Worst-first refinement. Panels that hit the rounding floor or the
  // depth cap are frozen: their discrepancy is irreducible, so if the
  // frozen total alone exceeds the tolerance the request is hopeless.
  while (active_disc + frozen_disc > abs_tol && !active.empty()) {
    const Panel worst = active.top();

    const bool floor_limited =
        worst.discrepancy <= kRoundoffFloor * std::abs(worst.kronrod);
    if (floor_limited || worst.depth >= kMaxDepth) {
      active.pop();
      active_disc -= worst.discrepancy;
      frozen_disc += worst.discrepancy;
      frozen.push_back(worst);
      if (frozen_disc > abs_tol) {
        throw ConvergenceError(
            "requested quadrature tolerance is below the attainable rounding floor");
      }
      continue;
    }

    if (evaluations + 30 > max_evaluations) {
      throw ConvergenceError("quadrature evaluation budget exhausted");
    }
    active.pop();
    active_disc -= worst.discrepancy;

    const double mid = 0.5 * (worst.lo + worst.hi);
    const Panel left = evaluate_panel(f, worst.lo, mid, worst.depth + 1);
    const Panel right = evaluate_panel(f, mid, worst.hi, worst.depth + 1);
    evaluations += 30;
    active_disc += left.discrepancy + right.discrepancy;
    active.push(left);
    active.push(right);
  }

  double value = 0.0;
  double error = 0.0;
  for (const Panel& p : frozen) {
    value += p.kronrod;
    error += p.discrepancy;
  }
  while (!active.empty()) {
    value += active.top().kronrod;
    error += active.top().discrepancy;
    active.pop();
  }
  return QuadratureResult{value, error, evaluations};
}

Rapidity rapidity_by_quadrature(Velocity u, IsoParams p, double tol) {
  if (!(tol > 0.0) || !std::isfinite(tol)) {
    throw InvalidInput("tol must be positive and finite");
  }

  const double b = std::abs(u.beta());
  if (b == 0.0) return Rapidity::from_value(0.0);

  // Direct variable up to the split point, substituted tail beyond it.
  constexpr double kSplit = 1.0 - 1e-6;
  const double scale = 2.0 * p.k;
  const double integral_tol = tol / scale;

  const auto direct = [](double t) { return 1.0 / ((1.0 - t) * (1.0 + t)); };

  constexpr long kBudget = 1000000;
  double total = 0.0;

  if (b <= kSplit) {
    total = integrate_adaptive(direct, 0.0, b, integral_tol, kBudget).value;
  } else {
    const QuadratureResult head =
        integrate_adaptive(direct, 0.0, kSplit, 0.5 * integral_tol, kBudget);

    // t = 1 - e^{-s}:  dt / (1 - t^2)  =  ds / (2 - e^{-s}).
    const auto tail = [](double s) { return 1.0 / (2.0 - std::exp(-s)); };
    const double s0 = -std::log1p(-kSplit);
    const double s1 = -std::log1p(-b);
    const QuadratureResult rest = integrate_adaptive(
        tail, s0, s1, 0.5 * integral_tol, kBudget - head.evaluations);
    total = head.value + rest.value;
  }

  return Rapidity::from_value(std::copysign(scale * total, u.beta()));
}

}  // namespace rapidity
