#pragma once

#include <functional>

#include "rapidity/rapidity_map.hpp"
#include "rapidity/velocity.hpp"

namespace rapidity {

/// Outcome of an adaptive integration.
struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  long evaluations = 0;
};

/// Adaptive Gauss-Kronrod (G7, K15) integration of f over [a, b] to an
/// absolute tolerance. Panels whose K15-G7 discrepancy exceeds their
/// share of the tolerance are bisected. ConvergenceError when the
/// evaluation budget runs out first.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a,
                                    double b, double abs_tol,
                                    long max_evaluations = 1000000);

/// Independent numerical route to the forward map: integrates the
/// defining relation
///
///   alpha(u) = c^2 alpha'(0) * integral_0^u dv / (c^2 - v^2)
///            = 2k * integral_0^beta dt / (1 - t^2)
///
/// by adaptive quadrature instead of the closed form. Absolute error of
/// the returned rapidity is bounded by tol. For |beta| > 1 - 1e-6 the
/// tail is integrated under the substitution t = 1 - e^{-s}, which turns
/// the integrand into 1/(2 - e^{-s}): smooth and bounded all the way to
/// the boundary. (Substituting t = tanh(w) instead would reduce the
/// integrand to the constant 1 and the "integration" to evaluating
/// atanh - no longer an independent check.)
///
/// Throws InvalidInput for tol <= 0, ConvergenceError if the evaluation
/// budget (1e6 integrand evaluations) is exhausted.
Rapidity rapidity_by_quadrature(Velocity u, IsoParams p, double tol);

}  // namespace rapidity
