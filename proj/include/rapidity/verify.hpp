#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rapidity/velocity.hpp"

namespace rapidity {

/// How a property check draws its samples. Betas are drawn uniformly in
/// rapidity space -- uniform x in [-a(1-margin), +a(1-margin)] mapped
/// back through the inverse map -- because uniform-in-beta sampling
/// never exercises the near-boundary region where the numerics are
/// interesting. include_edge_grid additionally feeds the deterministic
/// grid beta = +-(1 - 10^-j), j = 8..15, to the checks whose laws hold
/// exactly there (identity, inverse, commutativity).
struct SampleSpec {
  std::int64_t count = 10000;
  std::uint64_t seed = 0;
  double boundary_margin = 1e-6;
  bool include_edge_grid = false;

  void validate() const;
};

/// Structured outcome of one property-verification run. Failures are
/// data, never exceptions: the caller aggregates many laws per run.
struct CheckReport {
  std::string law_name;
  std::int64_t samples_run = 0;
  double max_abs_violation = 0.0;
  std::vector<double> worst_case_inputs;
  double tolerance = 0.0;
  bool passed = false;
};

/// JSON object with fields exactly: law_name, samples_run,
/// max_abs_violation, worst_case_inputs, tolerance, passed.
/// Numbers carry 17 significant digits.
std::string to_json(const CheckReport& report);

/// The deterministic near-boundary grid: +-(1 - 10^-j), j = 8..15.
std::vector<double> edge_grid_betas();

/// |(u*v)*w - u*(v*w)| over sampled triples.
CheckReport check_associativity(const SampleSpec& spec, double tol);

/// u*v vs v*u. The formula is bit-symmetric under IEEE-754, so the
/// tolerance is zero and the expected violation is exactly zero.
CheckReport check_commutativity(const SampleSpec& spec);

/// u*0 = u, exactly.
CheckReport check_identity(const SampleSpec& spec);

/// u*(-u) = 0, exactly (the numerator cancels exactly in floating point).
CheckReport check_inverse(const SampleSpec& spec);

/// Combined identity + inverse check: worst violation of either law.
CheckReport check_identity_inverse(const SampleSpec& spec);

/// |alpha(u*v) - alpha(u) - alpha(v)| / (1 + |alpha(u)| + |alpha(v)|)
/// over sampled pairs. The defect of the composed double grows like
/// eps / (1 - w^2), i.e. exponentially in |alpha(u) + alpha(v)|, so the
/// margin must keep composed results out of the last ~1e-8 of the
/// interval; 1e-3 leaves two orders of magnitude of headroom at the
/// default tolerance.
CheckReport check_homomorphism(IsoParams p, const SampleSpec& spec, double tol);

/// partial_derivative_sr > 0 on all samples, and u -> u*v strictly
/// increasing along a deterministic grid at several fixed v.
CheckReport check_monotonicity(const SampleSpec& spec);

/// compose_sr(u, u) along beta = 1 - 10^-n, n = 1..n_steps: strictly
/// increasing until the value saturates at the largest interior double,
/// constant afterwards, final value > 1 - 1e-12; the mirror sequence
/// toward -1 must be the exact negation. n_steps in [2, 15]
/// (1 - 10^-16 is not representable below 1).
CheckReport check_limits(int n_steps);

/// Per-law default tolerances used by the standard suite.
inline constexpr double kAssociativityTolerance = 1e-12;
inline constexpr double kHomomorphismTolerance = 1e-9;
inline constexpr double kHomomorphismMargin = 1e-3;

/// Names accepted by run_standard_suite, in report order.
const std::vector<std::string>& standard_law_names();

/// Run one named law with the standard suite's sampling policy:
/// associativity at the given margin/beta_tol, homomorphism at its
/// conditioning-safe margin and relative tolerance, exactness laws over
/// wide samples plus the edge grid. Throws InvalidInput for an unknown
/// law name.
CheckReport run_standard_law(const std::string& law, std::int64_t count,
                             std::uint64_t seed, double beta_tol, IsoParams p);

/// All seven standard laws in order: associativity, commutativity,
/// identity, inverse, homomorphism, monotonicity, limits.
std::vector<CheckReport> run_standard_suite(std::int64_t count, std::uint64_t seed,
                                            double beta_tol, IsoParams p);

}  // namespace rapidity
