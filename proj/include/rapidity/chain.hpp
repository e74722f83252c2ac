#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rapidity/velocity.hpp"

namespace rapidity {

/// One step of an SR-vs-Newton accumulation table. sr_beta follows the
/// relativistic chain (bounded by 1), newton_value the Newtonian chain
/// (unbounded, in units of c), rapidity the additive coordinate
/// step * alpha(dv) at k = 1 -- linear in the step by the homomorphism.
struct ChainRow {
  std::int64_t step = 0;
  double sr_beta = 0.0;
  double newton_value = 0.0;
  double rapidity = 0.0;
};

/// Largest chain length accepted per call.
inline constexpr std::int64_t kMaxChainLength = 1000000;

/// Left fold of the composition over a non-empty list, routed through
/// rapidity space: one sum of forward maps and a single inverse map at
/// the end, which is associative by construction. EmptyInput on an
/// empty list.
Velocity fold_compose(std::span<const Velocity> velocities);

/// Closed form of n identical boosts: beta^{-1}(n * alpha(dv)).
/// n in [0, 1e6]; n = 0 yields the identity.
Velocity boost_chain(Velocity dv, std::int64_t n);

/// Newtonian chain: n * dv. OverflowError if the product is not finite.
NewtonVelocity newton_chain(NewtonVelocity dv, std::int64_t n);

/// Rows for steps 0..n_max contrasting the two accumulation laws.
/// Requires 0 < dv_beta < 1 and 0 <= n_max <= 1e6 (InvalidInput);
/// n_max = 0 yields the single all-zero row.
std::vector<ChainRow> comparison_table(double dv_beta, std::int64_t n_max);

/// CSV with header `step,sr_beta,newton_value,rapidity`; 17 significant
/// digits, '.' decimal separator.
std::string to_csv(std::span<const ChainRow> rows);

/// JSON array of row objects with the same fields.
std::string to_json(std::span<const ChainRow> rows);

}  // namespace rapidity
