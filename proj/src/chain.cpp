#include "rapidity/chain.hpp"

#include <cmath>

#include "rapidity/errors.hpp"
#include "rapidity/format.hpp"
#include "rapidity/rapidity_map.hpp"

namespace rapidity {

Velocity fold_compose(std::span<const Velocity> velocities) {
  if (velocities.empty()) throw EmptyInput("fold_compose requires a non-empty list");
  if (velocities.size() == 1) return velocities.front();

  const IsoParams p = IsoParams::natural();
  double sum = 0.0;
  for (const Velocity& v : velocities) {
    sum += to_rapidity(v, p).value();
  }
  return to_velocity(Rapidity::from_value(sum), p);
}

Velocity boost_chain(Velocity dv, std::int64_t n) {
  if (n < 0) throw InvalidInput("chain length must be >= 0");
  if (n > kMaxChainLength) throw InvalidInput("chain length exceeds 1e6 cap");

  const IsoParams p = IsoParams::natural();
  const double x = static_cast<double>(n) * to_rapidity(dv, p).value();
  return to_velocity(Rapidity::from_value(x), p);
}

NewtonVelocity newton_chain(NewtonVelocity dv, std::int64_t n) {
  if (n < 0) throw InvalidInput("chain length must be >= 0");
  if (n > kMaxChainLength) throw InvalidInput("chain length exceeds 1e6 cap");

  const double total = static_cast<double>(n) * dv.value();
  if (!std::isfinite(total)) throw OverflowError("Newtonian chain overflows");
  return NewtonVelocity::from_value(total);
}

std::vector<ChainRow> comparison_table(double dv_beta, std::int64_t n_max) {
  detail::require_finite(dv_beta, "dv_beta");
  if (!(dv_beta > 0.0) || !(dv_beta < 1.0)) {
    throw InvalidInput("dv_beta must lie in (0, 1)");
  }
  if (n_max < 0 || n_max > kMaxChainLength) {
    throw InvalidInput("n_max must lie in [0, 1e6]");
  }

  const Velocity dv = Velocity::from_beta(dv_beta);
  const NewtonVelocity ndv = NewtonVelocity::from_value(dv_beta);
  const double alpha_step = to_rapidity(dv, IsoParams::natural()).value();

  std::vector<ChainRow> rows;
  rows.reserve(static_cast<std::size_t>(n_max) + 1);
  for (std::int64_t step = 0; step <= n_max; ++step) {
    ChainRow row;
    row.step = step;
    row.sr_beta = boost_chain(dv, step).beta();
    row.newton_value = newton_chain(ndv, step).value();
    row.rapidity = static_cast<double>(step) * alpha_step;
    rows.push_back(row);
  }
  return rows;
}

std::string to_csv(std::span<const ChainRow> rows) {
  std::string out = "step,sr_beta,newton_value,rapidity\n";
  for (const ChainRow& row : rows) {
    out += std::to_string(row.step);
    out += ",";
    out += format_double(row.sr_beta, kMachineDigits);
    out += ",";
    out += format_double(row.newton_value, kMachineDigits);
    out += ",";
    out += format_double(row.rapidity, kMachineDigits);
    out += "\n";
  }
  return out;
}

std::string to_json(std::span<const ChainRow> rows) {
  std::string out = "[";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i != 0) out += ",";
    out += "{\"step\":" + std::to_string(rows[i].step);
    out += ",\"sr_beta\":" + format_double(rows[i].sr_beta, kMachineDigits);
    out += ",\"newton_value\":" + format_double(rows[i].newton_value, kMachineDigits);
    out += ",\"rapidity\":" + format_double(rows[i].rapidity, kMachineDigits);
    out += "}";
  }
  out += "]";
  return out;
}

}  // namespace rapidity
