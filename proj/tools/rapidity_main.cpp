// Command-line front end: composition, rapidity mapping, chain tables,
// and the law-verification suite, with machine-readable output.
//
// Exit codes: 0 success, 1 verification failure, 2 usage/domain error.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rapidity/chain.hpp"
#include "rapidity/errors.hpp"
#include "rapidity/format.hpp"
#include "rapidity/rapidity_map.hpp"
#include "rapidity/velocity.hpp"
#include "rapidity/verify.hpp"

namespace {

using namespace rapidity;

struct CliConfig {
  double c = 1.0;
  double k = 1.0;
  double tol = 1e-12;
  std::uint64_t seed = 0;
  std::string format = "plain";
  bool natural = false;   // set when --natural given explicitly
  bool physical = false;  // set when --c given (and --natural absent)
  bool extended = false;

  [[nodiscard]] IsoParams params() const { return IsoParams::make(c, k); }
  [[nodiscard]] bool literals_are_physical() const { return physical && !natural; }
};

int fail_usage(const std::string& message) {
  std::fprintf(stderr, "error: %s\n", message.c_str());
  return 2;
}

// ---------------------------------------------------------------------------
// compose

int run_compose(const CliConfig& cfg, const std::vector<double>& literals) {
  const double scale = cfg.literals_are_physical() ? cfg.c : 1.0;

  if (cfg.extended) {
    std::vector<ExtendedVelocity> operands;
    operands.reserve(literals.size());
    for (double lit : literals) {
      operands.push_back(ExtendedVelocity::from_beta(lit / scale));
    }
    ExtendedVelocity acc = operands.front();
    for (std::size_t i = 1; i < operands.size(); ++i) {
      acc = compose_extended(acc, operands[i]);
    }
    const double beta = acc.beta();
    if (cfg.format == "json") {
      std::printf("{\"beta\":%s,\"velocity\":%s,\"saturated\":false}\n",
                  format_double(beta, kMachineDigits).c_str(),
                  format_double(beta * cfg.c, kMachineDigits).c_str());
    } else if (cfg.format == "csv") {
      std::printf("beta,velocity,saturated\n%s,%s,false\n",
                  format_double(beta, kMachineDigits).c_str(),
                  format_double(beta * cfg.c, kMachineDigits).c_str());
    } else {
      std::printf("beta = %s\nvelocity = %s\n",
                  format_double(beta, kPlainDigits).c_str(),
                  format_double(beta * cfg.c, kPlainDigits).c_str());
    }
    return 0;
  }

  std::vector<Velocity> operands;
  operands.reserve(literals.size());
  for (double lit : literals) {
    operands.push_back(cfg.literals_are_physical() ? make_velocity(lit, cfg.c)
                                                   : Velocity::from_beta(lit));
  }
  Velocity acc = operands.front();
  bool saturated = false;
  for (std::size_t i = 1; i < operands.size(); ++i) {
    const Composition step = compose_sr(acc, operands[i]);
    acc = step.value;
    saturated = saturated || step.saturated;
  }

  const double beta = acc.beta();
  const char* sat = saturated ? "true" : "false";
  if (cfg.format == "json") {
    std::printf("{\"beta\":%s,\"velocity\":%s,\"saturated\":%s}\n",
                format_double(beta, kMachineDigits).c_str(),
                format_double(beta * cfg.c, kMachineDigits).c_str(), sat);
  } else if (cfg.format == "csv") {
    std::printf("beta,velocity,saturated\n%s,%s,%s\n",
                format_double(beta, kMachineDigits).c_str(),
                format_double(beta * cfg.c, kMachineDigits).c_str(), sat);
  } else {
    std::printf("beta = %s\nvelocity = %s\n", format_double(beta, kPlainDigits).c_str(),
                format_double(beta * cfg.c, kPlainDigits).c_str());
    if (saturated) std::printf("saturated = true\n");
  }
  return 0;
}

// ---------------------------------------------------------------------------
// rapidity

int run_rapidity(const CliConfig& cfg, const std::string& direction, double literal) {
  const IsoParams p = cfg.params();

  if (direction == "to") {
    const double scale = cfg.literals_are_physical() ? cfg.c : 1.0;
    const Velocity u = cfg.literals_are_physical() ? make_velocity(literal, cfg.c)
                                                   : Velocity::from_beta(literal / scale);
    const double x = to_rapidity(u, p).value();
    if (cfg.format == "json") {
      std::printf("{\"rapidity\":%s}\n", format_double(x, kMachineDigits).c_str());
    } else if (cfg.format == "csv") {
      std::printf("rapidity\n%s\n", format_double(x, kMachineDigits).c_str());
    } else {
      std::printf("rapidity = %s\n", format_double(x, kPlainDigits).c_str());
    }
    return 0;
  }

  // from: any finite real rapidity
  const Velocity u = to_velocity(Rapidity::from_value(literal), p);
  if (cfg.format == "json") {
    std::printf("{\"beta\":%s,\"velocity\":%s}\n",
                format_double(u.beta(), kMachineDigits).c_str(),
                format_double(u.physical(cfg.c), kMachineDigits).c_str());
  } else if (cfg.format == "csv") {
    std::printf("beta,velocity\n%s,%s\n", format_double(u.beta(), kMachineDigits).c_str(),
                format_double(u.physical(cfg.c), kMachineDigits).c_str());
  } else {
    std::printf("beta = %s\nvelocity = %s\n", format_double(u.beta(), kPlainDigits).c_str(),
                format_double(u.physical(cfg.c), kPlainDigits).c_str());
  }
  return 0;
}

// ---------------------------------------------------------------------------
// chain

int run_chain(const CliConfig& cfg, double dv_literal, std::int64_t n) {
  if (n < 1) return fail_usage("n must be >= 1");
  const double dv_beta =
      cfg.literals_are_physical() ? dv_literal / cfg.c : dv_literal;
  const std::vector<ChainRow> rows = comparison_table(dv_beta, n);

  if (cfg.format == "json") {
    std::printf("%s\n", to_json(rows).c_str());
  } else if (cfg.format == "csv") {
    std::fputs(to_csv(rows).c_str(), stdout);
  } else {
    std::printf("%6s %12s %14s %12s\n", "step", "sr_beta", "newton_value", "rapidity");
    for (const ChainRow& row : rows) {
      std::printf("%6lld %12s %14s %12s\n", static_cast<long long>(row.step),
                  format_double(row.sr_beta, kPlainDigits).c_str(),
                  format_double(row.newton_value, kPlainDigits).c_str(),
                  format_double(row.rapidity, kPlainDigits).c_str());
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------
// verify

std::string report_csv_line(const CheckReport& r) {
  std::string inputs;
  for (std::size_t i = 0; i < r.worst_case_inputs.size(); ++i) {
    if (i != 0) inputs += ";";
    inputs += format_double(r.worst_case_inputs[i], kMachineDigits);
  }
  std::string line = r.law_name;
  line += "," + std::to_string(r.samples_run);
  line += "," + format_double(r.max_abs_violation, kMachineDigits);
  line += ",\"" + inputs + "\"";
  line += "," + format_double(r.tolerance, kMachineDigits);
  line += ",";
  line += r.passed ? "true" : "false";
  return line;
}

int run_verify(const CliConfig& cfg, std::vector<std::string> laws, std::int64_t count) {
  if (laws.empty() || (laws.size() == 1 && laws.front() == "all")) {
    laws = standard_law_names();
  }
  for (const auto& law : laws) {
    const auto& known = standard_law_names();
    if (std::find(known.begin(), known.end(), law) == known.end()) {
      return fail_usage("unknown law: " + law);
    }
  }

  std::vector<CheckReport> reports;
  reports.reserve(laws.size());
  for (const auto& law : laws) {
    reports.push_back(run_standard_law(law, count, cfg.seed, cfg.tol, cfg.params()));
  }

  bool all_passed = true;
  if (cfg.format == "json") {
    std::string out = "[";
    for (std::size_t i = 0; i < reports.size(); ++i) {
      if (i != 0) out += ",";
      out += to_json(reports[i]);
    }
    out += "]";
    std::printf("%s\n", out.c_str());
  } else if (cfg.format == "csv") {
    std::printf("law_name,samples_run,max_abs_violation,worst_case_inputs,tolerance,passed\n");
    for (const auto& r : reports) std::printf("%s\n", report_csv_line(r).c_str());
  } else {
    for (const auto& r : reports) {
      std::printf("%-14s samples=%-7lld max_violation=%-12s tolerance=%-12s %s\n",
                  r.law_name.c_str(), static_cast<long long>(r.samples_run),
                  format_double(r.max_abs_violation, kPlainDigits).c_str(),
                  format_double(r.tolerance, kPlainDigits).c_str(),
                  r.passed ? "pass" : "FAIL");
    }
  }
  for (const auto& r : reports) all_passed = all_passed && r.passed;
  return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Relativistic velocity composition, the rapidity isomorphism family, "
               "and property-based verification of the group laws"};
  app.require_subcommand(1);

  CliConfig cfg;
  app.add_option("--c", cfg.c, "light speed in physical units (> 0)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--k", cfg.k, "isomorphism scale parameter (> 0)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--tol", cfg.tol,
                 "absolute beta-space tolerance for associativity "
                 "(homomorphism keeps its relative default 1e-9)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "sampling seed")->capture_default_str();
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "plain"}))
      ->envname("RAPIDITY_FORMAT")
      ->capture_default_str();
  app.add_flag("--natural", cfg.natural,
               "treat velocity literals as fractions of c (default)");
  app.add_flag("--extended", cfg.extended,
               "closed-domain semantics: |v| = c admitted, uv = -c^2 rejected");

  // compose
  std::vector<double> compose_literals;
  CLI::App* compose = app.add_subcommand("compose", "compose velocities (n-ary fold)");
  compose->fallthrough();
  compose->add_option("velocities", compose_literals, "velocity literals")
      ->required()
      ->expected(2, -1);

  // rapidity
  std::string direction;
  double rapidity_literal = 0.0;
  CLI::App* rap = app.add_subcommand("rapidity", "map a velocity to its rapidity or back");
  rap->fallthrough();
  rap->add_option("direction", direction, "'to' (velocity -> rapidity) or 'from'")
      ->required()
      ->check(CLI::IsMember({"to", "from"}));
  rap->add_option("value", rapidity_literal, "velocity or rapidity literal")->required();

  // chain
  double chain_dv = 0.0;
  std::int64_t chain_n = 0;
  CLI::App* chain = app.add_subcommand("chain", "SR-vs-Newton accumulation table");
  chain->fallthrough();
  chain->add_option("dv", chain_dv, "per-step velocity, 0 < dv < c")->required();
  chain->add_option("n", chain_n, "number of steps, 1..1e6")->required();

  // verify
  std::vector<std::string> verify_laws;
  std::int64_t verify_count = 10000;
  CLI::App* verify = app.add_subcommand("verify", "run the group-law verification suite");
  verify->fallthrough();
  verify->add_option("laws", verify_laws,
                     "laws to check: all, associativity, commutativity, identity, "
                     "inverse, homomorphism, monotonicity, limits");
  verify->add_option("--count", verify_count, "samples per law")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  cfg.physical = app.count("--c") > 0;

  try {
    if (compose->parsed()) return run_compose(cfg, compose_literals);
    if (rap->parsed()) return run_rapidity(cfg, direction, rapidity_literal);
    if (chain->parsed()) return run_chain(cfg, chain_dv, chain_n);
    if (verify->parsed()) return run_verify(cfg, verify_laws, verify_count);
  } catch (const DomainError& e) {
    return fail_usage(e.what());
  } catch (const InvalidInput& e) {
    return fail_usage(e.what());
  } catch (const EmptyInput& e) {
    return fail_usage(e.what());
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
