#include "rapidity/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "rapidity/errors.hpp"
#include "rapidity/format.hpp"
#include "rapidity/rapidity_map.hpp"

namespace rapidity {

namespace {

// Smallest positive violation marker for strictness breaches that have
// zero magnitude (exact ties where strict inequality was required).
constexpr double kTieViolation = std::numeric_limits<double>::denorm_min();

/// Uniform in rapidity space: x ~ U[-a, a] with a = 2 atanh(1 - margin),
/// mapped back through tanh(x/2). The 64-bit engine output is reduced to
/// a double explicitly so the stream does not depend on the standard
/// library's distribution implementation.
class RapidityUniformSampler {
 public:
  RapidityUniformSampler(std::uint64_t seed, double margin)
      : engine_(seed), amplitude_(2.0 * std::atanh(1.0 - margin)) {}

  double next_beta() {
    const double u01 = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    const double x = (2.0 * u01 - 1.0) * amplitude_;
    return std::tanh(0.5 * x);
  }

 private:
  std::mt19937_64 engine_;
  double amplitude_;
};

/// Running worst case; ties keep the earliest sample.
class WorstCase {
 public:
  void update(double violation, std::initializer_list<double> inputs) {
    if (samples_ == 0 || violation > max_violation_) {
      max_violation_ = violation;
      inputs_.assign(inputs);
    }
    ++samples_;
  }

  [[nodiscard]] std::int64_t samples() const noexcept { return samples_; }
  [[nodiscard]] double max_violation() const noexcept { return max_violation_; }
  [[nodiscard]] const std::vector<double>& inputs() const noexcept { return inputs_; }

  CheckReport report(std::string law, double tol) const {
    CheckReport r;
    r.law_name = std::move(law);
    r.samples_run = samples_;
    r.max_abs_violation = max_violation_;
    r.worst_case_inputs = inputs_;
    r.tolerance = tol;
    r.passed = max_violation_ <= tol;
    return r;
  }

 private:
  std::int64_t samples_ = 0;
  double max_violation_ = 0.0;
  std::vector<double> inputs_;
};

Velocity vel(double beta) { return Velocity::from_beta(beta); }

}  // namespace

void SampleSpec::validate() const {
  if (count < 1) throw InvalidInput("sample count must be >= 1");
  if (!(boundary_margin > 0.0) || !(boundary_margin < 1.0)) {
    throw InvalidInput("boundary_margin must lie in (0, 1)");
  }
}

std::vector<double> edge_grid_betas() {
  std::vector<double> grid;
  grid.reserve(16);
  for (int j = 8; j <= 15; ++j) {
    const double beta = 1.0 - std::pow(10.0, -j);
    grid.push_back(beta);
    grid.push_back(-beta);
  }
  return grid;
}

std::string to_json(const CheckReport& report) {
  std::string out = "{\"law_name\":\"" + report.law_name + "\"";
  out += ",\"samples_run\":" + std::to_string(report.samples_run);
  out += ",\"max_abs_violation\":" + format_double(report.max_abs_violation, kMachineDigits);
  out += ",\"worst_case_inputs\":[";
  for (std::size_t i = 0; i < report.worst_case_inputs.size(); ++i) {
    if (i != 0) out += ",";
    out += format_double(report.worst_case_inputs[i], kMachineDigits);
  }
  out += "],\"tolerance\":" + format_double(report.tolerance, kMachineDigits);
  out += ",\"passed\":";
  out += report.passed ? "true" : "false";
  out += "}";
  return out;
}

CheckReport check_associativity(const SampleSpec& spec, double tol) {
  spec.validate();
  if (!(tol > 0.0)) throw InvalidInput("tolerance must be > 0");

  RapidityUniformSampler sampler(spec.seed, spec.boundary_margin);
  WorstCase worst;
  for (std::int64_t i = 0; i < spec.count; ++i) {
    const Velocity u = vel(sampler.next_beta());
    const Velocity v = vel(sampler.next_beta());
    const Velocity w = vel(sampler.next_beta());
    const double left = compose_sr(compose_sr(u, v).value, w).value.beta();
    const double right = compose_sr(u, compose_sr(v, w).value).value.beta();
    worst.update(std::abs(left - right), {u.beta(), v.beta(), w.beta()});
  }
  return worst.report("associativity", tol);
}

CheckReport check_commutativity(const SampleSpec& spec) {
  spec.validate();

  WorstCase worst;
  const auto record = [&](Velocity u, Velocity v) {
    const double uv = compose_sr(u, v).value.beta();
    const double vu = compose_sr(v, u).value.beta();
    worst.update(std::abs(uv - vu), {u.beta(), v.beta()});
  };

  if (spec.include_edge_grid) {
    const auto grid = edge_grid_betas();
    for (double a : grid) {
      for (double b : grid) record(vel(a), vel(b));
    }
  }
  RapidityUniformSampler sampler(spec.seed, spec.boundary_margin);
  for (std::int64_t i = 0; i < spec.count; ++i) {
    record(vel(sampler.next_beta()), vel(sampler.next_beta()));
  }
  return worst.report("commutativity", 0.0);
}

CheckReport check_identity(const SampleSpec& spec) {
  spec.validate();

  WorstCase worst;
  const auto record = [&](Velocity u) {
    const double right = compose_sr(u, identity_sr()).value.beta();
    const double left = compose_sr(identity_sr(), u).value.beta();
    const double violation =
        std::max(std::abs(right - u.beta()), std::abs(left - u.beta()));
    worst.update(violation, {u.beta()});
  };

  if (spec.include_edge_grid) {
    for (double b : edge_grid_betas()) record(vel(b));
  }
  RapidityUniformSampler sampler(spec.seed, spec.boundary_margin);
  for (std::int64_t i = 0; i < spec.count; ++i) record(vel(sampler.next_beta()));
  return worst.report("identity", 0.0);
}

CheckReport check_inverse(const SampleSpec& spec) {
  spec.validate();

  WorstCase worst;
  const auto record = [&](Velocity u) {
    const double forward = compose_sr(u, inverse(u)).value.beta();
    const double backward = compose_sr(inverse(u), u).value.beta();
    const double violation = std::max(std::abs(forward), std::abs(backward));
    worst.update(violation, {u.beta()});
  };

  if (spec.include_edge_grid) {
    for (double b : edge_grid_betas()) record(vel(b));
  }
  RapidityUniformSampler sampler(spec.seed, spec.boundary_margin);
  for (std::int64_t i = 0; i < spec.count; ++i) record(vel(sampler.next_beta()));
  return worst.report("inverse", 0.0);
}

CheckReport check_identity_inverse(const SampleSpec& spec) {
  const CheckReport identity = check_identity(spec);
  const CheckReport inv = check_inverse(spec);

  CheckReport merged;
  merged.law_name = "identity-inverse";
  merged.samples_run = identity.samples_run + inv.samples_run;
  merged.tolerance = 0.0;
  if (inv.max_abs_violation > identity.max_abs_violation) {
    merged.max_abs_violation = inv.max_abs_violation;
    merged.worst_case_inputs = inv.worst_case_inputs;
  } else {
    merged.max_abs_violation = identity.max_abs_violation;
    merged.worst_case_inputs = identity.worst_case_inputs;
  }
  merged.passed = merged.max_abs_violation <= merged.tolerance;
  return merged;
}

CheckReport check_homomorphism(IsoParams p, const SampleSpec& spec, double tol) {
  spec.validate();
  if (!(tol > 0.0)) throw InvalidInput("tolerance must be > 0");

  RapidityUniformSampler sampler(spec.seed, spec.boundary_margin);
  WorstCase worst;
  for (std::int64_t i = 0; i < spec.count; ++i) {
    const Velocity u = vel(sampler.next_beta());
    const Velocity v = vel(sampler.next_beta());
    const double au = to_rapidity(u, p).value();
    const double av = to_rapidity(v, p).value();
    const double aw = to_rapidity(compose_sr(u, v).value, p).value();
    const double defect = std::abs(aw - au - av) / (1.0 + std::abs(au) + std::abs(av));
    worst.update(defect, {u.beta(), v.beta()});
  }
  return worst.report("homomorphism", tol);
}

CheckReport check_monotonicity(const SampleSpec& spec) {
  spec.validate();

  WorstCase worst;

  // Positivity of the partial derivative on random pairs.
  RapidityUniformSampler sampler(spec.seed, spec.boundary_margin);
  for (std::int64_t i = 0; i < spec.count; ++i) {
    const Velocity u = vel(sampler.next_beta());
    const Velocity v = vel(sampler.next_beta());
    const double d = partial_derivative_sr(u, v);
    const double violation = d > 0.0 ? 0.0 : std::max(-d, kTieViolation);
    worst.update(violation, {u.beta(), v.beta()});
  }

  // Strict increase of u -> u*v along a deterministic rapidity-uniform
  // grid, at several fixed v.
  constexpr int kGridPoints = 101;
  const double a = 2.0 * std::atanh(1.0 - spec.boundary_margin);
  for (double vb : {-0.9, -0.5, 0.0, 0.5, 0.9}) {
    const Velocity v = vel(vb);
    double previous = 0.0;
    for (int i = 0; i < kGridPoints; ++i) {
      const double x = -a + (2.0 * a * i) / (kGridPoints - 1);
      const Velocity u = vel(std::tanh(0.5 * x));
      const double w = compose_sr(u, v).value.beta();
      if (i > 0) {
        const double violation = w > previous ? 0.0 : std::max(previous - w, kTieViolation);
        worst.update(violation, {u.beta(), vb});
      }
      previous = w;
    }
  }

  return worst.report("monotonicity", 0.0);
}

CheckReport check_limits(int n_steps) {
  if (n_steps < 2 || n_steps > 15) {
    throw InvalidInput("n_steps must lie in [2, 15] (1 - 10^-16 is not representable)");
  }

  WorstCase worst;
  double previous = 0.0;
  double final_value = 0.0;
  for (int n = 1; n <= n_steps; ++n) {
    const double beta = 1.0 - std::pow(10.0, -n);
    const Velocity u = vel(beta);
    const double w = compose_sr(u, u).value.beta();

    // Strictly increasing until the sequence saturates at the largest
    // interior double; constant at that ceiling afterwards.
    double violation = 0.0;
    if (n > 1) {
      const bool plateau = (w == kMaxInteriorBeta && previous == kMaxInteriorBeta);
      if (!(w > previous) && !plateau) {
        violation = std::max(previous - w, kTieViolation);
      }
    }

    // Mirror sequence toward -1 is the exact negation.
    const double mirror = compose_sr(inverse(u), inverse(u)).value.beta();
    violation = std::max(violation, std::abs(mirror + w));

    worst.update(violation, {beta});
    previous = w;
    final_value = w;
  }

  // The sequence approaches 1: the last term must at least clear its own
  // input's distance from the boundary.
  const double floor = 1.0 - std::pow(10.0, -n_steps);
  if (!(final_value > floor)) {
    worst.update(floor - final_value + kTieViolation, {final_value});
  }

  return worst.report("limits", 0.0);
}

const std::vector<std::string>& standard_law_names() {
  static const std::vector<std::string> names = {
      "associativity", "commutativity", "identity",     "inverse",
      "homomorphism",  "monotonicity",  "limits"};
  return names;
}

namespace {

// Decorrelate per-law sample streams while staying reproducible.
std::uint64_t law_seed(std::uint64_t base, std::size_t law_index) {
  return base + 0x9E3779B97F4A7C15ULL * (law_index + 1);
}

constexpr double kWideMargin = 1e-15;

}  // namespace

CheckReport run_standard_law(const std::string& law, std::int64_t count,
                             std::uint64_t seed, double beta_tol, IsoParams p) {
  const auto& names = standard_law_names();
  const auto it = std::find(names.begin(), names.end(), law);
  if (it == names.end()) throw InvalidInput("unknown law: " + law);
  const std::size_t index = static_cast<std::size_t>(it - names.begin());

  SampleSpec spec;
  spec.count = count;
  spec.seed = law_seed(seed, index);

  switch (index) {
    case 0:  // associativity: margin keeps triples well-conditioned at 1e-12
      spec.boundary_margin = 1e-6;
      return check_associativity(spec, beta_tol);
    case 1:  // commutativity: exact law, sample the whole carrier
      spec.boundary_margin = kWideMargin;
      spec.include_edge_grid = true;
      return check_commutativity(spec);
    case 2:
      spec.boundary_margin = kWideMargin;
      spec.include_edge_grid = true;
      return check_identity(spec);
    case 3:
      spec.boundary_margin = kWideMargin;
      spec.include_edge_grid = true;
      return check_inverse(spec);
    case 4:
      spec.boundary_margin = kHomomorphismMargin;
      return check_homomorphism(p, spec, kHomomorphismTolerance);
    case 5:
      spec.boundary_margin = 1e-6;
      return check_monotonicity(spec);
    default:
      return check_limits(12);
  }
}

std::vector<CheckReport> run_standard_suite(std::int64_t count, std::uint64_t seed,
                                            double beta_tol, IsoParams p) {
  std::vector<CheckReport> reports;
  reports.reserve(standard_law_names().size());
  for (const auto& law : standard_law_names()) {
    reports.push_back(run_standard_law(law, count, seed, beta_tol, p));
  }
  return reports;
}

}  // namespace rapidity
