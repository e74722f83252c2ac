#pragma once

#include <string>
#include <string_view>

namespace rapidity {

/// Extended-precision reference for the composition law. Operands are
/// exact decimal literals (so boundary-hugging values like
/// 0.99999999999999999999 that no double can hold are expressible),
/// |u| < 1 and |v| < 1 (DomainError otherwise). Evaluates
/// (u + v) / (1 + u v) carrying precision_digits significant decimal
/// digits (>= 30, InvalidInput otherwise) and returns the result as a
/// normalized decimal string.
std::string oracle_compose(std::string_view u_beta, std::string_view v_beta,
                           int precision_digits);

/// Same computation with binary64 operands (converted exactly); the
/// extended result is rounded to the nearest double.
double oracle_compose_nearest(double u_beta, double v_beta, int precision_digits);

/// |x - (u + v)/(1 + u v)| with the reference composition and the
/// difference both evaluated in extended precision. Measurement tool
/// for ranking composition routes against ground truth.
double error_against_oracle(double x, double u_beta, double v_beta, int precision_digits);

}  // namespace rapidity
