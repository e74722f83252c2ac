#pragma once

#include <charconv>
#include <string>

namespace rapidity {

/// Machine formats carry 17 significant digits (round-trip exact for
/// binary64); human-facing plain output uses 6.
inline constexpr int kMachineDigits = 17;
inline constexpr int kPlainDigits = 6;

/// %g-style formatting with a fixed significant-digit count, via
/// std::to_chars: locale-independent by construction ('.' separator
/// regardless of environment).
inline std::string format_double(double x, int significant_digits) {
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), x,
                                    std::chars_format::general, significant_digits);
  return std::string(buffer, result.ptr);
}

}  // namespace rapidity
