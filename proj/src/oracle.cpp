#include "rapidity/oracle.hpp"

#include <mpfr.h>

#include <cmath>
#include <cstdlib>
#include <string>

#include "rapidity/errors.hpp"

namespace rapidity {

namespace {

constexpr int kMinDigits = 30;

mpfr_prec_t bits_for(int decimal_digits) {
  // log2(10) with guard bits so the final decimal rounding is clean.
  return static_cast<mpfr_prec_t>(std::ceil(decimal_digits * 3.3219280948873623)) + 32;
}

// RAII wrapper around a single mpfr_t.
class Big {
 public:
  explicit Big(mpfr_prec_t prec) { mpfr_init2(value_, prec); }
  ~Big() { mpfr_clear(value_); }
  Big(const Big&) = delete;
  Big& operator=(const Big&) = delete;

  mpfr_ptr get() noexcept { return value_; }
  mpfr_srcptr get() const noexcept { return value_; }

 private:
  mpfr_t value_;
};

void parse_decimal(Big& out, std::string_view text, const char* what) {
  const std::string owned(text);
  char* end = nullptr;
  mpfr_strtofr(out.get(), owned.c_str(), &end, 10, MPFR_RNDN);
  if (end == owned.c_str() || *end != '\0') {
    throw InvalidInput(std::string(what) + " is not a decimal literal");
  }
  if (!mpfr_number_p(out.get())) {
    throw InvalidInput(std::string(what) + " must be finite");
  }
}

void require_interior(const Big& x, const char* what) {
  if (mpfr_cmp_d(x.get(), 1.0) >= 0 || mpfr_cmp_d(x.get(), -1.0) <= 0) {
    throw DomainError(std::string(what) + " must satisfy |beta| < 1");
  }
}

// result <- (u + v) / (1 + u v)
void compose_big(Big& result, const Big& u, const Big& v, mpfr_prec_t prec) {
  Big num(prec), den(prec);
  mpfr_add(num.get(), u.get(), v.get(), MPFR_RNDN);
  mpfr_mul(den.get(), u.get(), v.get(), MPFR_RNDN);
  mpfr_add_d(den.get(), den.get(), 1.0, MPFR_RNDN);
  mpfr_div(result.get(), num.get(), den.get(), MPFR_RNDN);
}

std::string format_decimal(const Big& x, int digits) {
  if (mpfr_zero_p(x.get())) return "0";

  mpfr_exp_t exponent = 0;
  char* raw = mpfr_get_str(nullptr, &exponent, 10, static_cast<size_t>(digits),
                           x.get(), MPFR_RNDN);
  std::string mantissa(raw);
  mpfr_free_str(raw);

  std::string sign;
  if (!mantissa.empty() && mantissa.front() == '-') {
    sign = "-";
    mantissa.erase(mantissa.begin());
  }

  // mpfr_get_str's exponent is relative to 0.ddd...; normalize to d.ddd e(N).
  std::string out = sign + mantissa.substr(0, 1);
  if (mantissa.size() > 1) out += "." + mantissa.substr(1);
  out += "e" + std::to_string(static_cast<long>(exponent) - 1);
  return out;
}

}  // namespace

std::string oracle_compose(std::string_view u_beta, std::string_view v_beta,
                           int precision_digits) {
  if (precision_digits < kMinDigits) {
    throw InvalidInput("oracle precision must be >= 30 decimal digits");
  }
  const mpfr_prec_t prec = bits_for(precision_digits);

  Big u(prec), v(prec), result(prec);
  parse_decimal(u, u_beta, "u_beta");
  parse_decimal(v, v_beta, "v_beta");
  require_interior(u, "u_beta");
  require_interior(v, "v_beta");

  compose_big(result, u, v, prec);
  return format_decimal(result, precision_digits);
}

double oracle_compose_nearest(double u_beta, double v_beta, int precision_digits) {
  if (precision_digits < kMinDigits) {
    throw InvalidInput("oracle precision must be >= 30 decimal digits");
  }
  if (!(std::abs(u_beta) < 1.0) || !(std::abs(v_beta) < 1.0)) {
    throw DomainError("oracle operands must satisfy |beta| < 1");
  }
  const mpfr_prec_t prec = bits_for(precision_digits);

  Big u(prec), v(prec), result(prec);
  mpfr_set_d(u.get(), u_beta, MPFR_RNDN);  // binary64 -> mpfr is exact
  mpfr_set_d(v.get(), v_beta, MPFR_RNDN);
  compose_big(result, u, v, prec);
  return mpfr_get_d(result.get(), MPFR_RNDN);
}

double error_against_oracle(double x, double u_beta, double v_beta, int precision_digits) {
  if (precision_digits < kMinDigits) {
    throw InvalidInput("oracle precision must be >= 30 decimal digits");
  }
  if (!(std::abs(u_beta) < 1.0) || !(std::abs(v_beta) < 1.0)) {
    throw DomainError("oracle operands must satisfy |beta| < 1");
  }
  const mpfr_prec_t prec = bits_for(precision_digits);

  Big u(prec), v(prec), reference(prec), diff(prec);
  mpfr_set_d(u.get(), u_beta, MPFR_RNDN);
  mpfr_set_d(v.get(), v_beta, MPFR_RNDN);
  compose_big(reference, u, v, prec);

  mpfr_sub_d(diff.get(), reference.get(), x, MPFR_RNDN);
  mpfr_abs(diff.get(), diff.get(), MPFR_RNDN);
  return mpfr_get_d(diff.get(), MPFR_RNDN);
}

}  // namespace rapidity
