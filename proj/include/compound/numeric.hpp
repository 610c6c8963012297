#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace compound {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised when a computed quantity violates a proven property (integrality,
/// invertibility). Always indicates a bug, never bad input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline Integer pow2(long e) {
  if (e < 0) throw std::invalid_argument("pow2: negative exponent");
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(e));
  return r;
}

inline Rational pow2_signed(long e) {
  if (e >= 0) return Rational(pow2(e));
  return Rational(Integer(1), pow2(-e));
}

inline Integer factorial(long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

inline Integer to_integer(const Rational& q, const char* what) {
  if (!is_integral(q)) {
    throw InvariantViolation(std::string(what) + ": non-integral value " + q.get_str());
  }
  return q.get_num();
}

}  // namespace compound
