#pragma once

// Exact rational arithmetic, backed by GMP. Every coefficient in this
// library is a Rational; nothing is ever rounded.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace toric {

using Integer = mpz_class;
using Rational = mpq_class;

// Parse "p/q" or "p" (base 10). Result is canonicalized to lowest terms
// with positive denominator.
inline Rational rational_from_string(const std::string& text) {
  Rational x;
  if (x.set_str(text, 10) != 0) {
    throw std::invalid_argument("rational_from_string: cannot parse '" + text + "'");
  }
  x.canonicalize();
  return x;
}

// Canonical string form: "p/q", or just "p" when the denominator is 1.
inline std::string to_string(const Rational& x) { return x.get_str(); }

inline std::string to_string(const Integer& x) { return x.get_str(); }

// x^e for a (possibly negative) integer base carried exactly.
inline Integer integer_pow(const Integer& base, unsigned long e) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

inline Integer integer_pow(long base, unsigned long e) {
  return integer_pow(Integer(base), e);
}

inline Rational rational_pow(const Rational& base, unsigned long e) {
  Rational out;
  mpz_pow_ui(mpq_numref(out.get_mpq_t()), mpq_numref(base.get_mpq_t()), e);
  mpz_pow_ui(mpq_denref(out.get_mpq_t()), mpq_denref(base.get_mpq_t()), e);
  // Powers of a canonical fraction are canonical.
  return out;
}

// Largest integer n with n <= x.
inline Integer rational_floor(const Rational& x) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), mpq_numref(x.get_mpq_t()), mpq_denref(x.get_mpq_t()));
  return out;
}

// Fractional part {x} = x - floor(x), always in [0, 1).
inline Rational fractional_part(const Rational& x) {
  return x - Rational(rational_floor(x));
}

}  // namespace toric
