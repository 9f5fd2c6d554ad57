#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <string>

#include "cherpoi/errors.hpp"

namespace cherpoi {

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw InvalidInput("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Canonical text form: "p" or "p/q" with q > 0.
inline std::string to_string(const Rational& r) {
  return r.get_str();
}

inline Rational parse_rational(const std::string& text) {
  Rational r;
  if (r.set_str(text, 10) != 0) throw InvalidInput("not a rational: '" + text + "'");
  if (r.get_den() == 0) throw InvalidInput("zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

inline Rational pow(const Rational& base, std::int64_t e) {
  if (e < 0) {
    if (base == 0) throw InvalidInput("zero to a negative power");
    Rational inv = 1 / base;
    return pow(inv, -e);
  }
  Rational num, den;
  mpz_pow_ui(num.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_num_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(e));
  return num / den;
}

inline Integer factorial(unsigned n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("exponent overflow");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("exponent overflow");
  return r;
}

inline long to_long(const Integer& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("integer does not fit in long");
  return z.get_si();
}

inline long to_long(const Rational& q) {
  if (q.get_den() != 1) throw InvalidInput("expected an integer, got " + q.get_str());
  return to_long(Integer(q.get_num()));
}

}  // namespace cherpoi
