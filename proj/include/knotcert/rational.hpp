#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace knotcert {

// All arithmetic in this library is exact.  Rationals are GMP-backed; no
// floating point ever enters a certified quantity.
using Integer = mpz_class;
using Rational = mpq_class;

// Parse "p", "p/q" or a plain decimal/scientific literal ("0.05", "1e-30")
// into an exact rational.  Throws std::invalid_argument on malformed input
// or a zero denominator.
Rational parse_rational(const std::string& text);

// Always renders as "p/q" with q > 0, even for integers ("3/1").
std::string format_rational(const Rational& value);

inline Integer pow10(unsigned long k) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, k);
  return r;
}

// floor(a/b) and ceil(a/b) for exact integers, b != 0.
inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}
inline Integer ceil_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Integer rational_floor(const Rational& r) {
  return floor_div(r.get_num(), r.get_den());
}
inline Integer rational_ceil(const Rational& r) {
  return ceil_div(r.get_num(), r.get_den());
}

inline int sign(const Rational& r) { return sgn(r); }

}  // namespace knotcert
