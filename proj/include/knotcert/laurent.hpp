#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "knotcert/rational.hpp"

namespace knotcert {

/// Laurent polynomial over Q in one variable t, i.e. an element of Q[t, t^-1].
/// Stored sparsely as exponent -> nonzero coefficient.  The ring is Euclidean
/// with degree = exponent span of the canonical representative, which is what
/// makes Smith normal form and gcd computations below possible.
class LaurentPoly {
 public:
  LaurentPoly() = default;

  static LaurentPoly zero() { return LaurentPoly(); }
  static LaurentPoly constant(const Rational& c) { return monomial(c, 0); }
  static LaurentPoly monomial(const Rational& c, long exp);
  // Dense ascending coefficients c[0] + c[1] t + ... times t^shift.
  static LaurentPoly from_coeffs(const std::vector<Rational>& coeffs, long shift = 0);

  bool is_zero() const { return coeffs_.empty(); }
  // Lowest/highest exponent with nonzero coefficient; both require nonzero.
  long min_exp() const;
  long max_exp() const;
  // max_exp - min_exp.  The Euclidean degree of the associate class.
  long span() const;
  Rational coeff(long exp) const;
  const std::map<long, Rational>& terms() const { return coeffs_; }

  // Units of Q[t,t^-1] are exactly the nonzero monomials q t^k.
  bool is_unit() const { return coeffs_.size() == 1; }

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  LaurentPoly& operator*=(const Rational& scalar);

  // Substitute t -> 1/t.
  LaurentPoly reversed() const;
  // Multiply by t^k.
  LaurentPoly shifted(long k) const;

  /// The canonical associate: lowest exponent 0, integer coefficients with
  /// content 1, positive leading coefficient.  Unique in each associate class
  /// q t^k * p, so "equal up to units" becomes plain equality of canonicals.
  LaurentPoly canonical() const;

  // True for palindromic canonical representatives (p(t) ~ p(1/t)).
  bool is_symmetric() const;

  // Evaluate at a rational point.  t0 = 0 requires min_exp() >= 0.
  Rational evaluate(const Rational& t0) const;

  // Human-readable rendering, highest exponent first ("2*t^2-5*t+2").
  std::string str(const std::string& var = "t") const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  std::map<long, Rational> coeffs_;
  void set(long exp, const Rational& c);
};

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator*(const Rational& s, LaurentPoly a);

// Euclidean division: p = q * quotient + remainder with either remainder = 0
// or span(remainder) < span(q).  q must be nonzero.
std::pair<LaurentPoly, LaurentPoly> divmod(const LaurentPoly& p, const LaurentPoly& q);

// Exact division; throws std::invalid_argument if q does not divide p.
LaurentPoly exact_divide(const LaurentPoly& p, const LaurentPoly& q);

bool divides(const LaurentPoly& q, const LaurentPoly& p);

// Monic-remainder Euclid, result in canonical form.  gcd(p, 0) = canonical(p);
// both arguments zero is a precondition violation.
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

LaurentPoly poly_lcm(const LaurentPoly& a, const LaurentPoly& b);

bool associates(const LaurentPoly& a, const LaurentPoly& b);

/// n-th cyclotomic polynomial, n >= 1.  Computed by the recursion
/// t^n - 1 = prod_{d | n} Phi_d; memoized behind a mutex.
LaurentPoly cyclotomic(unsigned n);

unsigned long euler_phi(unsigned long n);

/// Resultant of the canonical representatives, via a Sylvester matrix and
/// fraction-free elimination.  Convention: Res(p, q) = lc(p)^deg(q) *
/// prod q(alpha) over roots alpha of p.  Res with a zero argument is 0; two
/// nonzero constants give 1.
Rational resultant(const LaurentPoly& p, const LaurentPoly& q);

// Derivative d/dt of an ordinary polynomial representative (min_exp >= 0
// not required; the formal derivative of each term is taken).
LaurentPoly derivative(const LaurentPoly& p);

// p / gcd(p, p'): same distinct roots, all simple.
LaurentPoly square_free_part(const LaurentPoly& p);

/// For a palindromic canonical polynomial P of even span 2d, the unique S with
/// t^-d P(t) = S((t + 1/t) / 2).  This is the Chebyshev change of variable
/// x = cos(theta) used to pull circle evaluations back to a real interval;
/// S is returned as an ordinary polynomial in the same variable slot.
/// Throws std::invalid_argument if P is not palindromic of even span.
LaurentPoly symmetrize(const LaurentPoly& p);

}  // namespace knotcert
