#pragma once

#include <utility>
#include <vector>

#include "knotcert/laurent.hpp"

namespace knotcert {

/// Open interval (low, high) known to contain exactly one root of a
/// square-free polynomial, with sign(poly(low)) != sign(poly(high)) and
/// neither endpoint a root.  refine() bisects while keeping both guarantees.
class IsolatingInterval {
 public:
  IsolatingInterval(LaurentPoly square_free, Rational low, Rational high);

  const Rational& low() const { return low_; }
  const Rational& high() const { return high_; }
  Rational mid() const { return (low_ + high_) / 2; }
  Rational width() const { return high_ - low_; }
  const LaurentPoly& poly() const { return poly_; }

  void refine();
  void refine_below(const Rational& width);

 private:
  LaurentPoly poly_;
  Rational low_, high_;
  int sign_low_;
};

/// Distinct real roots of p inside the open interval (a, b), one isolating
/// interval per root, ordered by position.  Exact rational roots are returned
/// as degenerate brackets would be useless, so they too come as genuine
/// sign-change intervals; use root_if_rational() on the square-free part when
/// an exact value is wanted.  p must be nonzero; multiple roots are handled by
/// passing to the square-free part internally.
std::vector<IsolatingInterval> sturm_isolate(const LaurentPoly& p, const Rational& a,
                                             const Rational& b);

/// All rational roots of p in (a, b), found through the rational root theorem
/// on the square-free canonical representative.  Sorted ascending, each root
/// reported once.  Gives up (returns nothing) when the constant or leading
/// coefficient is too large to factor quickly; callers must treat the result
/// as "rational roots found", not "all roots are irrational otherwise".
std::vector<Rational> rational_roots(const LaurentPoly& p, const Rational& a,
                                     const Rational& b);

// Number of distinct roots of the square-free poly in the half-open interval
// (a, b], by Sturm's theorem.
int sturm_count(const std::vector<LaurentPoly>& chain, const Rational& a, const Rational& b);

std::vector<LaurentPoly> sturm_chain(const LaurentPoly& square_free);

/// Certified enclosure of arccos(x)/pi as an exact pair [lo, hi] of rationals
/// with hi - lo <= width.  Values with a closed form at the rationals
/// +-1, +-1/2, 0 come back exact (lo == hi).  Everything else goes through
/// directed-rounding multiprecision evaluation; the returned endpoints are
/// exact dyadic rationals, so the enclosure itself is a proof-grade object.
/// Requires -1 <= x <= 1.
std::pair<Rational, Rational> arccos_enclosure(const Rational& x, const Rational& width);

}  // namespace knotcert
