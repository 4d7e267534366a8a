#pragma once

#include "knotcert/rational.hpp"

namespace knotcert {

// Three-valued comparison outcome: an interval can straddle a threshold, in
// which case no honest yes/no answer exists at the current precision.
enum class Cmp { True, False, Inconclusive };

/// A real number known either exactly (a rational) or through a rational
/// interval enclosure [lo, hi].  All arithmetic is outward-safe: the result
/// encloses every value the operands can take.  Comparisons return a
/// three-valued Cmp so that straddling intervals are reported as
/// Inconclusive rather than silently rounded into a verdict.
class CertifiedValue {
 public:
  CertifiedValue() : exact_(true), lo_(0), hi_(0) {}

  static CertifiedValue exact(const Rational& v) { return CertifiedValue(true, v, v); }
  static CertifiedValue interval(const Rational& lo, const Rational& hi);

  bool is_exact() const { return exact_; }
  // Exact value; throws std::logic_error when only an interval is known.
  const Rational& value() const;
  const Rational& lower() const { return lo_; }
  const Rational& upper() const { return hi_; }
  Rational width() const { return hi_ - lo_; }

  CertifiedValue operator-() const;
  CertifiedValue& operator+=(const CertifiedValue& o);
  CertifiedValue& operator-=(const CertifiedValue& o);
  CertifiedValue& operator*=(const CertifiedValue& o);

  Cmp greater_than(const Rational& c) const;
  Cmp greater_equal(const Rational& c) const;
  Cmp less_than(const Rational& c) const;
  Cmp greater_than(const CertifiedValue& o) const;
  Cmp greater_equal(const CertifiedValue& o) const;

  friend bool operator==(const CertifiedValue& a, const CertifiedValue& b) {
    return a.exact_ == b.exact_ && a.lo_ == b.lo_ && a.hi_ == b.hi_;
  }

 private:
  CertifiedValue(bool exact, Rational lo, Rational hi)
      : exact_(exact), lo_(std::move(lo)), hi_(std::move(hi)) {}
  bool exact_;
  Rational lo_, hi_;
};

CertifiedValue operator+(CertifiedValue a, const CertifiedValue& b);
CertifiedValue operator-(CertifiedValue a, const CertifiedValue& b);
CertifiedValue operator*(CertifiedValue a, const CertifiedValue& b);
CertifiedValue operator*(const Rational& s, CertifiedValue a);

const char* cmp_name(Cmp c);

}  // namespace knotcert
