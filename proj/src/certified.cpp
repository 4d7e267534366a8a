#include "knotcert/certified.hpp"

#include <algorithm>
#include <stdexcept>

namespace knotcert {

CertifiedValue CertifiedValue::interval(const Rational& lo, const Rational& hi) {
  if (lo > hi) throw std::invalid_argument("certified interval with lo > hi");
  if (lo == hi) return exact(lo);
  return CertifiedValue(false, lo, hi);
}

const Rational& CertifiedValue::value() const {
  if (!exact_) throw std::logic_error("value() on a non-exact certified quantity");
  return lo_;
}

CertifiedValue CertifiedValue::operator-() const {
  return CertifiedValue(exact_, -hi_, -lo_);
}

CertifiedValue& CertifiedValue::operator+=(const CertifiedValue& o) {
  exact_ = exact_ && o.exact_;
  lo_ += o.lo_;
  hi_ += o.hi_;
  return *this;
}

CertifiedValue& CertifiedValue::operator-=(const CertifiedValue& o) {
  exact_ = exact_ && o.exact_;
  Rational lo = lo_ - o.hi_;
  Rational hi = hi_ - o.lo_;
  lo_ = lo;
  hi_ = hi;
  return *this;
}

CertifiedValue& CertifiedValue::operator*=(const CertifiedValue& o) {
  Rational p1 = lo_ * o.lo_, p2 = lo_ * o.hi_, p3 = hi_ * o.lo_, p4 = hi_ * o.hi_;
  Rational lo = std::min(std::min(p1, p2), std::min(p3, p4));
  Rational hi = std::max(std::max(p1, p2), std::max(p3, p4));
  exact_ = exact_ && o.exact_;
  lo_ = lo;
  hi_ = hi;
  return *this;
}

Cmp CertifiedValue::greater_than(const Rational& c) const {
  if (lo_ > c) return Cmp::True;
  if (hi_ <= c) return Cmp::False;
  return Cmp::Inconclusive;
}

Cmp CertifiedValue::greater_equal(const Rational& c) const {
  if (lo_ >= c) return Cmp::True;
  if (hi_ < c) return Cmp::False;
  return Cmp::Inconclusive;
}

Cmp CertifiedValue::less_than(const Rational& c) const {
  if (hi_ < c) return Cmp::True;
  if (lo_ >= c) return Cmp::False;
  return Cmp::Inconclusive;
}

Cmp CertifiedValue::greater_than(const CertifiedValue& o) const {
  if (lo_ > o.hi_) return Cmp::True;
  if (hi_ <= o.lo_) return Cmp::False;
  return Cmp::Inconclusive;
}

Cmp CertifiedValue::greater_equal(const CertifiedValue& o) const {
  if (lo_ >= o.hi_) return Cmp::True;
  if (hi_ < o.lo_) return Cmp::False;
  return Cmp::Inconclusive;
}

CertifiedValue operator+(CertifiedValue a, const CertifiedValue& b) { return a += b; }
CertifiedValue operator-(CertifiedValue a, const CertifiedValue& b) { return a -= b; }
CertifiedValue operator*(CertifiedValue a, const CertifiedValue& b) { return a *= b; }
CertifiedValue operator*(const Rational& s, CertifiedValue a) {
  return a *= CertifiedValue::exact(s);
}

const char* cmp_name(Cmp c) {
  switch (c) {
    case Cmp::True: return "true";
    case Cmp::False: return "false";
    default: return "inconclusive";
  }
}

}  // namespace knotcert
