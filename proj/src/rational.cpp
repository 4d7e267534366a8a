#include "knotcert/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace knotcert {

namespace {

bool looks_like_fraction(const std::string& s) {
  return s.find('/') != std::string::npos;
}

bool looks_like_decimal(const std::string& s) {
  return s.find('.') != std::string::npos || s.find('e') != std::string::npos ||
         s.find('E') != std::string::npos;
}

// "123.45e-6" -> exact rational.  Mantissa digits become an integer scaled by
// a power of ten; the exponent shifts the scale.
Rational parse_decimal(const std::string& s) {
  std::size_t pos = 0;
  bool neg = false;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
    neg = (s[pos] == '-');
    ++pos;
  }
  std::string digits;
  long frac_digits = 0;
  bool seen_dot = false, seen_digit = false;
  while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '.')) {
    if (s[pos] == '.') {
      if (seen_dot) throw std::invalid_argument("malformed decimal: " + s);
      seen_dot = true;
    } else {
      digits.push_back(s[pos]);
      seen_digit = true;
      if (seen_dot) ++frac_digits;
    }
    ++pos;
  }
  if (!seen_digit) throw std::invalid_argument("malformed decimal: " + s);
  long exp10 = 0;
  if (pos < s.size() && (s[pos] == 'e' || s[pos] == 'E')) {
    ++pos;
    if (pos >= s.size()) throw std::invalid_argument("malformed exponent: " + s);
    char* end = nullptr;
    exp10 = std::strtol(s.c_str() + pos, &end, 10);
    if (end != s.c_str() + s.size()) throw std::invalid_argument("malformed exponent: " + s);
  } else if (pos != s.size()) {
    throw std::invalid_argument("malformed decimal: " + s);
  }
  // explicit base 10: the mpz string constructor auto-detects bases, and a
  // leading zero ("0125") would otherwise read as octal
  Integer mantissa(digits.empty() ? std::string("0") : digits, 10);
  if (neg) mantissa = -mantissa;
  long net = exp10 - frac_digits;
  Rational r(mantissa);
  if (net > 0) {
    r *= Rational(pow10(static_cast<unsigned long>(net)));
  } else if (net < 0) {
    r /= Rational(pow10(static_cast<unsigned long>(-net)));
  }
  r.canonicalize();
  return r;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  if (!looks_like_fraction(text) && looks_like_decimal(text)) return parse_decimal(text);
  Rational r;
  if (mpq_set_str(r.get_mpq_t(), text.c_str(), 10) != 0)
    throw std::invalid_argument("malformed rational: " + text);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
  r.canonicalize();
  return r;
}

std::string format_rational(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

}  // namespace knotcert
