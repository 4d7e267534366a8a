#include "knotcert/laurent.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "knotcert/intmat.hpp"

namespace knotcert {

namespace {

Rational rat_pow(const Rational& base, long e) {
  if (e == 0) return Rational(1);
  if (base == 0) {
    if (e < 0) throw std::domain_error("0 raised to negative power");
    return Rational(0);
  }
  Rational b = e < 0 ? Rational(1) / base : base;
  long n = e < 0 ? -e : e;
  Rational acc(1);
  while (n > 0) {
    if (n & 1) acc *= b;
    b *= b;
    n >>= 1;
  }
  return acc;
}

// Dense ascending coefficient vector of p shifted to lowest exponent 0.
std::pair<std::vector<Rational>, long> to_dense(const LaurentPoly& p) {
  std::vector<Rational> c;
  if (p.is_zero()) return {c, 0};
  long lo = p.min_exp();
  c.assign(static_cast<std::size_t>(p.span()) + 1, Rational(0));
  for (const auto& [e, v] : p.terms()) c[static_cast<std::size_t>(e - lo)] = v;
  return {c, lo};
}

}  // namespace

void LaurentPoly::set(long exp, const Rational& c) {
  if (c == 0)
    coeffs_.erase(exp);
  else
    coeffs_[exp] = c;
}

LaurentPoly LaurentPoly::monomial(const Rational& c, long exp) {
  LaurentPoly p;
  p.set(exp, c);
  return p;
}

LaurentPoly LaurentPoly::from_coeffs(const std::vector<Rational>& coeffs, long shift) {
  LaurentPoly p;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    p.set(shift + static_cast<long>(i), coeffs[i]);
  return p;
}

long LaurentPoly::min_exp() const {
  if (is_zero()) throw std::logic_error("min_exp of zero polynomial");
  return coeffs_.begin()->first;
}

long LaurentPoly::max_exp() const {
  if (is_zero()) throw std::logic_error("max_exp of zero polynomial");
  return coeffs_.rbegin()->first;
}

long LaurentPoly::span() const { return max_exp() - min_exp(); }

Rational LaurentPoly::coeff(long exp) const {
  auto it = coeffs_.find(exp);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(e, -c);
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.coeffs_) set(e, coeff(e) + c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.coeffs_) set(e, coeff(e) - c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  LaurentPoly out;
  for (const auto& [e1, c1] : coeffs_)
    for (const auto& [e2, c2] : other.coeffs_) out.set(e1 + e2, out.coeff(e1 + e2) + c1 * c2);
  *this = std::move(out);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [e, c] : coeffs_) c *= scalar;
  return *this;
}

LaurentPoly LaurentPoly::reversed() const {
  LaurentPoly r;
  for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(-e, c);
  return r;
}

LaurentPoly LaurentPoly::shifted(long k) const {
  LaurentPoly r;
  for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(e + k, c);
  return r;
}

LaurentPoly LaurentPoly::canonical() const {
  if (is_zero()) return LaurentPoly();
  long lo = min_exp();
  // Clear denominators, then the numerator content; fix the leading sign.
  Integer den_lcm(1), num_gcd(0);
  for (const auto& [e, c] : coeffs_) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  }
  LaurentPoly r;
  for (const auto& [e, c] : coeffs_) {
    Rational scaled = c * Rational(den_lcm);
    scaled.canonicalize();
    r.coeffs_.emplace(e - lo, scaled);
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_num().get_mpz_t());
  }
  if (r.coeffs_.rbegin()->second < 0) num_gcd = -num_gcd;
  for (auto& [e, c] : r.coeffs_) {
    c /= Rational(num_gcd);
    c.canonicalize();
  }
  return r;
}

bool LaurentPoly::is_symmetric() const {
  if (is_zero()) return true;
  LaurentPoly c = canonical();
  return c == c.reversed().canonical();
}

Rational LaurentPoly::evaluate(const Rational& t0) const {
  if (t0 == 0 && !is_zero() && min_exp() < 0)
    throw std::domain_error("evaluation at 0 with negative exponents");
  Rational acc(0);
  for (const auto& [e, c] : coeffs_) acc += c * rat_pow(t0, e);
  return acc;
}

std::string LaurentPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    const long e = it->first;
    Rational c = it->second;
    if (!first) {
      out << (c < 0 ? "-" : "+");
      if (c < 0) c = -c;
    } else if (c < 0) {
      out << "-";
      c = -c;
    }
    first = false;
    const bool unit_coeff = (c == 1);
    if (e == 0 || !unit_coeff) {
      out << c.get_num().get_str();
      if (c.get_den() != 1) out << "/" << c.get_den().get_str();
      if (e != 0) out << "*";
    }
    if (e != 0) {
      out << var;
      if (e != 1) out << "^" << e;
    }
  }
  return out.str();
}

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
LaurentPoly operator*(const Rational& s, LaurentPoly a) { return a *= s; }

std::pair<LaurentPoly, LaurentPoly> divmod(const LaurentPoly& p, const LaurentPoly& q) {
  if (q.is_zero()) throw std::invalid_argument("division by zero polynomial");
  if (p.is_zero()) return {LaurentPoly(), LaurentPoly()};
  if (p.span() < q.span()) return {LaurentPoly(), p};
  auto [pc, plo] = to_dense(p);
  auto [qc, qlo] = to_dense(q);
  const long dp = static_cast<long>(pc.size()) - 1;
  const long dq = static_cast<long>(qc.size()) - 1;
  std::vector<Rational> quot(static_cast<std::size_t>(dp - dq) + 1, Rational(0));
  for (long i = dp - dq; i >= 0; --i) {
    Rational f = pc[static_cast<std::size_t>(i + dq)] / qc[static_cast<std::size_t>(dq)];
    if (f == 0) continue;
    quot[static_cast<std::size_t>(i)] = f;
    for (long j = 0; j <= dq; ++j) {
      auto& slot = pc[static_cast<std::size_t>(i + j)];
      slot -= f * qc[static_cast<std::size_t>(j)];
    }
  }
  pc.resize(static_cast<std::size_t>(dq));  // remainder coefficients
  return {LaurentPoly::from_coeffs(quot, plo - qlo), LaurentPoly::from_coeffs(pc, plo)};
}

LaurentPoly exact_divide(const LaurentPoly& p, const LaurentPoly& q) {
  auto [quot, rem] = divmod(p, q);
  if (!rem.is_zero()) throw std::invalid_argument("inexact polynomial division");
  return quot;
}

bool divides(const LaurentPoly& q, const LaurentPoly& p) {
  if (q.is_zero()) return p.is_zero();
  if (p.is_zero()) return true;
  return divmod(p, q).second.is_zero();
}

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() && b.is_zero())
    throw std::invalid_argument("gcd of two zero polynomials");
  LaurentPoly x = a.is_zero() ? LaurentPoly() : a.canonical();
  LaurentPoly y = b.is_zero() ? LaurentPoly() : b.canonical();
  while (!y.is_zero()) {
    LaurentPoly r = divmod(x, y).second;
    x = y;
    y = r.is_zero() ? LaurentPoly() : r.canonical();
  }
  return x.canonical();
}

LaurentPoly poly_lcm(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return LaurentPoly();
  return exact_divide(a * b, poly_gcd(a, b)).canonical();
}

bool associates(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a.canonical() == b.canonical();
}

namespace {

std::map<unsigned, LaurentPoly>& cyclotomic_cache() {
  static std::map<unsigned, LaurentPoly> cache;
  return cache;
}
std::mutex cyclotomic_mutex;

LaurentPoly cyclotomic_locked(unsigned n) {
  auto& cache = cyclotomic_cache();
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  LaurentPoly result;
  if (n == 1) {
    result = LaurentPoly::from_coeffs({Rational(-1), Rational(1)});
  } else {
    LaurentPoly tn1 =
        LaurentPoly::monomial(Rational(1), static_cast<long>(n)) - LaurentPoly::constant(Rational(1));
    LaurentPoly prod = LaurentPoly::constant(Rational(1));
    for (unsigned d = 1; d < n; ++d)
      if (n % d == 0) prod *= cyclotomic_locked(d);
    result = exact_divide(tn1, prod).canonical();
  }
  cache.emplace(n, result);
  return result;
}

}  // namespace

LaurentPoly cyclotomic(unsigned n) {
  if (n == 0) throw std::invalid_argument("cyclotomic index must be positive");
  std::lock_guard<std::mutex> lock(cyclotomic_mutex);
  return cyclotomic_locked(n);
}

unsigned long euler_phi(unsigned long n) {
  unsigned long result = n;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

Rational resultant(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.is_zero() || q.is_zero()) return Rational(0);
  LaurentPoly P = p.canonical(), Q = q.canonical();
  const long m = P.span(), n = Q.span();
  if (m == 0 && n == 0) return Rational(1);
  if (m == 0) return rat_pow(P.coeff(0), n);
  if (n == 0) return rat_pow(Q.coeff(0), m);
  IntMat syl(static_cast<std::size_t>(m + n), static_cast<std::size_t>(m + n));
  for (long i = 0; i < n; ++i)
    for (long j = 0; j <= m; ++j)
      syl.at(static_cast<std::size_t>(i), static_cast<std::size_t>(i + j)) =
          P.coeff(m - j).get_num();
  for (long i = 0; i < m; ++i)
    for (long j = 0; j <= n; ++j)
      syl.at(static_cast<std::size_t>(n + i), static_cast<std::size_t>(i + j)) =
          Q.coeff(n - j).get_num();
  return Rational(det_bareiss(syl));
}

LaurentPoly derivative(const LaurentPoly& p) {
  LaurentPoly r;
  for (const auto& [e, c] : p.terms())
    if (e != 0) r += LaurentPoly::monomial(c * Rational(e), e - 1);
  return r;
}

LaurentPoly square_free_part(const LaurentPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("square-free part of zero");
  LaurentPoly c = p.canonical();
  if (c.span() == 0) return LaurentPoly::constant(Rational(1));
  LaurentPoly g = poly_gcd(c, derivative(c));
  return exact_divide(c, g).canonical();
}

LaurentPoly symmetrize(const LaurentPoly& p) {
  LaurentPoly P = p.canonical();
  if (P.is_zero()) throw std::invalid_argument("symmetrize of zero polynomial");
  const long s = P.span();
  if (s % 2 != 0) throw std::invalid_argument("symmetrize: odd exponent span");
  const long d = s / 2;
  for (long j = 0; j <= s; ++j)
    if (P.coeff(j) != P.coeff(s - j))
      throw std::invalid_argument("symmetrize: polynomial is not palindromic");
  // t^-d P(t) = c_d + sum_k c_{d+k} (t^k + t^-k) and t^k + t^-k = 2 T_k(x)
  // at t = e^{i theta}, x = cos(theta).
  LaurentPoly S = LaurentPoly::constant(P.coeff(d));
  LaurentPoly t_prev = LaurentPoly::constant(Rational(1));       // T_0
  LaurentPoly t_cur = LaurentPoly::monomial(Rational(1), 1);     // T_1
  const LaurentPoly two_x = LaurentPoly::monomial(Rational(2), 1);
  for (long k = 1; k <= d; ++k) {
    S += (Rational(2) * P.coeff(d + k)) * LaurentPoly(t_cur);
    LaurentPoly t_next = two_x * t_cur - t_prev;
    t_prev = t_cur;
    t_cur = t_next;
  }
  return S;
}

}  // namespace knotcert
