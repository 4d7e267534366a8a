#include "knotcert/roots.hpp"

#include <mpfr.h>

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace knotcert {

namespace {

// Scale by a positive rational so coefficients become integers with content 1.
// Sturm chains only tolerate positive rescaling and no exponent shifts, so
// canonical() (which does both) is not usable here.
LaurentPoly primitive_scale(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  Integer den_lcm(1), num_gcd(0);
  for (const auto& [e, c] : p.terms())
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  for (const auto& [e, c] : p.terms()) {
    Rational scaled = c * Rational(den_lcm);
    scaled.canonicalize();
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_num().get_mpz_t());
  }
  LaurentPoly out = p;
  Rational factor{den_lcm};
  factor /= Rational(num_gcd);
  factor.canonicalize();
  out *= factor;
  return out;
}

// Ordinary (non-Laurent) polynomial division: both arguments must have
// min_exp >= 0 and the remainder keeps that property.  The chain relation
// f_{k-1} = q f_k - f_{k+1} then holds with q a genuine polynomial, which is
// what Sturm's theorem needs at every point of the domain, 0 included.
std::pair<LaurentPoly, LaurentPoly> divmod_poly(const LaurentPoly& p, const LaurentPoly& q) {
  if (q.is_zero()) throw std::invalid_argument("polynomial division by zero");
  if (!p.is_zero() && p.min_exp() < 0) throw std::invalid_argument("divmod_poly: negative exponent");
  if (q.min_exp() < 0) throw std::invalid_argument("divmod_poly: negative exponent");
  if (p.is_zero()) return {LaurentPoly(), LaurentPoly()};
  const long dp = p.max_exp(), dq = q.max_exp();
  if (dp < dq) return {LaurentPoly(), p};
  std::vector<Rational> pc(static_cast<std::size_t>(dp) + 1, Rational(0));
  for (const auto& [e, c] : p.terms()) pc[static_cast<std::size_t>(e)] = c;
  std::vector<Rational> qc(static_cast<std::size_t>(dq) + 1, Rational(0));
  for (const auto& [e, c] : q.terms()) qc[static_cast<std::size_t>(e)] = c;
  std::vector<Rational> quot(static_cast<std::size_t>(dp - dq) + 1, Rational(0));
  for (long i = dp - dq; i >= 0; --i) {
    Rational f = pc[static_cast<std::size_t>(i + dq)] / qc[static_cast<std::size_t>(dq)];
    if (f == 0) continue;
    quot[static_cast<std::size_t>(i)] = f;
    for (long j = 0; j <= dq; ++j) pc[static_cast<std::size_t>(i + j)] -= f * qc[static_cast<std::size_t>(j)];
  }
  pc.resize(static_cast<std::size_t>(dq));
  return {LaurentPoly::from_coeffs(quot), LaurentPoly::from_coeffs(pc)};
}

int sign_at(const LaurentPoly& p, const Rational& x) {
  if (p.is_zero()) return 0;
  return sgn(p.evaluate(x));
}

int variations(const std::vector<LaurentPoly>& chain, const Rational& x) {
  int count = 0, prev = 0;
  for (const auto& f : chain) {
    int s = sign_at(f, x);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

// A split point inside (lo, hi) that is not a root of sf.  Starts at the
// midpoint and walks through a fixed sequence of offsets; sf has finitely
// many roots so this terminates.
Rational non_root_split(const LaurentPoly& sf, const Rational& lo, const Rational& hi) {
  static const int nums[] = {1, 1, 2, 3, 2, 5, 3};
  static const int dens[] = {2, 3, 5, 7, 7, 11, 11};
  for (std::size_t k = 0; k < sizeof(nums) / sizeof(nums[0]); ++k) {
    Rational m = lo + (hi - lo) * Rational(nums[k], dens[k]);
    if (sign_at(sf, m) != 0) return m;
  }
  // Degenerate amount of bad luck; scan dyadic points.
  Rational step = (hi - lo) / 64;
  for (int k = 1; k < 64; ++k) {
    Rational m = lo + step * k;
    if (sign_at(sf, m) != 0) return m;
  }
  throw std::logic_error("could not find a non-root split point");
}

std::vector<unsigned long> small_divisors(const Integer& n_in) {
  Integer n = abs(n_in);
  std::vector<unsigned long> divs;
  if (!n.fits_ulong_p()) return divs;
  unsigned long m = n.get_ui();
  for (unsigned long d = 1; d * d <= m; ++d) {
    if (m % d == 0) {
      divs.push_back(d);
      if (d != m / d) divs.push_back(m / d);
    }
  }
  return divs;
}

Rational dyadic_to_rational(mpfr_srcptr v) {
  if (mpfr_zero_p(v)) return Rational(0);
  Integer z;
  mpfr_exp_t e = mpfr_get_z_2exp(z.get_mpz_t(), v);
  Rational r(z);
  if (e > 0) {
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, static_cast<unsigned long>(e));
    r *= Rational(scale);
  } else if (e < 0) {
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, static_cast<unsigned long>(-e));
    r /= Rational(scale);
  }
  r.canonicalize();
  return r;
}

}  // namespace

IsolatingInterval::IsolatingInterval(LaurentPoly square_free, Rational low, Rational high)
    : poly_(std::move(square_free)), low_(std::move(low)), high_(std::move(high)) {
  if (low_ >= high_) throw std::invalid_argument("isolating interval with low >= high");
  sign_low_ = sign_at(poly_, low_);
  int sign_high = sign_at(poly_, high_);
  if (sign_low_ == 0 || sign_high == 0 || sign_low_ == sign_high)
    throw std::invalid_argument("isolating interval endpoints must show a sign change");
}

void IsolatingInterval::refine() {
  Rational m = mid();
  if (sign_at(poly_, m) == 0) {
    // The single bracketed root sits exactly at the midpoint; any other
    // interior point splits cleanly.
    m = (low_ + m) / 2;
  }
  int s = sign_at(poly_, m);
  if (s == sign_low_)
    low_ = m;
  else
    high_ = m;
}

void IsolatingInterval::refine_below(const Rational& width) {
  if (width <= 0) throw std::invalid_argument("refine_below needs a positive width");
  while (this->width() >= width) refine();
}

std::vector<LaurentPoly> sturm_chain(const LaurentPoly& square_free) {
  std::vector<LaurentPoly> chain;
  LaurentPoly f0 = primitive_scale(square_free);
  if (f0.is_zero()) throw std::invalid_argument("sturm chain of zero polynomial");
  if (f0.min_exp() < 0) throw std::invalid_argument("sturm chain needs an ordinary polynomial");
  chain.push_back(f0);
  LaurentPoly f1 = primitive_scale(derivative(f0));
  while (!f1.is_zero()) {
    chain.push_back(f1);
    LaurentPoly r = divmod_poly(chain[chain.size() - 2], f1).second;
    f1 = r.is_zero() ? LaurentPoly() : primitive_scale(-r);
  }
  return chain;
}

int sturm_count(const std::vector<LaurentPoly>& chain, const Rational& a, const Rational& b) {
  return variations(chain, a) - variations(chain, b);
}

std::vector<IsolatingInterval> sturm_isolate(const LaurentPoly& p, const Rational& a,
                                             const Rational& b) {
  if (p.is_zero()) throw std::invalid_argument("root isolation of zero polynomial");
  if (a >= b) throw std::invalid_argument("root isolation on empty interval");
  LaurentPoly sf = square_free_part(p);
  if (sf.span() == 0) return {};
  if (sign_at(sf, a) == 0 || sign_at(sf, b) == 0)
    throw std::invalid_argument("root isolation: endpoint is a root");
  auto chain = sturm_chain(sf);
  std::vector<IsolatingInterval> out;
  std::deque<std::pair<Rational, Rational>> work;
  work.emplace_back(a, b);
  while (!work.empty()) {
    auto [lo, hi] = work.front();
    work.pop_front();
    int count = sturm_count(chain, lo, hi);
    if (count == 0) continue;
    if (count == 1) {
      out.emplace_back(sf, lo, hi);
      continue;
    }
    Rational m = non_root_split(sf, lo, hi);
    work.emplace_back(lo, m);
    work.emplace_back(m, hi);
  }
  std::sort(out.begin(), out.end(),
            [](const IsolatingInterval& x, const IsolatingInterval& y) { return x.low() < y.low(); });
  return out;
}

std::vector<Rational> rational_roots(const LaurentPoly& p, const Rational& a, const Rational& b) {
  if (p.is_zero()) throw std::invalid_argument("rational roots of zero polynomial");
  LaurentPoly sf = square_free_part(p);
  std::vector<Rational> roots;
  if (sf.span() == 0) return roots;
  const Integer a0 = sf.coeff(0).get_num();
  const Integer ad = sf.coeff(sf.span()).get_num();
  auto ps = small_divisors(a0);
  auto qs = small_divisors(ad);
  if (ps.empty() || qs.empty()) return roots;  // coefficients too large, give up
  for (unsigned long u : ps)
    for (unsigned long v : qs) {
      Rational cand(u, v);
      cand.canonicalize();
      for (int s = 0; s < 2; ++s) {
        Rational r = s ? -cand : cand;
        if (r > a && r < b && sf.evaluate(r) == 0) roots.push_back(r);
      }
    }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

std::pair<Rational, Rational> arccos_enclosure(const Rational& x, const Rational& width) {
  if (x < -1 || x > 1) throw std::invalid_argument("arccos argument outside [-1, 1]");
  if (width <= 0) throw std::invalid_argument("arccos enclosure needs positive width");
  // Niven rationals: the only rational x in [-1, 1] where arccos(x)/pi is
  // also rational.
  if (x == 1) return {Rational(0), Rational(0)};
  if (x == Rational(1, 2)) return {Rational(1, 3), Rational(1, 3)};
  if (x == 0) return {Rational(1, 2), Rational(1, 2)};
  if (x == Rational(-1, 2)) return {Rational(2, 3), Rational(2, 3)};
  if (x == -1) return {Rational(1), Rational(1)};

  for (mpfr_prec_t prec = 64; prec <= (mpfr_prec_t(1) << 20); prec *= 2) {
    mpfr_t xlo, xhi, alo, ahi, pi_lo, pi_hi, rlo, rhi;
    mpfr_inits2(prec, xlo, xhi, alo, ahi, pi_lo, pi_hi, rlo, rhi, (mpfr_ptr) nullptr);
    mpfr_set_q(xlo, x.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(xhi, x.get_mpq_t(), MPFR_RNDU);
    // Directed rounding can push the enclosure of x past the domain edge.
    if (mpfr_cmp_si(xhi, 1) > 0) mpfr_set_si(xhi, 1, MPFR_RNDN);
    if (mpfr_cmp_si(xlo, -1) < 0) mpfr_set_si(xlo, -1, MPFR_RNDN);
    // arccos is decreasing, so the lower angle comes from the upper abscissa.
    mpfr_acos(alo, xhi, MPFR_RNDD);
    mpfr_acos(ahi, xlo, MPFR_RNDU);
    mpfr_const_pi(pi_lo, MPFR_RNDD);
    mpfr_const_pi(pi_hi, MPFR_RNDU);
    mpfr_div(rlo, alo, pi_hi, MPFR_RNDD);
    mpfr_div(rhi, ahi, pi_lo, MPFR_RNDU);
    Rational lo = dyadic_to_rational(rlo);
    Rational hi = dyadic_to_rational(rhi);
    mpfr_clears(xlo, xhi, alo, ahi, pi_lo, pi_hi, rlo, rhi, (mpfr_ptr) nullptr);
    if (lo < 0) lo = 0;
    if (hi > 1) hi = 1;
    if (hi - lo <= width) return {lo, hi};
  }
  throw std::runtime_error("arccos enclosure: requested width not reached");
}

}  // namespace knotcert
