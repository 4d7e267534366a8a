#include "knotcert/signature.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace knotcert {

namespace {

// Element a + b*sigma of Q[sigma]/(sigma^2 - d) with d = x^2 - 1 < 0.  This
// is where (1-omega)V + conj(1-omega)V^T lives once omega = x + i s is split
// into its rational part and sigma = i s.
struct Ext {
  Rational a, b;
  bool is_zero() const { return a == 0 && b == 0; }
};

struct ExtField {
  Rational d;

  Ext mul(const Ext& u, const Ext& v) const {
    return {u.a * v.a + d * u.b * v.b, u.a * v.b + u.b * v.a};
  }
  static Ext sub(const Ext& u, const Ext& v) { return {u.a - v.a, u.b - v.b}; }
  static Ext add(const Ext& u, const Ext& v) { return {u.a + v.a, u.b + v.b}; }
  static Ext conj(const Ext& u) { return {u.a, -u.b}; }
  // Norm a^2 - d b^2 is positive definite because d < 0.
  Rational norm(const Ext& u) const { return u.a * u.a - d * u.b * u.b; }
  Ext div(const Ext& u, const Ext& v) const {
    Rational n = norm(v);
    if (n == 0) throw std::logic_error("division by zero in quadratic extension");
    Ext w = mul(u, conj(v));
    return {w.a / n, w.b / n};
  }
  Ext scale(const Ext& u, const Rational& s) const { return {u.a * s, u.b * s}; }
};

class HermitianForm {
 public:
  HermitianForm(const IntMat& v, const Rational& x) : n_(v.rows()), field_{x * x - 1} {
    h_.resize(n_ * n_);
    const Rational one_minus_x = Rational(1) - x;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        Rational sym{v.at(i, j) + v.at(j, i)};
        Rational skew{v.at(i, j) - v.at(j, i)};
        at(i, j) = Ext{one_minus_x * sym, -skew};
      }
  }

  // Signature by congruence: split off 1x1 blocks at nonzero diagonal
  // entries, 2x2 hyperbolic blocks (one +, one -) when the active diagonal
  // vanishes.  Throws std::invalid_argument if the form is singular, which
  // for these matrices happens exactly at signature jumps.
  int signature() {
    int pos = 0, neg = 0;
    std::size_t k = 0;
    while (k < n_) {
      std::size_t pi = n_;
      for (std::size_t i = k; i < n_; ++i)
        if (!at(i, i).is_zero()) {
          pi = i;
          break;
        }
      if (pi < n_) {
        swap_basis(k, pi);
        const Ext pivot = at(k, k);
        if (pivot.b != 0) throw std::logic_error("hermitian form has non-real diagonal");
        (pivot.a > 0 ? pos : neg) += 1;
        for (std::size_t i = k + 1; i < n_; ++i) {
          if (at(i, k).is_zero()) continue;
          const Ext factor = field_.scale(at(i, k), Rational(1) / pivot.a);
          for (std::size_t j = k + 1; j < n_; ++j)
            at(i, j) = ExtField::sub(at(i, j), field_.mul(factor, at(k, j)));
        }
        ++k;
        continue;
      }
      // Whole active diagonal is zero: locate an off-diagonal entry.
      std::size_t bi = n_, bj = n_;
      for (std::size_t i = k; i < n_ && bi == n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j)
          if (!at(i, j).is_zero()) {
            bi = i;
            bj = j;
            break;
          }
      if (bi == n_) throw std::invalid_argument("hermitian form is singular at this abscissa");
      swap_basis(k, bi);   // bj > bi >= k, so bj is untouched by this swap
      swap_basis(k + 1, bj);
      // Block [[0, h],[conj h, 0]] contributes a hyperbolic pair.
      const Ext h = at(k, k + 1);
      const Ext hbar = at(k + 1, k);
      ++pos;
      ++neg;
      for (std::size_t r = k + 2; r < n_; ++r) {
        const Ext u = at(r, k);       // pairing with basis vector k
        const Ext w = at(r, k + 1);   // pairing with basis vector k+1
        if (u.is_zero() && w.is_zero()) continue;
        for (std::size_t c = k + 2; c < n_; ++c) {
          Ext corr = ExtField::add(field_.mul(field_.div(w, h), at(k, c)),
                                   field_.mul(field_.div(u, hbar), at(k + 1, c)));
          at(r, c) = ExtField::sub(at(r, c), corr);
        }
      }
      k += 2;
    }
    return pos - neg;
  }

 private:
  Ext& at(std::size_t i, std::size_t j) { return h_[i * n_ + j]; }

  void swap_basis(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < n_; ++j) std::swap(at(a, j), at(b, j));
    for (std::size_t i = 0; i < n_; ++i) std::swap(at(i, a), at(i, b));
  }

  std::size_t n_;
  ExtField field_;
  std::vector<Ext> h_;
};

int signature_congruence(const IntMat& v, const Rational& x) {
  if (v.rows() == 0) return 0;
  HermitianForm form(v, x);
  return form.signature();
}

}  // namespace

int signature_at(const SeifertMatrix& v, const Rational& x) {
  if (!(x > -1 && x < 1))
    throw std::domain_error("signature abscissa must satisfy -1 < x < 1");
  LaurentPoly delta = v.alexander();
  if (delta.span() > 0 && symmetrize(delta).evaluate(x) == 0)
    throw std::invalid_argument("signature undefined at a jump abscissa");
  return signature_congruence(v.matrix(), x);
}

int signature_at(const KnotDescriptor& k, const Rational& x) {
  if (!(x > -1 && x < 1))
    throw std::domain_error("signature abscissa must satisfy -1 < x < 1");
  if (!k.has_seifert()) {
    if (k.surrogate().signature_zero) return 0;
    throw std::invalid_argument("surrogate for '" + k.name() +
                                "' carries no signature information");
  }
  return signature_at(k.seifert(), x);
}

namespace {

// Working record for one signature jump while the profile is assembled.
struct JumpRec {
  bool exact;
  Rational x;                                  // when exact
  std::optional<IsolatingInterval> bracket;    // when not
  CertifiedValue angle = CertifiedValue::exact(Rational(0));
  std::optional<unsigned> cyclotomic_index;

  Rational lo() const { return exact ? x : bracket->low(); }
  Rational hi() const { return exact ? x : bracket->high(); }
  bool refinable() const { return !exact; }
  void refine() {
    if (bracket) bracket->refine();
  }
};

// Coprime residues k with 0 < k < d/2; jump angles of Phi_d are 2k/d.
std::vector<unsigned> half_coprimes(unsigned d) {
  std::vector<unsigned> ks;
  for (unsigned k = 1; 2 * k < d; ++k)
    if (std::gcd(k, d) == 1) ks.push_back(k);
  return ks;
}

Rational angle_fraction(unsigned k, unsigned d) {
  Rational r(2UL * k, static_cast<unsigned long>(d));
  r.canonicalize();
  return r;
}

// Certified angle enclosure for an isolating interval, driven under `width`
// by refining the bracket and the transcendental enclosure together.
CertifiedValue bracket_angle(IsolatingInterval& bracket, const Rational& width) {
  Rational sub_width = width / 4;
  for (int round = 0; round < 4096; ++round) {
    auto top = arccos_enclosure(bracket.low(), sub_width);   // larger angle
    auto bot = arccos_enclosure(bracket.high(), sub_width);  // smaller angle
    if (top.second - bot.first <= width)
      return CertifiedValue::interval(bot.first, top.second);
    bracket.refine();
  }
  throw std::runtime_error("jump angle enclosure failed to converge");
}

SignatureProfile trivial_profile() {
  SignatureProfile p;
  p.arc_values = {0};
  p.rho0 = CertifiedValue::exact(Rational(0));
  p.max_abs = 0;
  return p;
}

}  // namespace

SignatureProfile signature_profile(const KnotDescriptor& k, const ProfileOptions& opts) {
  if (!k.has_seifert()) {
    if (k.surrogate().signature_zero) return trivial_profile();
    throw std::invalid_argument("surrogate for '" + k.name() +
                                "' carries no signature information");
  }
  const SeifertMatrix& v = k.seifert();
  if (opts.cyclotomic_bound < 3)
    throw std::invalid_argument("cyclotomic bound below 3 is useless");
  if (opts.enclosure_width <= 0)
    throw std::invalid_argument("enclosure width must be positive");

  LaurentPoly delta = v.alexander();
  std::vector<JumpRec> jumps;

  LaurentPoly work = delta.canonical();
  if (work.span() > 0) {
    // Peel cyclotomic factors: their jump angles are exactly 2k/d.
    for (unsigned d = 3; d <= opts.cyclotomic_bound; ++d) {
      if (work.span() == 0) break;
      if (static_cast<long>(euler_phi(d)) > work.span()) continue;
      LaurentPoly phi = cyclotomic(d);
      if (!divides(phi, work)) continue;
      do {
        work = exact_divide(work, phi).canonical();
      } while (divides(phi, work));
      LaurentPoly cd = symmetrize(phi);
      auto ks = half_coprimes(d);
      if (cd.span() == 1) {
        // Linear symmetrization: the lone root is rational (d = 3, 4 or 6).
        Rational x0 = -cd.coeff(0) / cd.coeff(1);
        JumpRec rec{true, x0, std::nullopt,
                    CertifiedValue::exact(angle_fraction(ks.at(0), d)), d};
        jumps.push_back(std::move(rec));
      } else {
        auto brackets = sturm_isolate(cd, Rational(-1), Rational(1));
        if (brackets.size() != ks.size())
          throw std::logic_error("cyclotomic symmetrization root count mismatch");
        // Brackets come sorted by ascending x; angles 2k/d descend with x.
        for (std::size_t i = 0; i < brackets.size(); ++i) {
          unsigned kk = ks[ks.size() - 1 - i];
          JumpRec rec{false, Rational(0), brackets[i],
                      CertifiedValue::exact(angle_fraction(kk, d)), d};
          jumps.push_back(std::move(rec));
        }
      }
    }
    // Residual factors: roots isolated numerically-but-certified.
    if (work.span() > 0) {
      LaurentPoly res_sf = square_free_part(symmetrize(work));
      for (const Rational& r : rational_roots(res_sf, Rational(-1), Rational(1))) {
        LaurentPoly lin =
            LaurentPoly::monomial(Rational(r.get_den()), 1) - LaurentPoly::constant(Rational(r.get_num()));
        res_sf = exact_divide(res_sf, lin).canonical();
        auto angle = arccos_enclosure(r, opts.enclosure_width);
        JumpRec rec{true, r, std::nullopt,
                    CertifiedValue::interval(angle.first, angle.second), std::nullopt};
        jumps.push_back(std::move(rec));
      }
      if (res_sf.span() > 0) {
        for (auto& bracket : sturm_isolate(res_sf, Rational(-1), Rational(1))) {
          JumpRec rec{false, Rational(0), bracket, CertifiedValue::exact(Rational(0)),
                      std::nullopt};
          jumps.push_back(std::move(rec));
        }
      }
    }
  }

  // Separate the supports so the x-order (hence the angle order) is total.
  for (int round = 0;; ++round) {
    bool overlap = false;
    for (std::size_t i = 0; i < jumps.size() && !overlap; ++i)
      for (std::size_t j = i + 1; j < jumps.size() && !overlap; ++j) {
        if (jumps[i].lo() <= jumps[j].hi() && jumps[j].lo() <= jumps[i].hi()) {
          overlap = true;
          jumps[i].refine();
          jumps[j].refine();
          if (!jumps[i].refinable() && !jumps[j].refinable())
            throw std::logic_error("two coincident signature jumps");
        }
      }
    if (!overlap) break;
    if (round > 4096) throw std::runtime_error("jump separation failed to converge");
  }
  // Descending x = ascending angle.
  std::sort(jumps.begin(), jumps.end(),
            [](const JumpRec& a, const JumpRec& b) { return a.lo() > b.lo(); });

  // Now that brackets are final, compute the missing (non-cyclotomic,
  // non-rational) angle enclosures.
  for (auto& rec : jumps) {
    if (rec.exact || rec.cyclotomic_index.has_value()) continue;
    rec.angle = bracket_angle(*rec.bracket, opts.enclosure_width);
  }

  // One sample abscissa inside each arc, strictly between the neighboring
  // jump supports (and inside (-1, 1)).
  std::vector<Rational> samples;
  const std::size_t m = jumps.size();
  for (std::size_t i = 0; i <= m; ++i) {
    // Arc i lies between jump i-1 (larger x) and jump i (smaller x); the
    // sample sits strictly between their supports.
    Rational left = (i == m) ? Rational(-1) : jumps[i].hi();
    Rational right = (i == 0) ? Rational(1) : jumps[i - 1].lo();
    samples.push_back((left + right) / 2);
  }

  SignatureProfile profile;
  LaurentPoly full_sym = delta.span() > 0 ? symmetrize(delta.canonical()) : LaurentPoly();
  for (std::size_t i = 0; i <= m; ++i) {
    if (!full_sym.is_zero() && full_sym.evaluate(samples[i]) == 0)
      throw std::logic_error("arc sample landed on a jump");
    int value = signature_congruence(v.matrix(), samples[i]);
    if (value % 2 != 0 || std::abs(value) > static_cast<int>(v.size()))
      throw std::logic_error("signature value out of range");
    profile.arc_values.push_back(value);
  }
  if (profile.arc_values.front() != 0)
    throw std::logic_error("signature near omega = 1 must vanish");

  for (auto& rec : jumps) {
    JumpPoint jp;
    jp.abscissa = rec.exact ? CertifiedValue::exact(rec.x)
                            : CertifiedValue::interval(rec.bracket->low(), rec.bracket->high());
    jp.angle = rec.angle;
    jp.cyclotomic_index = rec.cyclotomic_index;
    profile.jumps.push_back(std::move(jp));
  }

  // rho0 = sum of arc value x arc measure; angles partition (0, 1).
  CertifiedValue total = CertifiedValue::exact(Rational(0));
  for (std::size_t i = 0; i <= m; ++i) {
    CertifiedValue from = (i == 0) ? CertifiedValue::exact(Rational(0)) : profile.jumps[i - 1].angle;
    CertifiedValue to = (i == m) ? CertifiedValue::exact(Rational(1)) : profile.jumps[i].angle;
    if (profile.arc_values[i] == 0) continue;
    total += Rational(profile.arc_values[i]) * (to - from);
  }
  profile.rho0 = total;
  profile.max_abs = 0;
  for (int value : profile.arc_values) profile.max_abs = std::max(profile.max_abs, std::abs(value));
  return profile;
}

CertifiedValue rho0(const KnotDescriptor& k, const ProfileOptions& opts) {
  return signature_profile(k, opts).rho0;
}

int max_abs_signature(const KnotDescriptor& k, const ProfileOptions& opts) {
  return signature_profile(k, opts).max_abs;
}

}  // namespace knotcert
