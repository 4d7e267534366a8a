#pragma once

// Independent re-implementations used only to cross-check the library.  Each
// oracle deliberately takes a different algorithmic route than the production
// code; agreement of two unrelated computations is what the test suites bank
// on.  Nothing here is optimized - sizes stay small.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "knotcert/covers.hpp"
#include "knotcert/lambda_module.hpp"
#include "knotcert/seifert.hpp"
#include "knotcert/signature.hpp"

namespace oracle {

using knotcert::Integer;
using knotcert::IntMat;
using knotcert::KnotDescriptor;
using knotcert::LambdaModule;
using knotcert::LaurentPoly;
using knotcert::PolyMatrix;
using knotcert::Rational;
using knotcert::SeifertMatrix;

// ---------------------------------------------------------------- polynomials

// Schoolbook product over dense vectors; shares no plumbing with the sparse
// map representation in the library.
inline LaurentPoly schoolbook_mul(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return LaurentPoly::zero();
  const long alo = a.min_exp(), ahi = a.max_exp();
  const long blo = b.min_exp(), bhi = b.max_exp();
  std::vector<Rational> out(static_cast<std::size_t>((ahi - alo) + (bhi - blo)) + 1,
                            Rational(0));
  for (long i = alo; i <= ahi; ++i)
    for (long j = blo; j <= bhi; ++j)
      out[static_cast<std::size_t>((i - alo) + (j - blo))] += a.coeff(i) * b.coeff(j);
  return LaurentPoly::from_coeffs(out, alo + blo);
}

inline int moebius(unsigned n) {
  int m = 1;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      m = -m;
    }
  }
  if (n > 1) m = -m;
  return m;
}

// Moebius-formula cyclotomic polynomial prod_{d | n} (t^d - 1)^{mu(n/d)},
// assembled as one exact quotient - a different route than the divide-out
// recursion in the library.
inline LaurentPoly cyclotomic_oracle(unsigned n) {
  LaurentPoly num = LaurentPoly::constant(Rational(1));
  LaurentPoly den = LaurentPoly::constant(Rational(1));
  for (unsigned d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    const int mu = moebius(n / d);
    if (mu == 0) continue;
    const LaurentPoly tdm1 =
        LaurentPoly::monomial(Rational(1), static_cast<long>(d)) -
        LaurentPoly::constant(Rational(1));
    if (mu == 1)
      num = schoolbook_mul(num, tdm1);
    else
      den = schoolbook_mul(den, tdm1);
  }
  return knotcert::exact_divide(num, den).canonical();
}

// ------------------------------------------------------- modules over Lambda

// Laplace-expansion determinant of a square polynomial matrix.
inline LaurentPoly det_laplace(const PolyMatrix& a) {
  const std::size_t n = a.rows();
  if (n == 0) return LaurentPoly::constant(Rational(1));
  if (n == 1) return a.at(0, 0);
  LaurentPoly det;
  for (std::size_t j = 0; j < n; ++j) {
    if (a.at(0, j).is_zero()) continue;
    PolyMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        minor.at(r - 1, cc++) = a.at(r, c);
      }
    }
    LaurentPoly term = schoolbook_mul(a.at(0, j), det_laplace(minor));
    if (j % 2 == 1) term = -term;
    det += term;
  }
  return det;
}

inline void subsets_of(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> pick(k);
  std::vector<std::size_t> stack;
  // iterative enumeration of all k-subsets of {0..n-1}
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
    if (depth == k) {
      out.push_back(pick);
      return;
    }
    for (std::size_t i = start; i + (k - depth) <= n; ++i) {
      pick[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
}

/// Classify coker(A) by determinantal divisors: d_k = gcd of all k x k
/// minors, invariant factor f_k = d_k / d_{k-1}, free rank = rows - rank.
/// Exponential in the size, which is fine for the <= 4 x 4 inputs the tests
/// feed it; completely independent of the Smith elimination in the library.
inline LambdaModule module_by_minors(const PolyMatrix& a) {
  const std::size_t kmax = std::min(a.rows(), a.cols());
  std::vector<LaurentPoly> divisors;  // d_1 .. d_rank
  for (std::size_t k = 1; k <= kmax; ++k) {
    std::vector<std::vector<std::size_t>> rows, cols;
    subsets_of(a.rows(), k, rows);
    subsets_of(a.cols(), k, cols);
    LaurentPoly g;
    for (const auto& rs : rows) {
      for (const auto& cs : cols) {
        PolyMatrix sub(k, k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub.at(i, j) = a.at(rs[i], cs[j]);
        const LaurentPoly det = det_laplace(sub);
        if (det.is_zero()) continue;
        g = g.is_zero() ? det.canonical() : knotcert::poly_gcd(g, det);
        if (g.is_unit()) break;
      }
      if (!g.is_zero() && g.is_unit()) break;
    }
    if (g.is_zero()) break;  // all k x k minors vanish: rank is k - 1
    divisors.push_back(g);
  }
  const std::size_t rank = divisors.size();
  std::vector<LaurentPoly> factors;
  LaurentPoly prev = LaurentPoly::constant(Rational(1));
  for (std::size_t k = 0; k < rank; ++k) {
    const LaurentPoly f = knotcert::exact_divide(divisors[k], prev).canonical();
    if (!f.is_unit()) factors.push_back(f);
    prev = divisors[k];
  }
  return LambdaModule(static_cast<unsigned>(a.rows() - rank), std::move(factors));
}

// --------------------------------------------------------------------- parity

/// Arf invariant by brute-force democracy: the quadratic refinement
/// q(v) = v V v^T mod 2 takes its majority value on the Arf = 0 side.
inline int arf_democratic(const SeifertMatrix& v) {
  const std::size_t n = v.size();
  const IntMat& m = v.matrix();
  std::uint64_t zeros = 0;
  const std::uint64_t total = std::uint64_t(1) << n;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    Integer q(0);
    for (std::size_t i = 0; i < n; ++i) {
      if (!((mask >> i) & 1)) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!((mask >> j) & 1)) continue;
        q += m.at(i, j);
      }
    }
    if (mpz_even_p(q.get_mpz_t())) ++zeros;
  }
  // A nondegenerate quadratic form on F_2^{2g} takes the value 0 exactly
  // 2^{2g-1} + (-1)^{Arf} 2^{g-1} times.
  return zeros * 2 > total ? 0 : 1;
}

// ----------------------------------------------- signatures, exact & numeric

/// Signature of a rational symmetric matrix by Descartes' rule on its exact
/// characteristic polynomial (all roots are real, so the rule is exact).
/// Faddeev-LeVerrier keeps everything in Q.
inline int symmetric_signature_descartes(const std::vector<std::vector<Rational>>& m) {
  const std::size_t n = m.size();
  // c[k] are the characteristic polynomial coefficients: det(lambda I - M) =
  // lambda^n + c[1] lambda^{n-1} + ... + c[n].
  std::vector<std::vector<Rational>> mk(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) mk[i] = m[i];
  std::vector<Rational> c(n + 1, Rational(0));
  c[0] = Rational(1);
  for (std::size_t k = 1; k <= n; ++k) {
    Rational tr(0);
    for (std::size_t i = 0; i < n; ++i) tr += mk[i][i];
    c[k] = -tr / Rational(static_cast<long>(k));
    if (k == n) break;
    // mk <- M (mk + c[k] I)
    std::vector<std::vector<Rational>> next(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) mk[i][i] += c[k];
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Rational s(0);
        for (std::size_t l = 0; l < n; ++l) s += m[i][l] * mk[l][j];
        next[i][j] = s;
      }
    mk = std::move(next);
  }
  auto variations = [](const std::vector<Rational>& coeffs) {
    int v = 0, last = 0;
    for (const auto& q : coeffs) {
      const int s = knotcert::sign(q);
      if (s == 0) continue;
      if (last != 0 && s != last) ++v;
      last = s;
    }
    return v;
  };
  const int positives = variations(c);
  std::vector<Rational> flipped = c;
  for (std::size_t k = 1; k <= n; k += 2) flipped[k] = -flipped[k];
  const int negatives = variations(flipped);
  return positives - negatives;
}

/// Exact Levine-Tristram signature via the real doubling of the Hermitian
/// form: H = A + i c B with A = (1-x)(V+V^T), B = -(V-V^T), c = sqrt(1-x^2)
/// doubles to [[A, -cB],[cB, A]], and scaling the second block row/column by
/// 1/c makes every entry rational again: [[A, -B],[B, A/(1-x^2)]].  Half the
/// signature of that matrix is the answer.  A completely different pipeline
/// (characteristic polynomial + Descartes) than the congruence
/// diagonalization in the library.
inline int signature_doubling_oracle(const SeifertMatrix& v, const Rational& x) {
  const std::size_t n = v.size();
  const IntMat& V = v.matrix();
  const Rational one_minus_x = Rational(1) - x;
  const Rational c2 = Rational(1) - x * x;  // positive on (-1, 1)
  std::vector<std::vector<Rational>> dbl(2 * n, std::vector<Rational>(2 * n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational a = one_minus_x * Rational(V.at(i, j) + V.at(j, i));
      const Rational b = -Rational(V.at(i, j) - V.at(j, i));
      dbl[i][j] = a;
      dbl[n + i][n + j] = a / c2;
      dbl[i][n + j] = -b;
      dbl[n + i][j] = b;
    }
  const int s = symmetric_signature_descartes(dbl);
  return s / 2;
}

// ------------------------------------------------------------- random inputs

/// Random valid Seifert matrix of the given genus: start from the standard
/// block form, add a random symmetric integer matrix (V - V^T is untouched),
/// then conjugate by a few random elementary unimodular moves.
inline SeifertMatrix random_seifert(std::mt19937_64& rng, unsigned genus) {
  const std::size_t n = 2 * static_cast<std::size_t>(genus);
  IntMat v(n, n);
  for (unsigned g = 0; g < genus; ++g) v.at(2 * g, 2 * g + 1) = 1;
  std::uniform_int_distribution<int> entry(-2, 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const int e = entry(rng);
      v.at(i, j) += e;
      if (j != i) v.at(j, i) += e;
    }
  // congruence by E_{ij}(s): row_i += s row_j and col_i += s col_j
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<int> coef(-1, 1);
  for (int moves = 0; moves < 6; ++moves) {
    const std::size_t i = idx(rng), j = idx(rng);
    const int s = coef(rng);
    if (i == j || s == 0) continue;
    for (std::size_t cidx = 0; cidx < n; ++cidx) v.at(i, cidx) += s * v.at(j, cidx);
    for (std::size_t ridx = 0; ridx < n; ++ridx) v.at(ridx, i) += s * v.at(ridx, j);
  }
  return SeifertMatrix(std::move(v));
}

inline LaurentPoly random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<long> expo(-2, 2);
  std::uniform_int_distribution<int> nterms(0, 3);
  LaurentPoly p;
  const int k = nterms(rng);
  for (int i = 0; i < k; ++i)
    p += LaurentPoly::monomial(Rational(coeff(rng)), expo(rng));
  return p;
}

inline PolyMatrix random_presentation(std::mt19937_64& rng, std::size_t rows,
                                      std::size_t cols) {
  PolyMatrix a(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a.at(i, j) = random_poly(rng);
  return a;
}

// ------------------------------------------------------------ complex covers

/// |prod_{k=1}^{n-1} Delta(zeta_n^k)| by straightforward complex products,
/// with a crude but safe relative error allowance.  Returns an enclosure
/// [lo, hi]; the library's exact resultant value must land inside.
inline std::pair<double, double> cover_order_enclosure(const LaurentPoly& delta, unsigned n) {
  const long double pi = 3.14159265358979323846264338327950288L;
  std::complex<long double> prod(1.0L, 0.0L);
  long double coeff_mass = 0.0L;
  for (const auto& [e, q] : delta.terms()) {
    (void)e;
    coeff_mass += fabsl(q.get_d());
  }
  for (unsigned k = 1; k < n; ++k) {
    const long double theta = 2.0L * pi * k / n;
    const std::complex<long double> z(cosl(theta), sinl(theta));
    std::complex<long double> val(0.0L, 0.0L);
    for (const auto& [e, q] : delta.terms())
      val += static_cast<long double>(q.get_d()) * std::pow(z, static_cast<long double>(e));
    prod *= val;
  }
  const long double mag = std::abs(prod);
  // each factor is accurate to ~coeff_mass * 1e-17 absolute; amplify harshly
  const long double slack =
      (mag + 1.0L) * n * (coeff_mass + 1.0L) * 1e-13L + 1e-9L;
  return {static_cast<double>(mag - slack), static_cast<double>(mag + slack)};
}

}  // namespace oracle
