#include "knotcert/lambda_module.hpp"

#include <algorithm>
#include <stdexcept>

namespace knotcert {

PolyMatrix PolyMatrix::diagonal(const std::vector<LaurentPoly>& entries) {
  PolyMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m.at(i, i) = entries[i];
  return m;
}

PolyMatrix PolyMatrix::direct_sum_with(const PolyMatrix& other) const {
  PolyMatrix m(rows_ + other.rows_, cols_ + other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
  for (std::size_t i = 0; i < other.rows_; ++i)
    for (std::size_t j = 0; j < other.cols_; ++j)
      m.at(rows_ + i, cols_ + j) = other.at(i, j);
  return m;
}

LambdaModule::LambdaModule(unsigned rank, std::vector<LaurentPoly> factors)
    : free_rank(rank), invariant_factors(std::move(factors)) {
  for (std::size_t i = 0; i < invariant_factors.size(); ++i) {
    const auto& f = invariant_factors[i];
    if (f.is_zero() || f.is_unit())
      throw std::invalid_argument("invariant factor must be a non-unit");
    if (!(f == f.canonical()))
      throw std::invalid_argument("invariant factor not in canonical form");
    if (i > 0 && !divides(invariant_factors[i - 1], f))
      throw std::invalid_argument("invariant factors must form a divisibility chain");
  }
}

namespace {

// Span of the canonical associate; the Euclidean degree driving pivot choice.
long euclidean_degree(const LaurentPoly& p) { return p.span(); }

struct PivotSearch {
  bool found = false;
  std::size_t i = 0, j = 0;
};

PivotSearch find_pivot(const PolyMatrix& m, std::size_t k) {
  PivotSearch best;
  long best_deg = 0;
  for (std::size_t i = k; i < m.rows(); ++i)
    for (std::size_t j = k; j < m.cols(); ++j) {
      if (m.at(i, j).is_zero()) continue;
      long d = euclidean_degree(m.at(i, j));
      if (!best.found || d < best_deg) {
        best = {true, i, j};
        best_deg = d;
      }
    }
  return best;
}

void swap_rows(PolyMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(PolyMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

}  // namespace

LambdaModule smith_normal_form(const PolyMatrix& presentation) {
  PolyMatrix m = presentation;
  const std::size_t R = m.rows(), C = m.cols();
  std::vector<LaurentPoly> diag;
  for (std::size_t k = 0; k < std::min(R, C); ++k) {
    auto pivot = find_pivot(m, k);
    if (!pivot.found) break;
    swap_rows(m, k, pivot.i);
    swap_cols(m, k, pivot.j);
    for (;;) {
      // Clear the pivot column.  A nonzero remainder has strictly smaller
      // span than the pivot, so swapping it up makes progress.
      bool dirty = false;
      for (std::size_t i = k + 1; i < R; ++i) {
        if (m.at(i, k).is_zero()) continue;
        auto [q, r] = divmod(m.at(i, k), m.at(k, k));
        for (std::size_t j = k; j < C; ++j) m.at(i, j) -= q * m.at(k, j);
        if (!m.at(i, k).is_zero()) {
          swap_rows(m, k, i);
          dirty = true;
          break;
        }
      }
      if (dirty) continue;
      // Clear the pivot row.
      for (std::size_t j = k + 1; j < C; ++j) {
        if (m.at(k, j).is_zero()) continue;
        auto [q, r] = divmod(m.at(k, j), m.at(k, k));
        for (std::size_t i = k; i < R; ++i) m.at(i, j) -= q * m.at(i, k);
        if (!m.at(k, j).is_zero()) {
          swap_cols(m, k, j);
          dirty = true;
          break;
        }
      }
      if (dirty) continue;
      // Pivot is alone in its row and column; force it to divide the rest of
      // the submatrix so the diagonal comes out as a divisibility chain.
      bool fixed = false;
      for (std::size_t i = k + 1; i < R && !fixed; ++i)
        for (std::size_t j = k + 1; j < C && !fixed; ++j) {
          if (divides(m.at(k, k), m.at(i, j))) continue;
          for (std::size_t c = k; c < C; ++c) m.at(k, c) += m.at(i, c);
          fixed = true;
        }
      if (!fixed) break;
    }
    diag.push_back(m.at(k, k).canonical());
  }
  std::vector<LaurentPoly> factors;
  for (const auto& d : diag)
    if (!d.is_unit()) factors.push_back(d);
  return LambdaModule(static_cast<unsigned>(R - diag.size()), std::move(factors));
}

unsigned min_generators(const LambdaModule& m) {
  return m.free_rank + static_cast<unsigned>(m.invariant_factors.size());
}

unsigned primary_multiplicity(const LambdaModule& m, const LaurentPoly& p) {
  if (p.is_zero() || p.is_unit())
    throw std::invalid_argument("primary multiplicity needs a non-unit, nonzero p");
  unsigned count = 0;
  for (const auto& f : m.invariant_factors)
    if (divides(p, f)) ++count;
  return count;
}

LaurentPoly module_order(const LambdaModule& m) {
  if (m.free_rank > 0)
    throw std::invalid_argument("module order undefined: free rank is positive");
  LaurentPoly order = LaurentPoly::constant(Rational(1));
  for (const auto& f : m.invariant_factors) order *= f;
  return order.canonical();
}

LambdaModule direct_sum(const LambdaModule& a, const LambdaModule& b) {
  std::vector<LaurentPoly> f = a.invariant_factors;
  f.insert(f.end(), b.invariant_factors.begin(), b.invariant_factors.end());
  // Interleave into a chain: repeatedly replace non-comparable pairs by
  // (gcd, lcm); each step lowers the degree at the smaller slot, so this
  // terminates with f_i | f_j for all i < j.
  bool changed = true;
  while (changed) {
    changed = false;
    std::sort(f.begin(), f.end(), [](const LaurentPoly& x, const LaurentPoly& y) {
      return x.span() < y.span();
    });
    for (std::size_t i = 0; i < f.size(); ++i)
      for (std::size_t j = i + 1; j < f.size(); ++j) {
        if (divides(f[i], f[j])) continue;
        LaurentPoly g = poly_gcd(f[i], f[j]);
        LaurentPoly l = poly_lcm(f[i], f[j]);
        f[i] = g;
        f[j] = l;
        changed = true;
      }
  }
  std::vector<LaurentPoly> factors;
  for (const auto& d : f)
    if (!d.is_unit()) factors.push_back(d);
  return LambdaModule(a.free_rank + b.free_rank, std::move(factors));
}

}  // namespace knotcert
