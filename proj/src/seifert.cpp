#include "knotcert/seifert.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace knotcert {

namespace {

// Exact Lagrange interpolation through (xs[i], ys[i]).
LaurentPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  LaurentPoly acc;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    LaurentPoly term = LaurentPoly::constant(ys[i]);
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      // term *= (t - xs[j]) / (xs[i] - xs[j])
      LaurentPoly lin = LaurentPoly::monomial(Rational(1), 1) - LaurentPoly::constant(xs[j]);
      term *= lin;
      term *= Rational(1) / (xs[i] - xs[j]);
    }
    acc += term;
  }
  return acc;
}

}  // namespace

SeifertMatrix::SeifertMatrix(IntMat pairing) : pairing_(std::move(pairing)) {
  if (pairing_.rows() != pairing_.cols())
    throw std::invalid_argument("seifert matrix must be square");
  if (pairing_.rows() % 2 != 0)
    throw std::invalid_argument("seifert matrix must have even size");
  IntMat skew = pairing_ - pairing_.transpose();
  if (det_bareiss(skew) != 1)
    throw std::invalid_argument("seifert matrix needs det(V - V^T) = 1");
}

SeifertMatrix SeifertMatrix::block_sum(const SeifertMatrix& other) const {
  const std::size_t n = size(), m = other.size();
  IntMat s(n + m, n + m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s.at(i, j) = pairing_.at(i, j);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) s.at(n + i, n + j) = other.pairing_.at(i, j);
  return SeifertMatrix(std::move(s));
}

SeifertMatrix SeifertMatrix::mirrored() const {
  IntMat m = pairing_.transpose();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = -m.at(i, j);
  return SeifertMatrix(std::move(m));
}

LaurentPoly SeifertMatrix::alexander() const {
  const std::size_t n = size();
  if (n == 0) return LaurentPoly::constant(Rational(1));
  // det(V - t V^T) has degree <= n; n+1 integer sample points pin it down.
  std::vector<Rational> xs, ys;
  for (std::size_t p = 0; p <= n; ++p) {
    IntMat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        m.at(i, j) = pairing_.at(i, j) - Integer(static_cast<long>(p)) * pairing_.at(j, i);
    xs.emplace_back(static_cast<long>(p));
    ys.emplace_back(det_bareiss(m));
  }
  LaurentPoly delta = interpolate(xs, ys).canonical();
  // det(V - V^T) = 1 pins the evaluation at 1 to a unit; a failure here means
  // arithmetic corruption, not bad input.
  Rational at_one = delta.evaluate(Rational(1));
  if (at_one != 1 && at_one != -1)
    throw std::logic_error("alexander polynomial fails the unit evaluation check");
  return delta;
}

PolyMatrix SeifertMatrix::alexander_presentation() const {
  const std::size_t n = size();
  PolyMatrix m(n, n);
  const LaurentPoly t = LaurentPoly::monomial(Rational(1), 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      m.at(i, j) = LaurentPoly::constant(Rational(pairing_.at(i, j))) * t -
                   LaurentPoly::constant(Rational(pairing_.at(j, i)));
    }
  return m;
}

KnotDescriptor::KnotDescriptor(std::string name, SeifertMatrix seifert, KnotMeta meta)
    : name_(std::move(name)), data_(std::move(seifert)), meta_(meta) {
  if (name_.empty()) throw std::invalid_argument("knot descriptor needs a name");
}

KnotDescriptor::KnotDescriptor(std::string name, ModuleSurrogate surrogate, KnotMeta meta)
    : name_(std::move(name)), data_(std::move(surrogate)), meta_(meta) {
  if (name_.empty()) throw std::invalid_argument("knot descriptor needs a name");
  // The surrogate must present a torsion module, otherwise it cannot stand
  // for a knot (knot modules have nonzero order).
  LambdaModule m = smith_normal_form(std::get<ModuleSurrogate>(data_).presentation);
  if (m.free_rank != 0)
    throw std::invalid_argument("module surrogate must present a torsion module");
}

const SeifertMatrix& KnotDescriptor::seifert() const {
  if (!has_seifert())
    throw std::invalid_argument("knot '" + name_ + "' carries no seifert data");
  return std::get<SeifertMatrix>(data_);
}

const ModuleSurrogate& KnotDescriptor::surrogate() const {
  if (has_seifert())
    throw std::invalid_argument("knot '" + name_ + "' carries seifert data, not a surrogate");
  return std::get<ModuleSurrogate>(data_);
}

LaurentPoly alexander_polynomial(const KnotDescriptor& k) {
  if (k.has_seifert()) return k.seifert().alexander();
  return module_order(alexander_module(k));
}

LambdaModule alexander_module(const KnotDescriptor& k) {
  return smith_normal_form(alexander_module_presentation(k));
}

PolyMatrix alexander_module_presentation(const KnotDescriptor& k) {
  if (k.has_seifert()) return k.seifert().alexander_presentation();
  return k.surrogate().presentation;
}

KnotDescriptor connected_sum(const KnotDescriptor& a, const KnotDescriptor& b) {
  if (a.has_seifert() != b.has_seifert())
    throw std::invalid_argument(
        "connected sum across descriptor kinds (seifert vs surrogate) is not defined");
  std::string name = a.name() + " # " + b.name();
  KnotMeta meta;
  // Ribbonness is preserved by connected sum; it is not detected, only
  // propagated when both summands are known ribbon.
  if (a.meta().ribbon.has_value() && b.meta().ribbon.has_value() && *a.meta().ribbon &&
      *b.meta().ribbon)
    meta.ribbon = true;
  if (a.has_seifert())
    return KnotDescriptor(std::move(name), a.seifert().block_sum(b.seifert()), meta);
  ModuleSurrogate s{a.surrogate().presentation.direct_sum_with(b.surrogate().presentation),
                    a.surrogate().signature_zero && b.surrogate().signature_zero};
  return KnotDescriptor(std::move(name), std::move(s), meta);
}

KnotDescriptor connected_sum_power(const KnotDescriptor& k, unsigned n) {
  if (n == 0) return builtin_knot("unknot");
  KnotDescriptor acc = k;
  for (unsigned i = 1; i < n; ++i) acc = connected_sum(acc, k);
  if (n > 1) {
    // Collapse the chain of " # " names into one readable label.
    std::string name = k.name() + "^#" + std::to_string(n);
    if (k.has_seifert()) return KnotDescriptor(name, acc.seifert(), acc.meta());
    return KnotDescriptor(name, acc.surrogate(), acc.meta());
  }
  return acc;
}

KnotDescriptor mirror(const KnotDescriptor& k) {
  if (!k.has_seifert())
    throw std::invalid_argument("mirror of a module surrogate is not defined");
  KnotMeta meta = k.meta();  // ribbon/doubly-slice status survives mirroring
  return KnotDescriptor("mirror(" + k.name() + ")", k.seifert().mirrored(), meta);
}

std::optional<std::vector<std::size_t>> is_visibly_hyperbolic(const KnotDescriptor& k) {
  const SeifertMatrix& v = k.seifert();
  const std::size_t n = v.size();
  if (n > 8)
    throw std::invalid_argument("visible hyperbolicity search is limited to size 8");
  if (n == 0) return std::vector<std::size_t>{};
  const std::size_t half = n / 2;
  // Enumerate balanced index subsets; [[0, B],[C, 0]] in some reordering
  // means both diagonal blocks vanish.
  for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) != half) continue;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j) {
        const bool same_side = ((mask >> i) & 1) == ((mask >> j) & 1);
        if (same_side && v.matrix().at(i, j) != 0) ok = false;
      }
    if (ok) {
      std::vector<std::size_t> witness;
      for (std::size_t i = 0; i < n; ++i)
        if ((mask >> i) & 1) witness.push_back(i);
      return witness;
    }
  }
  return std::nullopt;
}

namespace {

IntMat mat2(long a, long b, long c, long d) {
  IntMat m(2, 2);
  m.at(0, 0) = a;
  m.at(0, 1) = b;
  m.at(1, 0) = c;
  m.at(1, 1) = d;
  return m;
}

std::map<std::string, KnotDescriptor> build_table() {
  std::map<std::string, KnotDescriptor> table;

  KnotMeta unknot_meta;
  unknot_meta.ribbon = true;
  unknot_meta.doubly_slice = true;
  table.emplace("unknot", KnotDescriptor("unknot", SeifertMatrix(IntMat(0, 0)), unknot_meta));

  // Right-handed trefoil: signature -2 at t = -1 with this convention.
  table.emplace("trefoil", KnotDescriptor("trefoil", SeifertMatrix(mat2(-1, 1, 0, -1))));
  table.emplace("left_trefoil",
                KnotDescriptor("left_trefoil", SeifertMatrix(mat2(-1, 1, 0, -1)).mirrored()));
  table.emplace("figure_eight",
                KnotDescriptor("figure_eight", SeifertMatrix(mat2(1, 1, 0, -1))));

  KnotMeta ribbon_meta;
  ribbon_meta.ribbon = true;
  ribbon_meta.crossing_number = 9;
  table.emplace("9_46", KnotDescriptor("9_46", SeifertMatrix(mat2(0, 2, 1, 0)), ribbon_meta));

  // Expected Alexander polynomials; a mismatch would mean the table or the
  // determinant pipeline is corrupt.
  const std::map<std::string, LaurentPoly> expected = {
      {"unknot", LaurentPoly::constant(Rational(1))},
      {"trefoil", LaurentPoly::from_coeffs({Rational(1), Rational(-1), Rational(1)})},
      {"left_trefoil", LaurentPoly::from_coeffs({Rational(1), Rational(-1), Rational(1)})},
      {"figure_eight", LaurentPoly::from_coeffs({Rational(1), Rational(-3), Rational(1)})},
      {"9_46", LaurentPoly::from_coeffs({Rational(2), Rational(-5), Rational(2)})},
  };
  for (const auto& [name, poly] : expected) {
    if (!(alexander_polynomial(table.at(name)) == poly))
      throw std::logic_error("built-in table verification failed for " + name);
  }
  return table;
}

const std::map<std::string, KnotDescriptor>& knot_table() {
  static const std::map<std::string, KnotDescriptor> table = build_table();
  return table;
}

const std::map<std::string, std::string>& alias_table() {
  static const std::map<std::string, std::string> aliases = {
      {"right_trefoil", "trefoil"},
      {"3_1", "trefoil"},
      {"fig8", "figure_eight"},
      {"4_1", "figure_eight"},
  };
  return aliases;
}

}  // namespace

const KnotDescriptor& builtin_knot(const std::string& name) {
  const auto& table = knot_table();
  if (auto it = table.find(name); it != table.end()) return it->second;
  const auto& aliases = alias_table();
  if (auto it = aliases.find(name); it != aliases.end()) return table.at(it->second);
  throw std::out_of_range("unknown built-in knot: " + name);
}

std::vector<std::string> builtin_names() {
  std::vector<std::string> names;
  for (const auto& [name, k] : knot_table()) names.push_back(name);
  return names;
}

}  // namespace knotcert
