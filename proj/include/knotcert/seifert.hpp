#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "knotcert/intmat.hpp"
#include "knotcert/lambda_module.hpp"

namespace knotcert {

/// Integer Seifert pairing of a genus-g surface: a 2g x 2g matrix V with
/// det(V - V^T) = 1.  Everything downstream (Alexander polynomial, module,
/// equivariant signatures, parity and cover invariants) is computed from V.
class SeifertMatrix {
 public:
  // Validates shape and the unimodularity of V - V^T; throws
  // std::invalid_argument with a reason otherwise.
  explicit SeifertMatrix(IntMat pairing);

  std::size_t size() const { return pairing_.rows(); }
  std::size_t genus() const { return size() / 2; }
  const IntMat& matrix() const { return pairing_; }

  // Boundary connected sum of surfaces: block sum of pairings.
  SeifertMatrix block_sum(const SeifertMatrix& other) const;
  // Mirror image with reversed orientation: V -> -V^T.
  SeifertMatrix mirrored() const;

  // det(V - t V^T), canonical.  Computed by interpolation through integer
  // points with fraction-free determinants, so exact throughout.
  LaurentPoly alexander() const;

  // Presentation matrix t V - V^T of the rational Alexander module.
  PolyMatrix alexander_presentation() const;

  friend bool operator==(const SeifertMatrix& a, const SeifertMatrix& b) {
    return a.pairing_ == b.pairing_;
  }

 private:
  IntMat pairing_;
};

/// A torsion Lambda-module standing in for a knot whose Seifert form is not
/// supplied: the module presentation plus an optional promise that all
/// Levine-Tristram signatures vanish.  Used for knots specified only through
/// their algebra.
struct ModuleSurrogate {
  PolyMatrix presentation;
  bool signature_zero = false;

  friend bool operator==(const ModuleSurrogate& a, const ModuleSurrogate& b) {
    return a.presentation == b.presentation && a.signature_zero == b.signature_zero;
  }
};

struct KnotMeta {
  std::optional<bool> ribbon;
  std::optional<bool> doubly_slice;
  std::optional<unsigned> crossing_number;

  friend bool operator==(const KnotMeta&, const KnotMeta&) = default;
};

/// A named knot given either by a Seifert matrix or by a module surrogate,
/// with optional metadata flags that certain certificates may consume.
class KnotDescriptor {
 public:
  KnotDescriptor(std::string name, SeifertMatrix seifert, KnotMeta meta = {});
  KnotDescriptor(std::string name, ModuleSurrogate surrogate, KnotMeta meta = {});

  const std::string& name() const { return name_; }
  const KnotMeta& meta() const { return meta_; }
  KnotMeta& meta() { return meta_; }

  bool has_seifert() const { return std::holds_alternative<SeifertMatrix>(data_); }
  const SeifertMatrix& seifert() const;
  const ModuleSurrogate& surrogate() const;

  friend bool operator==(const KnotDescriptor& a, const KnotDescriptor& b) {
    return a.name_ == b.name_ && a.data_ == b.data_ && a.meta_ == b.meta_;
  }

 private:
  std::string name_;
  std::variant<SeifertMatrix, ModuleSurrogate> data_;
  KnotMeta meta_;
};

// Alexander polynomial, canonical.  For surrogates this is the order of the
// presented module (which must be torsion).
LaurentPoly alexander_polynomial(const KnotDescriptor& k);

// Rational Alexander module of the knot.
LambdaModule alexander_module(const KnotDescriptor& k);

// Presentation matrix of the Alexander module (t V - V^T, or the stored
// surrogate presentation).
PolyMatrix alexander_module_presentation(const KnotDescriptor& k);

// Connected sum.  Both operands must be of the same kind: Seifert data block-
// sums, surrogate presentations juxtapose.  Mixing kinds is rejected since
// the Seifert-level data of the result would be unknowable.
KnotDescriptor connected_sum(const KnotDescriptor& a, const KnotDescriptor& b);

// n-fold connected sum of k with itself; n = 0 gives the unknot.
KnotDescriptor connected_sum_power(const KnotDescriptor& k, unsigned n);

// Mirror image (Seifert kind only).
KnotDescriptor mirror(const KnotDescriptor& k);

/// If some reordering of the basis splits the pairing as [[0, B],[C, 0]] with
/// the complementary blocks vanishing, the matrix is visibly hyperbolic and
/// the witness (the index set of the first summand) is returned.  Searches
/// all balanced partitions; restricted to matrices of size <= 8, larger
/// inputs are an error.
std::optional<std::vector<std::size_t>> is_visibly_hyperbolic(const KnotDescriptor& k);

// Built-in table: unknot, both trefoils, the figure-eight, and the ribbon
// knot 9_46 used as the pattern in the stabilization families.  Every
// entry's Alexander polynomial is re-verified on first access.  Throws
// std::out_of_range for unknown names.
const KnotDescriptor& builtin_knot(const std::string& name);
std::vector<std::string> builtin_names();

}  // namespace knotcert
