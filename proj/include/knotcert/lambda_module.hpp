#pragma once

#include "knotcert/polymat.hpp"

namespace knotcert {

/// Finitely generated module over Q[t, t^-1] in invariant-factor form:
/// free part of rank free_rank plus sum of Lambda/(f_i) with each f_i a
/// canonical non-unit and f_1 | f_2 | ... | f_k.  Since the ring is a PID
/// this classifies the module up to isomorphism, so equality of this struct
/// is equality of modules.
struct LambdaModule {
  unsigned free_rank = 0;
  std::vector<LaurentPoly> invariant_factors;

  LambdaModule() = default;
  LambdaModule(unsigned rank, std::vector<LaurentPoly> factors);

  bool is_trivial() const { return free_rank == 0 && invariant_factors.empty(); }

  friend bool operator==(const LambdaModule& a, const LambdaModule& b) {
    return a.free_rank == b.free_rank && a.invariant_factors == b.invariant_factors;
  }
};

/// Diagonalize a presentation matrix over Q[t, t^-1] by row/column operations
/// (the ring is Euclidean with degree = exponent span, so the classical Smith
/// algorithm applies) and read off the cokernel.
LambdaModule smith_normal_form(const PolyMatrix& presentation);

// Smallest number of generators: free rank plus number of invariant factors.
unsigned min_generators(const LambdaModule& m);

// Number of invariant factors divisible by p; for irreducible p this is the
// minimal generator count of the p-primary part.  p must be a non-unit;
// irreducibility is the caller's responsibility.
unsigned primary_multiplicity(const LambdaModule& m, const LaurentPoly& p);

// Product of the invariant factors, canonical.  Defined only for torsion
// modules; throws std::invalid_argument when free_rank > 0.  The trivial
// module has order 1.
LaurentPoly module_order(const LambdaModule& m);

// Invariant factors of the direct sum, re-interleaved into a divisibility
// chain via gcd/lcm refinement.
LambdaModule direct_sum(const LambdaModule& a, const LambdaModule& b);

}  // namespace knotcert
