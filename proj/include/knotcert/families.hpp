#pragma once

#include <optional>

#include "knotcert/signature.hpp"

namespace knotcert {

/// Satellite infection data: along axis_count disjoint curves, all reading
/// the same irreducible axis_primary in the Alexander module of the ambient
/// knot, a companion knot is tied in.  companion_rho0 is the certified
/// signature integral of the companion - the quantity the embedding
/// obstructions consume.
struct InfectionDatum {
  LaurentPoly axis_primary;
  unsigned axis_count = 0;
  KnotDescriptor companion;
  CertifiedValue companion_rho0;
};

/// A stabilization-family member: `copies` connected summands of `pattern`,
/// each carrying one infection axis.  seifert_level is the underlying
/// connected sum as a knot descriptor; pattern_slack_per_copy bounds the
/// rho-contribution a single pattern copy can smuggle in (exactly 0 for
/// ribbon patterns, an assumption otherwise - certificates surface it).
struct FamilyDescriptor {
  KnotDescriptor pattern;
  unsigned copies = 0;
  InfectionDatum infection;
  CertifiedValue pattern_slack_per_copy;
  KnotDescriptor seifert_level;
};

// Re-checks every construction invariant of a family descriptor:
// multiplicities, the copies-fold module decomposition, the recomputed
// companion rho0, slack admissibility.  Throws std::invalid_argument with a
// reason on any mismatch.  Parsing external family JSON runs this too.
void validate_family(const FamilyDescriptor& f);

// Least N with 4N/3 strictly above the threshold; the companion used by all
// constructors is the N-fold sum of left-handed trefoils, whose signature
// integral is exactly 4N/3.
unsigned minimal_companion_count(const Rational& threshold);

/// Family member obstructing X-double-slice genus g against b2(X) = n:
/// 2g+n+1 copies of the ribbon pattern 9_46, axis 2t-1, companion trefoils
/// pushing the rho margin past 2(2g+n).
FamilyDescriptor thm_c_family(unsigned g, unsigned n);

/// Family member with trivial prime-power cover homology: 2g+1 copies of a
/// module surrogate with two Phi_30 generators and vanishing signatures.
/// The per-copy rho slack D must be supplied (the pattern is not ribbon);
/// certificates built on this family carry the assumption explicitly.
FamilyDescriptor thm_d_family(unsigned g, const CertifiedValue& slack_per_copy);

/// Knot whose Alexander module needs 4g + 2*b2 + 1 generators: that many
/// copies of 9_46.  Input to the superslice lower bound.
KnotDescriptor thm_g_family(unsigned g, unsigned b2);

// The Phi_30 module surrogate pattern used by thm_d_family.
KnotDescriptor thm_d_pattern();

/// General satellite constructor: one copy, one axis.  The slack defaults to
/// exactly 0 when the pattern is known ribbon; otherwise an explicit slack
/// must be given or construction fails.
FamilyDescriptor satellite_descriptor(const KnotDescriptor& pattern,
                                      const LaurentPoly& axis_primary,
                                      const KnotDescriptor& companion,
                                      std::optional<CertifiedValue> slack = std::nullopt);

/// Universal crossing-number bound on the magnitude of any signature-integral
/// rho invariant of a knot: 69713280 * crossings.  A coarse but assumption-
/// free source for the slack input of thm_d_family.
Integer cha_rho_bound(unsigned crossing_number);

}  // namespace knotcert
