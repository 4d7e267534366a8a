#pragma once

#include <map>
#include <string>

#include "knotcert/covers.hpp"
#include "knotcert/families.hpp"
#include "knotcert/parity.hpp"

namespace knotcert {

/// One verified inequality inside a certificate.  The result is recomputable
/// from lhs/relation/rhs alone, which is what makes stored certificates
/// re-checkable bit for bit.
struct CertCheck {
  std::string description;
  CertifiedValue lhs;
  std::string relation;  // ">" or ">="
  CertifiedValue rhs;
  Cmp result = Cmp::Inconclusive;
};

enum class CertStatus { Pass, Fail, Inconclusive };

const char* status_name(CertStatus s);

/// A machine-checkable record of one obstruction run: the claim, the inputs
/// that produced it, every inequality that was verified, and any standing
/// assumptions the conclusion is conditional on.  `conclusion` is nonempty
/// exactly when every check passed.
struct Certificate {
  std::string claim;                            // operation label, e.g. "gds-x-lower-bound"
  std::map<std::string, long> int_inputs;       // named integer inputs/results
  std::map<std::string, std::string> text_inputs;
  std::vector<CertCheck> checks;
  std::vector<std::string> conditional_on;      // assumptions the verdict rests on
  CertStatus status = CertStatus::Inconclusive;
  std::string conclusion;
};

// Recompute every check's three-valued result plus the aggregate status and
// compare with what the certificate says.  True exactly on a bit-for-bit
// match; used on parsed certificates before trusting them.
bool reverify(const Certificate& c);

// Evaluate a relation string on certified values.
Cmp evaluate_relation(const CertifiedValue& lhs, const std::string& relation,
                      const CertifiedValue& rhs);

/// Core embedding obstruction: if the family's infected knot bounded the
/// relevant surfaces in some closed simply connected X presenting H_1 of the
/// surgery manifold with r relations, then (i) the axis classes would lie in
/// an r-generated submodule and (ii) the rho margin would be at most 2r.
/// The certificate checks axis_count > r and
/// companion_rho0 - copies*slack > 2r.
Certificate certify_no_h1_embedding(const FamilyDescriptor& f, unsigned r);

/// X-double-slice genus bound from the embedding obstruction at r = 2g + b2:
/// passing means gds_X(seifert_level) > g for every closed simply connected
/// X with second Betti number b2.
Certificate gds_X_lower_bound(const FamilyDescriptor& f, unsigned b2, unsigned g);

/// Double stabilizing number bound at r = 2m.  Requires Arf = 0 (otherwise
/// the invariant is undefined and this throws).  Also reports the largest r
/// the margin supports, which yields a dsn_X supplement for small b2(X).
Certificate dsn_lower_bound(const FamilyDescriptor& f, unsigned m);

/// gds_X certificate for thm_d_family(g, slack) at b2 = 0, extended by a
/// verified screen that every prime-power branched cover of the pattern up
/// to screen_max_n is a homology sphere - the property that makes this
/// family invisible to the classical cover obstructions.
Certificate thm_d_certificate(unsigned g, const CertifiedValue& slack_per_copy,
                              unsigned screen_max_n = 32);

/// Superslice genus bound from minimal generators: mu(K) <= 4 g_s^X + 2 b2
/// gives g_s^X >= ceil((mu - 2 b2) / 4).
Certificate superslice_lower_bound(const KnotDescriptor& k, unsigned b2);

/// Classical bound g_ds(K) >= max |signature|.
Certificate signature_gds_bound(const KnotDescriptor& k);

/// Everything cheap about one knot in a single table: genus-type upper
/// bounds, signature and generator-count lower bounds, parity data, plus
/// consistency of the chain between them.
struct BoundsReport {
  std::string name;
  bool has_seifert = false;
  std::optional<unsigned> g3_upper;        // genus of the given surface
  std::optional<unsigned> gds_upper;       // 2 * g3_upper
  int gds_lower_signature = 0;             // max |sigma| over the circle
  unsigned min_gens = 0;                   // generators of the Alexander module
  unsigned superslice_b2_0 = 0;            // ceil(min_gens / 4)
  int arf_value = 0;
  bool stably_doubly_slice = false;
  std::optional<unsigned> sn_upper;        // 0 when the knot is known slice/ribbon
  bool dsn_defined = false;
  std::vector<std::string> annotations;
  bool consistent = true;
};

BoundsReport inequality_report(const KnotDescriptor& k);

}  // namespace knotcert
