#pragma once

#include <optional>

#include "knotcert/certified.hpp"
#include "knotcert/roots.hpp"
#include "knotcert/seifert.hpp"

namespace knotcert {

/// One discontinuity of the Levine-Tristram signature function on the upper
/// semicircle, parameterized by x = cos(theta).  The angle is theta/pi, so
/// the whole semicircle is (0, 1); angles are exact rationals precisely for
/// jumps at roots of unity (cyclotomic factors of the Alexander polynomial).
struct JumpPoint {
  CertifiedValue abscissa;                    // x = cos(theta), in (-1, 1)
  CertifiedValue angle;                       // theta / pi, in (0, 1)
  std::optional<unsigned> cyclotomic_index;   // d when the jump sits at a primitive d-th root
};

/// Signature as a step function on the open upper semicircle: arc_values[i]
/// is the constant value between jumps[i-1] and jumps[i] (angles increasing;
/// arc 0 starts at angle 0, the last arc ends at angle 1).  rho0 is the
/// integral of the signature over the unit circle against normalized Haar
/// measure - exact when every jump is cyclotomic, an interval enclosure
/// otherwise.
struct SignatureProfile {
  std::vector<JumpPoint> jumps;   // ordered by increasing angle
  std::vector<int> arc_values;    // size jumps.size() + 1
  CertifiedValue rho0;
  int max_abs = 0;
};

struct ProfileOptions {
  // Cyclotomic factors Phi_d are divided out for d up to this bound, making
  // their jump angles exact.
  unsigned cyclotomic_bound = 120;
  // Interval jumps are refined until both abscissa and angle enclosures are
  // narrower than this.
  Rational enclosure_width = Rational(Integer(1), pow10(30));
};

/// Levine-Tristram signature at omega = exp(i theta), theta in (0, pi),
/// given by x = cos(theta) in (-1, 1): the signature of the Hermitian form
/// (1-omega) V + conj(1-omega) V^T.  Arithmetic runs exactly in
/// Q[sigma]/(sigma^2 - (x^2-1)) via congruence diagonalization.  x must not
/// be a jump abscissa (a root of the symmetrized Alexander polynomial);
/// jumps are rejected with std::invalid_argument.
int signature_at(const SeifertMatrix& v, const Rational& x);

// Descriptor version.  Surrogates must promise signature_zero, else this is
// an error.
int signature_at(const KnotDescriptor& k, const Rational& x);

SignatureProfile signature_profile(const KnotDescriptor& k, const ProfileOptions& opts = {});

// The signature integral alone.
CertifiedValue rho0(const KnotDescriptor& k, const ProfileOptions& opts = {});

// Largest |signature| over the circle; a lower-bound source for several
// genus-type invariants.
int max_abs_signature(const KnotDescriptor& k, const ProfileOptions& opts = {});

}  // namespace knotcert
