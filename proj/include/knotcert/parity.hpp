#pragma once

#include "knotcert/seifert.hpp"

namespace knotcert {

/// Arf invariant, 0 or 1, read off the determinant: Arf(K) = 0 exactly when
/// |Delta_K(-1)| is congruent to +-1 mod 8.  The knot determinant is always
/// odd; an even value signals corrupt input and raises std::invalid_argument.
int arf(const KnotDescriptor& k);

/// Whether some finite stack of doubling stabilizations turns the knot into a
/// doubly slice one; this is governed entirely by the Arf invariant, so the
/// answer is arf(k) == 0.
bool is_stably_doubly_slice(const KnotDescriptor& k);

}  // namespace knotcert
