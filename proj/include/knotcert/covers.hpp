#pragma once

#include <optional>
#include <vector>

#include "knotcert/seifert.hpp"

namespace knotcert {

/// Order of the first homology of the n-fold cyclic branched cover, n >= 2:
/// the absolute resultant of (t^n - 1)/(t - 1) with the canonical Alexander
/// polynomial, i.e. |prod Delta(zeta)| over the nontrivial n-th roots of
/// unity.  nullopt means the homology is infinite (the resultant vanished).
std::optional<Integer> branched_cover_order(const KnotDescriptor& k, unsigned n);

struct CoverScreen {
  bool all_trivial = true;
  // (n, order) for each prime power n in [2, bound]; prime-power covers are
  // always rational homology spheres, so the order is finite here.
  std::vector<std::pair<unsigned, Integer>> orders;
};

/// Orders of all prime-power cyclic branched covers up to the bound, with a
/// flag telling whether every one of them is a homology sphere.  This is the
/// gate a doubly slice candidate has to pass before the deeper obstructions
/// are worth running.
CoverScreen prime_power_cover_screen(const KnotDescriptor& k, unsigned bound);

}  // namespace knotcert
