#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "toruscalc/presentation.hpp"

namespace toruscalc {

struct CensusEntry {
  std::string target;  // "Z/2" .. "Z/12", "S3", "S4", "S5"
  std::uint64_t hom_count = 0;

  friend bool operator==(const CensusEntry&, const CensusEntry&) = default;
};

/// Exact homomorphism counts from the presented group into each finite
/// target of order <= target_order_bound, by exhaustive generator
/// assignment with relator checking.  The target family is fixed: cyclic
/// groups Z/2 .. Z/12 and symmetric groups S3, S4, S5; entries appear in
/// that order.  Counts include the trivial homomorphism, so every entry
/// is >= 1.  Counts are isomorphism invariants of the group, not of the
/// presentation.
/// Throws std::invalid_argument if target_order_bound > 120.
std::vector<CensusEntry> quotient_census(const Presentation& p,
                                         unsigned target_order_bound);

}  // namespace toruscalc
