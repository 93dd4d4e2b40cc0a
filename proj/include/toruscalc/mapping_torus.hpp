#pragma once

#include <string>
#include <vector>

#include "toruscalc/intmat.hpp"
#include "toruscalc/presentation.hpp"

namespace toruscalc {

/// A T^3-bundle over the circle with the given monodromy.  Orientation
/// convention: monodromies are 3x3 with determinant +1.
struct MappingTorus {
  IntMatrix monodromy;
  std::string label;

  /// Throws std::invalid_argument unless phi is 3x3 with det +1.
  explicit MappingTorus(IntMatrix phi, std::string label = "");
};

/// Fundamental group as Z^3 semidirect Z: generators x, y, z, t with the
/// fiber commutators [x,y], [x,z], [y,z] and conjugation relators
/// t g t^-1 phi(g)^-1, where phi(g) is read off g's monodromy column.
Presentation torus_presentation(const MappingTorus& mt);

/// det(phi - I); the Cappell-Shaneson condition is membership in {+1,-1}.
/// Throws std::invalid_argument unless phi is 3x3.
BigInt cs_condition(const IntMatrix& phi);

/// Torus surgery in the fiber direction: monodromy becomes
/// matrix(t) * monodromy.  Determinant is preserved.
MappingTorus surgery_multiply(const MappingTorus& mt, const Transvection& t);

/// Unit transvections whose left-to-right product is phi; delegates to
/// factor_transvections.  Replaying them through surgery_multiply (see
/// replay_surgeries) starting from the trivial bundle reproduces phi.
/// Throws std::invalid_argument unless phi is 3x3 with det +1.
std::vector<Transvection> realize_by_surgeries(const IntMatrix& phi);

/// Applies a recorded surgery list to the trivial bundle M_I.  Surgery
/// acts by left multiplication, so the list is replayed last entry first;
/// the result's monodromy is the list's left-to-right product.
MappingTorus replay_surgeries(const std::vector<Transvection>& ts);

/// H1 of the result of surgery along the circle 0-section: the quotient
/// killing t, which is Z^3 / (phi - I) Z^3, read off the Smith form of
/// phi - I.  Trivial exactly when the Cappell-Shaneson condition holds.
AbelianInvariants circle_surgery_group(const MappingTorus& mt);

/// All 3x3 matrices with entries in [-entry_bound, entry_bound], det +1,
/// and det(phi - I) = +-1, in lexicographic entry order (row-major).
/// Throws std::invalid_argument unless entry_bound is in [0, 3]; the
/// upper limit guards the 7^9 search space.
std::vector<IntMatrix> cs_search(int entry_bound);

}  // namespace toruscalc
