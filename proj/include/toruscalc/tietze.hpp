#pragma once

#include "toruscalc/presentation.hpp"

namespace toruscalc {

/// Simplifies a presentation by isomorphism-preserving moves only:
/// eliminate a generator that occurs exactly once in some relator
/// (solving the relator for it and substituting everywhere), drop
/// relators that reduce to the empty word, and drop relators that are
/// cyclic rotations or inverted rotations of an earlier one.  Generators
/// free of any relator are kept; removing them would change the group.
///
/// The result presents a group isomorphic to the input's, with at most as
/// many generators.  Deterministic: candidates are chosen by shortest
/// relator, then relator order, then position.
Presentation tietze_simplify(const Presentation& p);

}  // namespace toruscalc
