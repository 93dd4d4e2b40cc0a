#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "toruscalc/intmat.hpp"

namespace toruscalc {

/// A framed link recorded at the homology level: a symmetric linking
/// matrix with framings on the diagonal, one labeled row per component.
/// The diagram itself (crossings, isotopy) is out of scope; everything
/// here is determined by the matrix.
struct FramedLink {
  IntMatrix lk;
  std::vector<std::string> labels;

  FramedLink() = default;
  /// Throws std::invalid_argument unless lk is square symmetric with one
  /// unique label per component.
  FramedLink(IntMatrix lk, std::vector<std::string> labels);

  std::size_t components() const { return labels.size(); }
};

/// Surgery diagram of Y_{m,n}: the 0-framed Borromean rings B1, B2, B3
/// (pairwise linking 0) plus meridians mu_a (framing m, linking B1 once)
/// and mu_b (framing n, linking B2 once).
FramedLink build_Y(long long m, long long n);

/// H1 of the surgered 3-manifold: the cokernel of the linking matrix.
AbelianInvariants link_h1(const FramedLink& l);

/// Slides component i over component j (sign picks the orientation):
/// the congruence lk <- E^T lk E for the unit column operation
/// C_i <- C_i + sign * C_j.  Framing i becomes f_i + 2*sign*lk_ij + f_j.
/// Throws std::invalid_argument on bad indices, i = j, or sign not +-1.
FramedLink handle_slide(const FramedLink& l, std::size_t i, std::size_t j,
                        int sign);

/// Removes a split Hopf-like pair: requires lk_ii = 0, lk_ij = +-1, and
/// both components unlinked from everything else (framing j is
/// unconstrained).  The 2x2 block is unimodular, so H1 is unchanged.
/// Throws std::invalid_argument naming the violated condition.
FramedLink cancel_pair(const FramedLink& l, std::size_t i, std::size_t j);

}  // namespace toruscalc
