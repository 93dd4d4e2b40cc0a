#pragma once

#include <array>
#include <cstddef>
#include <string>

#include "toruscalc/coset.hpp"
#include "toruscalc/presentation.hpp"

namespace toruscalc {

/// The two lagrangian tori carrying surgeries in each copy of the
/// punctured-torus product: T_ac spanned by the a and c directions, T_bc
/// by b and c.
enum class TorusId { ac, bc };

/// Basis {a, b, mu} for H1 of the boundary of a torus complement: the two
/// push-off loop classes and the meridian, which bounds in the removed
/// tubular neighborhood.  In the complement group the meridian is a
/// commutator of the complementary generators.
struct TorusBoundaryBasis {
  Word a;
  Word b;
  Word mu;

  static TorusBoundaryBasis for_torus(TorusId id, int copy_index);
};

/// One torus surgery: degree p on the meridian against direction q*a + r*b.
/// The family built here always has a bare generator direction (one of q,r
/// is +-1, the other 0).
struct SurgerySpec {
  TorusId torus_id = TorusId::ac;
  int copy_index = 1;
  long long p = 0;
  long long q = 0;
  long long r = 0;
  Word direction_word;
  Word meridian_word;

  /// Degree-p surgery on T_ac of the given copy, direction a_i.
  static SurgerySpec ac(int copy_index, long long p);
  /// Degree-p surgery on T_bc of the given copy, direction b_i.
  static SurgerySpec bc(int copy_index, long long p);

  /// Throws std::invalid_argument when the spec is malformed: copy index
  /// outside {1,2}, (p,q,r) = (0,0,0), direction coefficients not a unit
  /// pair, or meridian word not the canonical commutator for the torus.
  void validate() const;
};

/// One torus-complement piece: generators a_i, b_i, c_i, d_i with the base
/// commutator relators, plus one relator per applied surgery.  chi stays 1
/// through surgeries (a T^2 x D^2 is cut out and reglued).
struct PieceModel {
  int copy_index = 1;
  Presentation presentation;
  int chi = 1;
  std::vector<long long> surgery_degrees;  // in application order

  friend bool operator==(const PieceModel&, const PieceModel&) = default;
};

/// The glued closed model S_(m,n,m',n'): 8 generators, 12 relators, chi 2.
struct SphereModel {
  std::array<long long, 4> params{};  // m, n, m', n'
  Presentation presentation;
  int chi = 2;

  friend bool operator==(const SphereModel&, const SphereModel&) = default;
};

/// Throws std::invalid_argument unless copy_index is 1 or 2.
PieceModel build_piece(int copy_index);

/// Appends the surgery relator mu^p * direction^-1 to the piece.
/// Throws std::invalid_argument when the spec fails validate() or targets
/// the wrong copy.
PieceModel apply_surgery(const PieceModel& piece, const SurgerySpec& spec);

/// build_piece followed by the degree-m surgery on T_ac and the degree-n
/// surgery on T_bc: the piece X_{m,n} with 4 relators.
PieceModel build_X(long long m, long long n, int copy_index = 1);

/// Glues copy 1 to a reversed copy 2 along the common boundary,
/// identifying a1~c2, b1~d2, a2~c1, b2~d1.  Requires disjoint generator
/// sets and two recorded surgeries per piece (otherwise the result would
/// not be a closed sphere model); throws std::invalid_argument.
SphereModel glue(const PieceModel& x, const PieceModel& x_bar);

enum class Verdict { certified, inconclusive, failed };

std::string to_string(Verdict v);

/// Everything verify_sphere measured about one parameter tuple.
struct SphereVerification {
  std::array<long long, 4> params{};
  int chi = 0;
  AbelianInvariants h1;
  EnumerationOutcome enumeration;
  Presentation presentation;
  Verdict verdict = Verdict::failed;
};

/// Builds S_(m,n,m',n') and checks the three homotopy-sphere invariants:
/// chi = 2, trivial H1 (exact Smith form of the relation matrix), and
/// trivial pi1 certified by coset enumeration (run on a Tietze-simplified
/// copy of the presentation, which presents the same group).  Verdict is
/// certified only when all three pass; a budget-exceeded enumeration with
/// the other two passing is inconclusive, anything else failed.
/// Throws std::invalid_argument if budget < 1.
SphereVerification verify_sphere(long long m, long long n, long long mp,
                                 long long np,
                                 std::size_t budget = kDefaultCosetBudget);

}  // namespace toruscalc
