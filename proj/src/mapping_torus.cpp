#include "toruscalc/mapping_torus.hpp"

#include <array>
#include <stdexcept>
#include <utility>

#include "toruscalc/word.hpp"

namespace toruscalc {

namespace {

void check_3x3(const IntMatrix& m) {
  if (m.rows() != 3 || m.cols() != 3)
    throw std::invalid_argument("monodromy must be 3x3");
}

// Presentation words carry |entry| letters per generator image, so bound
// the entries at something a coset table could ever chew through.
long long presentable_entry(const BigInt& v) {
  if (v > 4096 || v < -4096)
    throw std::invalid_argument(
        "monodromy entry too large to present as relator words");
  return v.convert_to<long long>();
}

}  // namespace

MappingTorus::MappingTorus(IntMatrix phi, std::string label_)
    : monodromy(std::move(phi)), label(std::move(label_)) {
  check_3x3(monodromy);
  if (determinant(monodromy) != 1)
    throw std::invalid_argument("monodromy must have determinant +1");
}

Presentation torus_presentation(const MappingTorus& mt) {
  Generator gx{"x"};
  Generator gy{"y"};
  Generator gz{"z"};
  Generator gt{"t"};
  Word x{gx};
  Word y{gy};
  Word z{gz};
  Word t{gt};
  std::array<Word, 3> fiber{x, y, z};

  std::vector<Word> relators{commutator(x, y), commutator(x, z),
                             commutator(y, z)};
  for (std::size_t col = 0; col < 3; ++col) {
    // Image of the col-th fiber generator under the monodromy, read off
    // its column: x^m0 y^m1 z^m2.
    Word image = power(x, presentable_entry(mt.monodromy.at(0, col))) *
                 power(y, presentable_entry(mt.monodromy.at(1, col))) *
                 power(z, presentable_entry(mt.monodromy.at(2, col)));
    relators.push_back(t * fiber[col] * t.inverse() * image.inverse());
  }
  return Presentation({gx, gy, gz, gt}, relators);
}

BigInt cs_condition(const IntMatrix& phi) {
  check_3x3(phi);
  return determinant(phi - IntMatrix::identity(3));
}

MappingTorus surgery_multiply(const MappingTorus& mt, const Transvection& t) {
  // The constructor re-checks det +1, so a bad factor cannot slip through.
  return MappingTorus(t.matrix(3) * mt.monodromy, mt.label);
}

std::vector<Transvection> realize_by_surgeries(const IntMatrix& phi) {
  check_3x3(phi);
  return factor_transvections(phi);
}

MappingTorus replay_surgeries(const std::vector<Transvection>& ts) {
  // Left multiplication builds the product right-to-left, so replay the
  // recorded list from its last entry to make the monodromy equal the
  // left-to-right product.
  MappingTorus mt(IntMatrix::identity(3));
  for (auto it = ts.rbegin(); it != ts.rend(); ++it)
    mt = surgery_multiply(mt, *it);
  return mt;
}

AbelianInvariants circle_surgery_group(const MappingTorus& mt) {
  return cokernel_invariants(mt.monodromy - IntMatrix::identity(3));
}

std::vector<IntMatrix> cs_search(int entry_bound) {
  if (entry_bound < 0 || entry_bound > 3)
    throw std::invalid_argument("cs-search entry bound must be in [0, 3]");
  std::vector<IntMatrix> hits;
  // Entries fit in int64 comfortably (|det| <= 6*27), so run the whole
  // grid on machine integers and only build exact matrices for hits.
  std::array<long long, 9> e;
  e.fill(-entry_bound);
  auto det3 = [](const std::array<long long, 9>& m) {
    return m[0] * (m[4] * m[8] - m[5] * m[7]) -
           m[1] * (m[3] * m[8] - m[5] * m[6]) +
           m[2] * (m[3] * m[7] - m[4] * m[6]);
  };
  for (;;) {
    if (det3(e) == 1) {
      std::array<long long, 9> shifted = e;
      shifted[0] -= 1;
      shifted[4] -= 1;
      shifted[8] -= 1;
      long long cs = det3(shifted);
      if (cs == 1 || cs == -1) {
        std::vector<BigInt> entries(e.begin(), e.end());
        hits.push_back(IntMatrix(3, 3, entries));
      }
    }
    int pos = 8;
    while (pos >= 0 && e[pos] == entry_bound) {
      e[pos] = -entry_bound;
      --pos;
    }
    if (pos < 0) break;
    ++e[pos];
  }
  return hits;
}

}  // namespace toruscalc
