#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "toruscalc/coset.hpp"
#include "toruscalc/mapping_torus.hpp"
#include "toruscalc/tietze.hpp"

using namespace toruscalc;

namespace {

IntMatrix make3(const std::vector<long long>& e) {
  return IntMatrix(3, 3, std::vector<BigInt>(e.begin(), e.end()));
}

const IntMatrix kR12 = make3({1, 1, 0, 0, 1, 0, 0, 0, 1});
const IntMatrix kR21 = make3({1, 0, 0, 1, 1, 0, 0, 0, 1});
const IntMatrix kA = make3({2, 1, 0, 1, 1, 0, 0, 0, 1});
const IntMatrix kCompanion = make3({0, 1, 0, 0, 0, 1, 1, 0, 1});

Transvection random_unit_transvection(std::mt19937& rng) {
  std::uniform_int_distribution<std::size_t> idx(1, 3);
  std::uniform_int_distribution<int> sign(0, 1);
  std::size_t i = idx(rng);
  std::size_t j = idx(rng);
  while (j == i) j = idx(rng);
  return Transvection{i, j, sign(rng) ? 1 : -1};
}

}  // namespace

TEST_CASE("mapping tori insist on SL(3,Z) monodromies") {
  CHECK_NOTHROW(MappingTorus{kA});
  CHECK_NOTHROW(MappingTorus(kCompanion, "companion"));
  CHECK_THROWS_AS(MappingTorus(make3({0, 1, 0, 1, 0, 0, 0, 0, 1})),
                  std::invalid_argument);  // det -1
  CHECK_THROWS_AS(MappingTorus(IntMatrix::identity(2)), std::invalid_argument);
}

TEST_CASE("the trivial bundle presents Z^4") {
  Presentation p = torus_presentation(MappingTorus(IntMatrix::identity(3)));
  CHECK(p.generators().size() == 4);
  CHECK(p.relators().size() == 6);
  CHECK(abelianization(p).invariant_factors ==
        std::vector<BigInt>{0, 0, 0, 0});
}

TEST_CASE("bundle abelianization reads off the cokernel of phi minus I") {
  CHECK(abelianization(torus_presentation(MappingTorus(kA)))
            .invariant_factors == std::vector<BigInt>{0, 0});
  CHECK(abelianization(torus_presentation(MappingTorus(kCompanion)))
            .invariant_factors == std::vector<BigInt>{0});
}

TEST_CASE("huge monodromy entries are rejected rather than expanded") {
  // det stays +1 for the unit shear with any k.
  IntMatrix shear = IntMatrix::identity(3);
  shear.at(0, 1) = 1000000;
  CHECK_THROWS_AS(torus_presentation(MappingTorus(shear)),
                  std::invalid_argument);
}

TEST_CASE("cs_condition evaluates det(phi - I)") {
  CHECK(cs_condition(IntMatrix::identity(3)) == 0);
  CHECK(cs_condition(kA) == 0);
  CHECK(cs_condition(kCompanion) == 1);
  CHECK(determinant(kCompanion) == 1);
  CHECK_THROWS_AS(cs_condition(IntMatrix(2, 2)), std::invalid_argument);
}

TEST_CASE("surgery acts by left multiplication") {
  MappingTorus mt(IntMatrix::identity(3));
  mt = surgery_multiply(mt, Transvection{1, 2, 1});
  CHECK(mt.monodromy == kR12);
  mt = surgery_multiply(mt, Transvection{2, 1, 1});
  CHECK(mt.monodromy == kR21 * kR12);
  CHECK(mt.monodromy == make3({1, 1, 0, 1, 2, 0, 0, 0, 1}));

  CHECK(surgery_multiply(MappingTorus(kA), Transvection{1, 2, 0}).monodromy ==
        kA);
}

TEST_CASE("surgery preserves the determinant") {
  std::mt19937 rng(1729);
  MappingTorus mt(IntMatrix::identity(3));
  for (int step = 0; step < 100; ++step) {
    mt = surgery_multiply(mt, random_unit_transvection(rng));
    CHECK(determinant(mt.monodromy) == 1);
  }
}

TEST_CASE("realize and replay reproduce the monodromy") {
  CHECK(realize_by_surgeries(IntMatrix::identity(3)).empty());
  CHECK(replay_surgeries({}).monodromy == IntMatrix::identity(3));

  // The recorded list multiplies out left-to-right to the target; replay
  // feeds it through left multiplication in reverse and must agree.
  for (const IntMatrix& phi : {kA, kCompanion, kR12}) {
    std::vector<Transvection> ts = realize_by_surgeries(phi);
    IntMatrix prod = IntMatrix::identity(3);
    for (const Transvection& t : ts) prod = prod * t.matrix(3);
    CHECK(prod == phi);
    CHECK(replay_surgeries(ts).monodromy == phi);
  }

  CHECK_THROWS_AS(realize_by_surgeries(make3({0, 1, 0, 1, 0, 0, 0, 0, 1})),
                  std::invalid_argument);
}

TEST_CASE("realize round-trips 200 random surgery products") {
  std::mt19937 rng(987654);
  std::uniform_int_distribution<int> count(0, 10);
  for (int trial = 0; trial < 200; ++trial) {
    IntMatrix phi = IntMatrix::identity(3);
    const int n = count(rng);
    for (int i = 0; i < n; ++i)
      phi = phi * random_unit_transvection(rng).matrix(3);
    CHECK(replay_surgeries(realize_by_surgeries(phi)).monodromy == phi);
  }
}

TEST_CASE("circle surgery group is the cokernel of phi minus I") {
  CHECK(circle_surgery_group(MappingTorus(IntMatrix::identity(3)))
            .invariant_factors == std::vector<BigInt>{0, 0, 0});
  CHECK(circle_surgery_group(MappingTorus(kA)).invariant_factors ==
        std::vector<BigInt>{0});
  CHECK(circle_surgery_group(MappingTorus(kCompanion)).trivial());
}

TEST_CASE("cs_search guards its bound and finds the companion matrix") {
  CHECK(cs_search(0).empty());
  CHECK_THROWS_AS(cs_search(-1), std::invalid_argument);
  CHECK_THROWS_AS(cs_search(4), std::invalid_argument);

  std::vector<IntMatrix> hits = cs_search(1);
  CHECK(std::find(hits.begin(), hits.end(), kCompanion) != hits.end());

  // Entry-wise lexicographic order, no duplicates.
  auto key = [](const IntMatrix& m) {
    std::vector<BigInt> flat;
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 3; ++c) flat.push_back(m.at(r, c));
    return flat;
  };
  for (std::size_t i = 1; i < hits.size(); ++i)
    CHECK(key(hits[i - 1]) < key(hits[i]));

  // Every hit re-verified with the exact (cpp_int) determinant path,
  // independent of the machine-integer scan.
  for (const IntMatrix& m : hits) {
    CHECK(determinant(m) == 1);
    BigInt cs = cs_condition(m);
    CHECK((cs == 1 || cs == -1));
    CHECK(circle_surgery_group(MappingTorus(m)).trivial());
  }
}

TEST_CASE("cs monodromies abelianize to a single Z and die with t") {
  std::vector<IntMatrix> hits = cs_search(1);
  REQUIRE(!hits.empty());
  for (const IntMatrix& m : hits) {
    MappingTorus mt(m);
    Presentation p = torus_presentation(mt);
    CHECK(abelianization(p).invariant_factors == std::vector<BigInt>{0});

    // Adding the relator t collapses the group to Z^3/(phi-I) = 1.
    std::vector<Word> relators = p.relators();
    relators.push_back(Word(Generator{"t"}));
    EnumerationOutcome o = coset_enumerate(
        tietze_simplify(Presentation(p.generators(), relators)), 100000);
    REQUIRE(o.completed());
    CHECK(o.index == 1);
  }
}

TEST_CASE("cs condition detects exactly the trivial circle surgeries") {
  // Exhaustive over entries in [-2,2] with det +1, sampled for the Smith
  // side: triviality of the cokernel must track |det(phi - I)| = 1.
  std::vector<IntMatrix> hits = cs_search(2);
  REQUIRE(!hits.empty());

  long long e[9];
  auto det3 = [&](long long s) {
    long long m[9];
    for (int i = 0; i < 9; ++i) m[i] = e[i];
    m[0] -= s;
    m[4] -= s;
    m[8] -= s;
    return m[0] * (m[4] * m[8] - m[5] * m[7]) -
           m[1] * (m[3] * m[8] - m[5] * m[6]) +
           m[2] * (m[3] * m[7] - m[4] * m[6]);
  };
  std::size_t checked = 0, det_one = 0, cs_hits = 0;
  for (int i = 0; i < 9; ++i) e[i] = -2;
  for (;;) {
    if (det3(0) == 1) {
      ++det_one;
      long long cs = det3(1);
      bool satisfies = cs == 1 || cs == -1;
      if (satisfies) ++cs_hits;
      if (det_one % 97 == 0) {  // deterministic sample for the exact side
        std::vector<BigInt> entries(e, e + 9);
        MappingTorus mt{IntMatrix(3, 3, entries)};
        CHECK(circle_surgery_group(mt).trivial() == satisfies);
        ++checked;
      }
    }
    int pos = 8;
    while (pos >= 0 && e[pos] == 2) {
      e[pos] = -2;
      --pos;
    }
    if (pos < 0) break;
    ++e[pos];
  }
  CHECK(checked > 100);
  CHECK(cs_hits == hits.size());
}
