#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "toruscalc/framed_link.hpp"

using namespace toruscalc;

namespace {

IntMatrix sym(std::size_t n, const std::vector<long long>& e) {
  return IntMatrix(n, n, std::vector<BigInt>(e.begin(), e.end()));
}

FramedLink random_link(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<long long> entry(-3, 3);
  IntMatrix lk(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      lk.at(i, j) = lk.at(j, i) = entry(rng);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("K" + std::to_string(i));
  return FramedLink(std::move(lk), std::move(labels));
}

}  // namespace

TEST_CASE("framed links validate their matrix and labels") {
  CHECK_NOTHROW(FramedLink(sym(2, {0, 1, 1, 0}), {"u", "v"}));
  CHECK_THROWS_AS(FramedLink(sym(2, {0, 1, 2, 0}), {"u", "v"}),
                  std::invalid_argument);  // not symmetric
  CHECK_THROWS_AS(FramedLink(sym(2, {0, 1, 1, 0}), {"u"}),
                  std::invalid_argument);
  CHECK_THROWS_AS(FramedLink(sym(2, {0, 1, 1, 0}), {"u", "u"}),
                  std::invalid_argument);
  CHECK_THROWS_AS(FramedLink(IntMatrix(2, 3), {"u", "v"}),
                  std::invalid_argument);
}

TEST_CASE("the Y link couples each meridian to one Borromean component") {
  FramedLink y = build_Y(2, 3);
  REQUIRE(y.components() == 5);
  CHECK(y.labels ==
        std::vector<std::string>{"B1", "B2", "B3", "mu_a", "mu_b"});
  CHECK(y.lk == sym(5, {0, 0, 0, 1, 0,  //
                        0, 0, 0, 0, 1,  //
                        0, 0, 0, 0, 0,  //
                        1, 0, 0, 2, 0,  //
                        0, 1, 0, 0, 3}));

  // All framings vanish at (0,0).
  FramedLink y00 = build_Y(0, 0);
  for (std::size_t i = 0; i < 5; ++i) CHECK(y00.lk.at(i, i) == 0);

  // Swapping (m,n) is the relabeling B1<->B2, mu_a<->mu_b.
  FramedLink y32 = build_Y(3, 2);
  std::vector<std::size_t> perm{1, 0, 2, 4, 3};
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j)
      CHECK(y.lk.at(i, j) == y32.lk.at(perm[i], perm[j]));
}

TEST_CASE("link homology is the cokernel of the linking matrix") {
  CHECK(link_h1(FramedLink(IntMatrix(0, 0), {})).trivial());

  FramedLink unknot(sym(1, {0}), {"u"});
  CHECK(link_h1(unknot).invariant_factors == std::vector<BigInt>{0});

  FramedLink lens(sym(1, {5}), {"u"});
  CHECK(link_h1(lens).invariant_factors == std::vector<BigInt>{5});

  for (long long m = -5; m <= 5; ++m)
    for (long long n = -5; n <= 5; ++n)
      CHECK(link_h1(build_Y(m, n)).invariant_factors ==
            std::vector<BigInt>{0});
}

TEST_CASE("handle slides are symmetric unimodular congruences") {
  FramedLink y = build_Y(2, 3);

  // Sliding B1 over mu_a picks up twice their linking plus mu_a's framing.
  FramedLink slid = handle_slide(y, 0, 3, 1);
  CHECK(slid.lk.at(0, 0) == 0 + 2 * 1 + 2);
  CHECK(slid.lk.is_symmetric());
  CHECK(slid.labels == y.labels);

  // The opposite slide undoes it.
  CHECK(handle_slide(slid, 0, 3, -1).lk == y.lk);

  CHECK_THROWS_AS(handle_slide(y, 1, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(handle_slide(y, 0, 9, 1), std::invalid_argument);
  CHECK_THROWS_AS(handle_slide(y, 0, 1, 2), std::invalid_argument);
}

TEST_CASE("cancelling removes a split unimodular pair") {
  FramedLink hopf(sym(2, {0, 1, 1, 0}), {"u", "v"});
  CHECK(cancel_pair(hopf, 0, 1).components() == 0);

  // The partner framing is unconstrained.
  FramedLink hopf_framed(sym(2, {0, -1, -1, 7}), {"u", "v"});
  CHECK(cancel_pair(hopf_framed, 0, 1).components() == 0);

  FramedLink bad_framing(sym(2, {2, 1, 1, 0}), {"u", "v"});
  CHECK_THROWS_WITH_AS(cancel_pair(bad_framing, 0, 1),
                       "cancel: framing of u must be 0",
                       std::invalid_argument);

  FramedLink bad_linking(sym(2, {0, 2, 2, 0}), {"u", "v"});
  CHECK_THROWS_WITH_AS(cancel_pair(bad_linking, 0, 1),
                       "cancel: u and v must link exactly once",
                       std::invalid_argument);

  FramedLink third(sym(3, {0, 1, 0, 1, 0, 1, 0, 1, 0}), {"u", "v", "w"});
  CHECK_THROWS_WITH_AS(cancel_pair(third, 0, 1), "cancel: v still links w",
                       std::invalid_argument);
}

TEST_CASE("the derived slide sequence splits Y and cancels to one curve") {
  for (long long m = -5; m <= 5; ++m)
    for (long long n = -5; n <= 5; ++n) {
      FramedLink l = build_Y(m, n);
      AbelianInvariants h = link_h1(l);

      // Slide mu_a over B1 repeatedly: each pass drops the framing by 2
      // and touches nothing else, leaving m mod 2; same for mu_b over B2.
      for (long long step = 0; step < (m < 0 ? -m : m) / 2; ++step) {
        l = handle_slide(l, 3, 0, m > 0 ? -1 : 1);
        CHECK(link_h1(l) == h);
      }
      for (long long step = 0; step < (n < 0 ? -n : n) / 2; ++step) {
        l = handle_slide(l, 4, 1, n > 0 ? -1 : 1);
        CHECK(link_h1(l) == h);
      }
      CHECK(l.lk.at(3, 3) == m % 2);
      CHECK(l.lk.at(4, 4) == n % 2);
      CHECK(l.lk.at(0, 0) == 0);
      CHECK(l.lk.at(0, 3) == 1);  // the (B1, mu_a) pair is ready to cancel

      // (B1, mu_a) and then (B2, mu_b) cancel, leaving the single curve B3.
      l = cancel_pair(l, 0, 3);
      CHECK(link_h1(l) == h);
      l = cancel_pair(l, 0, 2);  // B2 and mu_b after reindexing
      CHECK(link_h1(l) == h);
      REQUIRE(l.components() == 1);
      CHECK(l.labels[0] == "B3");
      CHECK(link_h1(l).invariant_factors == std::vector<BigInt>{0});
    }
}

TEST_CASE("homology survives 1000 random slides and cancels") {
  std::mt19937 rng(555);
  std::uniform_int_distribution<int> size(2, 5);
  std::uniform_int_distribution<int> coin(0, 1);
  int moves = 0;
  while (moves < 1000) {
    FramedLink l = random_link(rng, static_cast<std::size_t>(size(rng)));
    AbelianInvariants h = link_h1(l);
    for (int step = 0; step < 12 && moves < 1000; ++step) {
      // Prefer a valid cancel when one exists and the coin says so.
      bool cancelled = false;
      if (coin(rng) && l.components() >= 2) {
        for (std::size_t i = 0; i < l.components() && !cancelled; ++i)
          for (std::size_t j = 0; j < l.components() && !cancelled; ++j) {
            if (i == j) continue;
            try {
              FramedLink next = cancel_pair(l, i, j);
              l = next;
              cancelled = true;
            } catch (const std::invalid_argument&) {
            }
          }
      }
      if (!cancelled) {
        if (l.components() < 2) break;
        std::uniform_int_distribution<std::size_t> pick(0, l.components() - 1);
        std::size_t i = pick(rng);
        std::size_t j = pick(rng);
        while (j == i) j = pick(rng);
        l = handle_slide(l, i, j, coin(rng) ? 1 : -1);
      }
      CHECK(link_h1(l) == h);
      CHECK(l.lk.is_symmetric());
      ++moves;
    }
  }
}
