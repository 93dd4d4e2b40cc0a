#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "toruscalc/word.hpp"

using namespace toruscalc;

namespace {

const Generator ga{"a"};
const Generator gb{"b"};
const Generator gc{"c"};
const Generator gd{"d"};

// Independent single-pass stack reduction; the reference for Word::reduced.
std::vector<Letter> stack_reduce(const std::vector<Letter>& in) {
  std::vector<Letter> out;
  for (const Letter& l : in) {
    if (!out.empty() && out.back().gen == l.gen && out.back().exp == -l.exp)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

// Independent inversion: reverse the letters and flip every exponent.
Word invert_reverse(const Word& w) {
  std::vector<Letter> out;
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
    out.push_back({it->gen, -it->exp});
  return Word::reduced(out);
}

std::vector<Letter> random_letters(std::mt19937& rng, int max_len) {
  const std::vector<Generator> gens{ga, gb, gc, gd};
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  std::uniform_int_distribution<int> sign(0, 1);
  std::vector<Letter> ls;
  const int n = len(rng);
  for (int i = 0; i < n; ++i)
    ls.push_back({gens[pick(rng)], sign(rng) ? 1 : -1});
  return ls;
}

Word random_word(std::mt19937& rng, int max_len) {
  return Word::reduced(random_letters(rng, max_len));
}

}  // namespace

TEST_CASE("free reduction cancels adjacent inverse pairs") {
  Word a{ga};
  CHECK((a * a.inverse()).is_identity());
  CHECK(reduce(Word()).is_identity());

  // a b b^-1 b c reduces to a b c.
  Word w = Word::reduced({{ga, 1}, {gb, 1}, {gb, -1}, {gb, 1}, {gc, 1}});
  CHECK(w == Word::reduced({{ga, 1}, {gb, 1}, {gc, 1}}));
  CHECK(to_string(w) == "a b c");
}

TEST_CASE("reduction matches the stack oracle on random raw letters") {
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<Letter> raw = random_letters(rng, 12);
    CHECK(Word::reduced(raw).letters() == stack_reduce(raw));
  }
}

TEST_CASE("reduce is idempotent and cancels appended inverses") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Word u = random_word(rng, 10);
    Word v = random_word(rng, 10);
    CHECK(reduce(reduce(u)) == reduce(u));
    CHECK(u * v * v.inverse() == u);
  }
}

TEST_CASE("commutator definition and special values") {
  Word a{ga};
  Word b{gb};
  Word d{gd};
  CHECK(commutator(a, a).is_identity());
  CHECK(to_string(commutator(a, b)) == "a b a^-1 b^-1");
  CHECK(to_string(commutator(b.inverse(), d.inverse())) == "b^-1 d^-1 b d");
}

TEST_CASE("commutator inverse swaps its arguments") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    Word u = random_word(rng, 8);
    Word v = random_word(rng, 8);
    CHECK(commutator(u, v).inverse() == commutator(v, u));
    CHECK(commutator(u, v).inverse() == invert_reverse(commutator(u, v)));
  }
}

TEST_CASE("powers expand and invert") {
  Word a{ga};
  Word d{gd};
  CHECK(power(a, 0).is_identity());
  CHECK(to_string(power(a * Word{gb}, 2)) == "a b a b");

  // power(w, -1) is the inverse; pinned against the invert-and-reverse
  // oracle for w = [a^-1, d].
  Word w = commutator(a.inverse(), d);
  CHECK(power(w, -1) == invert_reverse(w));
  CHECK(to_string(power(w, -1)) == "d a^-1 d^-1 a");
}

TEST_CASE("power is additive in the exponent") {
  std::mt19937 rng(31337);
  for (int trial = 0; trial < 100; ++trial) {
    Word w = random_word(rng, 6);
    for (long long j = -5; j <= 5; ++j)
      for (long long k = -5; k <= 5; ++k)
        CHECK(power(w, j) * power(w, k) == power(w, j + k));
  }
}

TEST_CASE("word text round-trips through the parser") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 200; ++trial) {
    Word w = random_word(rng, 10);
    CHECK(parse_word(to_string(w)) == w);
  }
  CHECK(to_string(Word()) == "1");
  CHECK(parse_word("1").is_identity());
  CHECK(parse_word("").is_identity());
}

TEST_CASE("parser understands commutator sugar, powers, and grouping") {
  Word a{ga};
  Word b{gb};
  CHECK(parse_word("[a,b]") == commutator(a, b));
  CHECK(parse_word("a^3") == power(a, 3));
  CHECK(parse_word("a^-2") == power(a, -2));
  CHECK(parse_word("(a b)^-1") == (a * b).inverse());
  CHECK(parse_word("[a,b]^2 a^-1") ==
        power(commutator(a, b), 2) * a.inverse());
}

TEST_CASE("parser segments juxtaposed names against a known generator list") {
  const std::vector<Generator> known{{"a1"}, {"b1"}, {"c1"}, {"d1"}};
  Word a1{Generator{"a1"}};
  Word b1{Generator{"b1"}};
  Word d1{Generator{"d1"}};
  CHECK(parse_word("a1b1", known) == a1 * b1);
  CHECK(parse_word("[b1^-1,d1^-1]^2 a1^-1", known) ==
        power(commutator(b1.inverse(), d1.inverse()), 2) * a1.inverse());
  CHECK_THROWS_AS(parse_word("q7", known), std::invalid_argument);
}

TEST_CASE("parser rejects malformed input") {
  CHECK_THROWS_AS(parse_word("[a,b"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("a^"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("a^x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word(")a("), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("[a]"), std::invalid_argument);
}
