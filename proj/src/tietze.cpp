#include "toruscalc/tietze.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "toruscalc/word.hpp"

namespace toruscalc {

namespace {

// Substitution stops once the relator set would exceed this many letters;
// Tietze elimination can blow up and a huge presentation helps nobody.
constexpr std::size_t kMaxTotalLength = 1000000;

std::vector<Letter> cyclic_core(const Word& w) {
  const auto& ls = w.letters();
  std::size_t lo = 0;
  std::size_t hi = ls.size();
  while (hi - lo >= 2 && ls[lo].gen == ls[hi - 1].gen &&
         ls[lo].exp == -ls[hi - 1].exp) {
    ++lo;
    --hi;
  }
  return {ls.begin() + lo, ls.begin() + hi};
}

// Least letter sequence over all rotations of the cyclic core of w and of
// w^-1: relators with equal canonical forms are conjugate or inverse
// conjugate, hence interchangeable.
std::vector<Letter> cyclic_canonical(const Word& w) {
  std::vector<Letter> best;
  bool have = false;
  for (const Word& v : {w, w.inverse()}) {
    std::vector<Letter> core = cyclic_core(v);
    const std::size_t n = core.size();
    for (std::size_t r = 0; r < std::max<std::size_t>(n, 1); ++r) {
      std::vector<Letter> rot;
      rot.reserve(n);
      for (std::size_t i = 0; i < n; ++i) rot.push_back(core[(r + i) % n]);
      if (!have || rot < best) {
        best = std::move(rot);
        have = true;
      }
    }
  }
  return best;
}

void normalize(std::vector<Word>& rels) {
  std::vector<Word> out;
  std::vector<std::vector<Letter>> seen;
  for (const Word& w : rels) {
    if (w.is_identity()) continue;
    std::vector<Letter> key = cyclic_canonical(w);
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
    seen.push_back(std::move(key));
    out.push_back(w);
  }
  rels = std::move(out);
}

struct Candidate {
  std::size_t len;
  std::size_t rel_idx;
  std::size_t pos;  // unique occurrence of the generator to eliminate

  friend auto operator<=>(const Candidate&, const Candidate&) = default;
};

std::optional<Candidate> find_candidate(const std::vector<Word>& rels) {
  std::optional<Candidate> best;
  for (std::size_t ri = 0; ri < rels.size(); ++ri) {
    const auto& ls = rels[ri].letters();
    for (std::size_t pos = 0; pos < ls.size(); ++pos) {
      const Generator& g = ls[pos].gen;
      std::size_t count = 0;
      for (const Letter& l : ls)
        if (l.gen == g) ++count;
      if (count != 1) continue;
      Candidate c{ls.size(), ri, pos};
      if (!best || c < *best) best = c;
      break;  // later positions in this relator cannot beat this one
    }
  }
  return best;
}

Word substitute(const Word& w, const Generator& g, const Word& repl,
                const Word& repl_inv) {
  std::vector<Letter> out;
  out.reserve(w.length());
  for (const Letter& l : w.letters()) {
    if (l.gen == g) {
      const auto& rls = (l.exp > 0 ? repl : repl_inv).letters();
      out.insert(out.end(), rls.begin(), rls.end());
    } else {
      out.push_back(l);
    }
  }
  return Word::reduced(std::move(out));
}

}  // namespace

Presentation tietze_simplify(const Presentation& p) {
  std::vector<Generator> gens = p.generators();
  std::vector<Word> rels = p.relators();
  normalize(rels);
  for (;;) {
    std::optional<Candidate> c = find_candidate(rels);
    if (!c) break;

    const auto& ls = rels[c->rel_idx].letters();
    const Letter occ = ls[c->pos];
    Word u = Word::reduced({ls.begin(), ls.begin() + c->pos});
    Word v = Word::reduced({ls.begin() + c->pos + 1, ls.end()});
    // u g v = 1 solves to g = u^-1 v^-1; u g^-1 v = 1 to g = v u.
    Word repl = occ.exp > 0 ? u.inverse() * v.inverse() : v * u;
    Word repl_inv = repl.inverse();

    std::vector<Word> next;
    next.reserve(rels.size() - 1);
    std::size_t total = 0;
    for (std::size_t ri = 0; ri < rels.size(); ++ri) {
      if (ri == c->rel_idx) continue;
      Word s = substitute(rels[ri], occ.gen, repl, repl_inv);
      total += s.length();
      next.push_back(std::move(s));
    }
    if (total > kMaxTotalLength) break;

    rels = std::move(next);
    gens.erase(std::find(gens.begin(), gens.end(), occ.gen));
    normalize(rels);
  }
  return Presentation(gens, rels);
}

}  // namespace toruscalc
