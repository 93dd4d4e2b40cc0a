#include "toruscalc/census.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <stdexcept>

#include "toruscalc/word.hpp"

namespace toruscalc {

namespace {

struct FiniteTarget {
  std::string id;
  std::size_t order = 1;
  std::vector<std::uint8_t> mul;  // order x order, row-major
  std::vector<std::uint8_t> inv;

  std::uint8_t at(std::size_t a, std::size_t b) const {
    return mul[a * order + b];
  }
};

void fill_inverses(FiniteTarget& t) {
  t.inv.resize(t.order);
  for (std::size_t a = 0; a < t.order; ++a)
    for (std::size_t b = 0; b < t.order; ++b)
      if (t.at(a, b) == 0) t.inv[a] = static_cast<std::uint8_t>(b);
}

FiniteTarget cyclic_target(unsigned k) {
  FiniteTarget t;
  t.id = "Z/" + std::to_string(k);
  t.order = k;
  t.mul.resize(t.order * t.order);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      t.mul[a * k + b] = static_cast<std::uint8_t>((a + b) % k);
  fill_inverses(t);
  return t;
}

// Elements are the permutations of {0..n-1} in lexicographic order, so the
// identity is element 0.  Product a*b acts by b first, then a.
FiniteTarget symmetric_target(unsigned n) {
  std::vector<std::vector<std::uint8_t>> perms;
  std::vector<std::uint8_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  std::map<std::vector<std::uint8_t>, std::uint8_t> rank;
  for (std::size_t i = 0; i < perms.size(); ++i)
    rank[perms[i]] = static_cast<std::uint8_t>(i);

  FiniteTarget t;
  t.id = "S" + std::to_string(n);
  t.order = perms.size();
  t.mul.resize(t.order * t.order);
  std::vector<std::uint8_t> c(n);
  for (std::size_t a = 0; a < t.order; ++a)
    for (std::size_t b = 0; b < t.order; ++b) {
      for (std::size_t i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]];
      t.mul[a * t.order + b] = rank.at(c);
    }
  fill_inverses(t);
  return t;
}

const std::vector<FiniteTarget>& all_targets() {
  static const std::vector<FiniteTarget> targets = [] {
    std::vector<FiniteTarget> ts;
    for (unsigned k = 2; k <= 12; ++k) ts.push_back(cyclic_target(k));
    for (unsigned n = 3; n <= 5; ++n) ts.push_back(symmetric_target(n));
    return ts;
  }();
  return targets;
}

// Letters compiled to gen_index*2 (+1 for an inverse letter).
struct CompiledRelator {
  std::vector<std::uint32_t> letters;
  std::size_t max_gen = 0;
};

class HomCounter {
 public:
  HomCounter(const Presentation& p, const FiniteTarget& t) : t_(t) {
    ngens_ = p.generators().size();
    assign_.resize(ngens_);
    for (const Word& w : p.relators()) {
      CompiledRelator r;
      for (const Letter& l : w.letters()) {
        std::size_t gi = *p.generator_index(l.gen);
        r.max_gen = std::max(r.max_gen, gi);
        r.letters.push_back(
            static_cast<std::uint32_t>(2 * gi + (l.exp < 0 ? 1 : 0)));
      }
      by_depth_.resize(std::max(by_depth_.size(), r.max_gen + 1));
      by_depth_[r.max_gen].push_back(std::move(r));
    }
  }

  std::uint64_t count() { return dfs(0); }

 private:
  bool closes(const CompiledRelator& r) const {
    std::uint8_t acc = 0;
    for (std::uint32_t l : r.letters) {
      std::uint8_t e = assign_[l >> 1];
      if (l & 1) e = t_.inv[e];
      acc = t_.at(acc, e);
    }
    return acc == 0;
  }

  // Depth d has generators 0..d-1 assigned and every relator whose
  // maximal generator is < d verified.
  std::uint64_t dfs(std::size_t d) {
    if (d >= by_depth_.size()) {
      // No relator constrains the remaining generators: they are free.
      std::uint64_t free_count = 1;
      for (std::size_t i = d; i < ngens_; ++i) free_count *= t_.order;
      return free_count;
    }
    std::uint64_t total = 0;
    for (std::size_t e = 0; e < t_.order; ++e) {
      assign_[d] = static_cast<std::uint8_t>(e);
      bool ok = true;
      for (const CompiledRelator& r : by_depth_[d])
        if (!closes(r)) {
          ok = false;
          break;
        }
      if (ok) total += dfs(d + 1);
    }
    return total;
  }

  const FiniteTarget& t_;
  std::size_t ngens_ = 0;
  std::vector<std::uint8_t> assign_;
  std::vector<std::vector<CompiledRelator>> by_depth_;
};

}  // namespace

std::vector<CensusEntry> quotient_census(const Presentation& p,
                                         unsigned target_order_bound) {
  if (target_order_bound > 120)
    throw std::invalid_argument("target order bound must be <= 120");
  std::vector<CensusEntry> out;
  for (const FiniteTarget& t : all_targets()) {
    if (t.order > target_order_bound) continue;
    out.push_back({t.id, HomCounter(p, t).count()});
  }
  return out;
}

}  // namespace toruscalc
