#include "toruscalc/coset.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "toruscalc/word.hpp"

namespace toruscalc {

namespace {

constexpr std::int32_t kUndef = -1;

// A relator compiled to table columns: letter (g, +1) -> 2*index(g),
// (g, -1) -> 2*index(g)+1.  Column c's inverse is c^1.
using Row = std::vector<std::int32_t>;

Row compile_relator(const Word& w, const Presentation& p) {
  Row cols;
  cols.reserve(w.length());
  for (const Letter& l : w.letters()) {
    auto idx = p.generator_index(l.gen);
    // Presentation guarantees every relator letter is a known generator.
    cols.push_back(static_cast<std::int32_t>(2 * *idx + (l.exp < 0 ? 1 : 0)));
  }
  return cols;
}

// Cyclic reduction: a relator and any cyclic permutation of it define the
// same normal closure, and cyclically reduced relators scan faster.
Row cyclic_reduce(Row r) {
  while (r.size() >= 2 && r.front() == (r.back() ^ 1)) {
    r.erase(r.begin());
    r.pop_back();
  }
  return r;
}

struct TableFull {};  // control-flow signal, caught by the driver loop

class Enumerator {
 public:
  Enumerator(const Presentation& p, std::size_t budget)
      : ncols_(2 * p.generators().size()), budget_(budget) {
    if (budget < 1) throw std::invalid_argument("coset budget must be >= 1");
    if (budget >
        static_cast<std::size_t>(std::numeric_limits<std::int32_t>::max()))
      throw std::invalid_argument("coset budget exceeds table index range");
    for (const Word& w : p.relators()) {
      Row r = cyclic_reduce(compile_relator(w, p));
      if (r.empty()) continue;
      if (std::find(relators_.begin(), relators_.end(), r) == relators_.end())
        relators_.push_back(std::move(r));
    }
  }

  EnumerationOutcome run() {
    new_row();  // coset 0 represents the subgroup itself
    std::size_t cursor = 0;
    for (;;) {
      try {
        while (cursor < nrows()) {
          std::int32_t alpha = static_cast<std::int32_t>(cursor);
          if (!alive(alpha) || scanned_[cursor]) {
            ++cursor;
            continue;
          }
          for (const Row& rel : relators_) {
            scan(alpha, rel, /*fill=*/true);
            if (!alive(alpha)) break;
          }
          if (alive(alpha)) fill_row(alpha);
          scanned_[cursor] = true;
          ++cursor;
        }
        validate();
        return {EnumerationOutcome::Status::completed, nalive_, total_defined_,
                budget_};
      } catch (const TableFull&) {
        lookahead();
        // Stop when nothing was reclaimed, or when repeated
        // reclaim-and-refill rounds have burned through far more
        // definitions than the table can hold.  The second condition
        // bounds the run: every round makes at least one definition.
        if (nalive_ == nrows() || total_defined_ >= 50 * budget_) {
          return {EnumerationOutcome::Status::budget_exceeded, 0,
                  total_defined_, budget_};
        }
        compact();
        cursor = 0;
      }
    }
  }

 private:
  std::size_t nrows() const { return p_.size(); }

  bool alive(std::int32_t a) const { return p_[a] == a; }

  std::int32_t& entry(std::int32_t row, std::int32_t col) {
    return tab_[static_cast<std::size_t>(row) * ncols_ + col];
  }

  std::int32_t new_row() {
    if (nrows() >= budget_) throw TableFull{};
    std::int32_t idx = static_cast<std::int32_t>(nrows());
    tab_.resize(tab_.size() + ncols_, kUndef);
    p_.push_back(idx);
    scanned_.push_back(0);
    ++nalive_;
    ++total_defined_;
    return idx;
  }

  std::int32_t rep(std::int32_t a) {
    std::int32_t r = a;
    while (p_[r] != r) r = p_[r];
    while (p_[a] != r) {  // path compression
      std::int32_t next = p_[a];
      p_[a] = r;
      a = next;
    }
    return r;
  }

  void merge(std::int32_t a, std::int32_t b) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    p_[b] = a;
    --nalive_;
    queue_.push_back(b);
  }

  // Coincidence processing: dead rows keep their entries until each is
  // dequeued and redistributed onto the surviving representative.
  void coincidence(std::int32_t a, std::int32_t b) {
    merge(a, b);
    while (qhead_ < queue_.size()) {
      std::int32_t gamma = queue_[qhead_++];
      for (std::int32_t x = 0; x < static_cast<std::int32_t>(ncols_); ++x) {
        std::int32_t delta = entry(gamma, x);
        if (delta == kUndef) continue;
        entry(delta, x ^ 1) = kUndef;
        std::int32_t mu = rep(gamma);
        std::int32_t nu = rep(delta);
        if (entry(mu, x) != kUndef) {
          merge(nu, entry(mu, x));
        } else if (entry(nu, x ^ 1) != kUndef) {
          merge(mu, entry(nu, x ^ 1));
        } else {
          entry(mu, x) = nu;
          entry(nu, x ^ 1) = mu;
        }
      }
    }
    queue_.clear();
    qhead_ = 0;
  }

  // Trace relator `rel` starting and ending at `alpha`.  With fill on,
  // every gap of length >= 2 defines a new coset; a gap of length 1 is a
  // deduction; a mismatch at the join is a coincidence.
  void scan(std::int32_t alpha, const Row& rel, bool fill) {
    std::int32_t f = alpha;
    std::int32_t b = alpha;
    std::size_t i = 0;
    std::size_t j = rel.size() - 1;
    for (;;) {
      while (i <= j && entry(f, rel[i]) != kUndef) {
        f = entry(f, rel[i]);
        ++i;
      }
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && entry(b, rel[j] ^ 1) != kUndef) {
        b = entry(b, rel[j] ^ 1);
        if (j == 0) {  // j is unsigned; the relator is fully consumed
          if (f != b) coincidence(f, b);
          return;
        }
        --j;
      }
      if (j < i) {
        if (f != b) coincidence(f, b);
        return;
      }
      if (j == i) {
        entry(f, rel[i]) = b;
        entry(b, rel[i] ^ 1) = f;
        return;
      }
      if (!fill) return;
      std::int32_t delta = new_row();
      entry(f, rel[i]) = delta;
      entry(delta, rel[i] ^ 1) = f;
    }
  }

  void fill_row(std::int32_t alpha) {
    for (std::int32_t x = 0; x < static_cast<std::int32_t>(ncols_); ++x) {
      if (entry(alpha, x) != kUndef) continue;
      std::int32_t delta = new_row();
      entry(alpha, x) = delta;
      entry(delta, x ^ 1) = alpha;
    }
  }

  // Definition-free pass over every live coset, run when the table is
  // full: coincidences found here free rows for compaction.
  void lookahead() {
    for (std::size_t a = 0; a < nrows(); ++a) {
      std::int32_t alpha = static_cast<std::int32_t>(a);
      if (!alive(alpha)) continue;
      for (const Row& rel : relators_) {
        scan(alpha, rel, /*fill=*/false);
        if (!alive(alpha)) break;
      }
    }
  }

  // Renumber live cosets in order, dropping dead rows.  Only called with
  // an empty coincidence queue, so live rows reference live cosets.
  void compact() {
    std::vector<std::int32_t> remap(nrows(), kUndef);
    std::int32_t next = 0;
    for (std::size_t a = 0; a < nrows(); ++a)
      if (alive(static_cast<std::int32_t>(a))) {
        remap[a] = next++;
      }
    std::vector<std::int32_t> tab(static_cast<std::size_t>(next) * ncols_,
                                  kUndef);
    std::vector<std::uint8_t> scanned(static_cast<std::size_t>(next), 0);
    for (std::size_t a = 0; a < nrows(); ++a) {
      std::int32_t alpha = static_cast<std::int32_t>(a);
      if (!alive(alpha)) continue;
      for (std::size_t x = 0; x < ncols_; ++x) {
        std::int32_t d = entry(alpha, static_cast<std::int32_t>(x));
        if (d != kUndef) d = remap[rep(d)];
        tab[static_cast<std::size_t>(remap[a]) * ncols_ + x] = d;
      }
      scanned[remap[a]] = scanned_[a];
    }
    tab_ = std::move(tab);
    scanned_ = std::move(scanned);
    p_.resize(static_cast<std::size_t>(next));
    for (std::int32_t a = 0; a < next; ++a) p_[a] = a;
  }

  // A closed table is returned as a certificate of the group order, so
  // check it outright: every live row complete over live cosets and every
  // relator closing at every live coset.
  void validate() {
    for (std::size_t a = 0; a < nrows(); ++a) {
      std::int32_t alpha = static_cast<std::int32_t>(a);
      if (!alive(alpha)) continue;
      for (std::int32_t x = 0; x < static_cast<std::int32_t>(ncols_); ++x) {
        std::int32_t d = entry(alpha, x);
        if (d == kUndef || !alive(d))
          throw std::logic_error("coset table closed but incomplete");
        if (entry(d, x ^ 1) != alpha)
          throw std::logic_error("coset table inverse mismatch");
      }
      for (const Row& rel : relators_) {
        std::int32_t c = alpha;
        for (std::int32_t x : rel) c = entry(c, x);
        if (c != alpha)
          throw std::logic_error("coset table does not satisfy a relator");
      }
    }
  }

  std::size_t ncols_;
  std::size_t budget_;
  std::vector<Row> relators_;
  std::vector<std::int32_t> tab_;
  std::vector<std::int32_t> p_;
  std::vector<std::uint8_t> scanned_;
  std::vector<std::int32_t> queue_;
  std::size_t qhead_ = 0;
  std::size_t nalive_ = 0;
  std::size_t total_defined_ = 0;
};

}  // namespace

EnumerationOutcome coset_enumerate(const Presentation& p, std::size_t budget) {
  return Enumerator(p, budget).run();
}

std::string to_string(const EnumerationOutcome& o) {
  if (o.completed())
    return "completed: index " + std::to_string(o.index) + " (" +
           std::to_string(o.cosets_defined) + " cosets defined)";
  return "budget exceeded: " + std::to_string(o.cosets_defined) +
         " cosets defined within budget " + std::to_string(o.budget);
}

}  // namespace toruscalc
