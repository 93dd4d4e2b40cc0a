#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace toruscalc {

/// A named free-group generator.  Generators are identified by name alone.
struct Generator {
  std::string name;

  friend bool operator==(const Generator&, const Generator&) = default;
  friend auto operator<=>(const Generator&, const Generator&) = default;
};

/// One letter of a word: a generator raised to +1 or -1.
struct Letter {
  Generator gen;
  int exp = +1;

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// A freely reduced word in named generators.
///
/// The reduced form is the canonical form: no letter is adjacent to its own
/// inverse, so structural equality is word equality in the free group.  The
/// empty word is the identity.  Instances are immutable after construction
/// and safe to share across threads.
class Word {
 public:
  Word() = default;
  explicit Word(Generator g, int exp = +1);

  /// Builds a word from raw letters, applying free reduction.
  static Word reduced(std::vector<Letter> letters);

  const std::vector<Letter>& letters() const { return letters_; }
  bool is_identity() const { return letters_.empty(); }
  std::size_t length() const { return letters_.size(); }

  Word inverse() const;

  friend Word operator*(const Word& lhs, const Word& rhs);
  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

/// Free reduction; the identity map on canonical forms (kept as the naming
/// anchor for the canonicalization applied by `Word::reduced`).
Word reduce(const Word& w);

/// u v u^-1 v^-1, reduced.
Word commutator(const Word& u, const Word& v);

/// k-fold reduced power; negative k is power(w.inverse(), -k), k = 0 is
/// the identity.
Word power(const Word& w, long long k);

/// Renders a word in the text form accepted by `parse_word`: letters
/// separated by spaces, inverses suffixed `^-1`.  The identity renders as "1".
std::string to_string(const Word& w);

/// Parses the word grammar used throughout the CLI:
///
///   word  := item*
///   item  := atom ('^' integer)?
///   atom  := name | '[' word ',' word ']' | '(' word ')'
///
/// `[u,v]` is commutator sugar.  Names are [A-Za-z_][A-Za-z0-9_]*.  When
/// `known` is nonempty, maximal alphanumeric runs are segmented into known
/// generator names by greedy longest match, so `a1b1` parses as a1 b1.
/// Throws std::invalid_argument on malformed input.
Word parse_word(std::string_view text, const std::vector<Generator>& known = {});

}  // namespace toruscalc
