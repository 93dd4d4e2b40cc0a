#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "toruscalc/intmat.hpp"
#include "toruscalc/word.hpp"

namespace toruscalc {

/// A finite group presentation: named generators and freely reduced relator
/// words.  Empty relators are dropped on construction; a relator mentioning a
/// generator outside the list is rejected.
class Presentation {
 public:
  Presentation() = default;
  Presentation(std::vector<Generator> generators, std::vector<Word> relators);

  const std::vector<Generator>& generators() const { return generators_; }
  const std::vector<Word>& relators() const { return relators_; }

  std::optional<std::size_t> generator_index(const Generator& g) const;

  friend bool operator==(const Presentation&, const Presentation&) = default;

 private:
  std::vector<Generator> generators_;
  std::vector<Word> relators_;
};

/// Exponent-sum relation matrix: one row per relator, one column per
/// generator.
IntMatrix relation_matrix(const Presentation& p);

/// H_1 of the presented group: Smith-normal-form cokernel of the relation
/// matrix.
AbelianInvariants abelianization(const Presentation& p);

/// Two-part text format:
///   gens: a1,b1,c1,d1
///   rels: [a1,c1]; [b1,c1]; ...
/// The parts may be separated by a newline or run together on one line;
/// relators use the word grammar of parse_word.
Presentation parse_presentation(std::string_view text);
std::string to_string(const Presentation& p);

}  // namespace toruscalc
