#include "toruscalc/presentation.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

namespace toruscalc {

Presentation::Presentation(std::vector<Generator> generators,
                           std::vector<Word> relators)
    : generators_(std::move(generators)) {
  std::set<std::string> seen;
  for (const auto& g : generators_) {
    if (!seen.insert(g.name).second) {
      throw std::invalid_argument("duplicate generator '" + g.name + "'");
    }
  }
  for (auto& r : relators) {
    if (r.is_identity()) {
      continue;
    }
    for (const auto& l : r.letters()) {
      if (!seen.count(l.gen.name)) {
        throw std::invalid_argument("relator uses unknown generator '" +
                                    l.gen.name + "'");
      }
    }
    relators_.push_back(std::move(r));
  }
}

std::optional<std::size_t> Presentation::generator_index(const Generator& g) const {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i] == g) {
      return i;
    }
  }
  return std::nullopt;
}

IntMatrix relation_matrix(const Presentation& p) {
  IntMatrix m(p.relators().size(), p.generators().size());
  for (std::size_t r = 0; r < p.relators().size(); ++r) {
    for (const auto& l : p.relators()[r].letters()) {
      m.at(r, *p.generator_index(l.gen)) += l.exp;
    }
  }
  return m;
}

AbelianInvariants abelianization(const Presentation& p) {
  return cokernel_invariants(relation_matrix(p));
}

Presentation parse_presentation(std::string_view text) {
  auto gens_pos = text.find("gens:");
  auto rels_pos = text.find("rels:");
  if (gens_pos == std::string_view::npos) {
    throw std::invalid_argument("presentation text missing 'gens:'");
  }
  if (rels_pos == std::string_view::npos) {
    throw std::invalid_argument("presentation text missing 'rels:'");
  }
  if (rels_pos < gens_pos) {
    throw std::invalid_argument("'rels:' must follow 'gens:'");
  }
  std::string_view gens_part =
      text.substr(gens_pos + 5, rels_pos - (gens_pos + 5));
  std::vector<Generator> gens;
  std::size_t at = 0;
  while (at <= gens_part.size()) {
    std::size_t end = gens_part.find(',', at);
    if (end == std::string_view::npos) {
      end = gens_part.size();
    }
    std::string name(gens_part.substr(at, end - at));
    name.erase(std::remove_if(name.begin(), name.end(),
                              [](unsigned char c) { return std::isspace(c); }),
               name.end());
    if (!name.empty()) {
      gens.push_back(Generator{name});
    }
    if (end == gens_part.size()) break;
    at = end + 1;
  }

  std::vector<Word> rels;
  std::string_view rels_part = text.substr(rels_pos + 5);
  at = 0;
  while (at <= rels_part.size()) {
    std::size_t end = rels_part.find(';', at);
    if (end == std::string_view::npos) {
      end = rels_part.size();
    }
    std::string_view one = rels_part.substr(at, end - at);
    bool blank = std::all_of(one.begin(), one.end(), [](unsigned char c) {
      return std::isspace(c);
    });
    if (!blank) {
      rels.push_back(parse_word(one, gens));
    }
    if (end == rels_part.size()) break;
    at = end + 1;
  }
  return Presentation(std::move(gens), std::move(rels));
}

std::string to_string(const Presentation& p) {
  std::string out = "gens: ";
  for (std::size_t i = 0; i < p.generators().size(); ++i) {
    if (i) out += ',';
    out += p.generators()[i].name;
  }
  out += "\nrels: ";
  for (std::size_t i = 0; i < p.relators().size(); ++i) {
    if (i) out += "; ";
    out += to_string(p.relators()[i]);
  }
  return out;
}

}  // namespace toruscalc
