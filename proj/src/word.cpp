#include "toruscalc/word.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace toruscalc {

namespace {

void push_reduced(std::vector<Letter>& out, Letter l) {
  if (!out.empty() && out.back().gen == l.gen && out.back().exp == -l.exp) {
    out.pop_back();
  } else {
    out.push_back(std::move(l));
  }
}

}  // namespace

Word::Word(Generator g, int exp) {
  if (exp != 1 && exp != -1) {
    throw std::invalid_argument("letter exponent must be +1 or -1");
  }
  letters_.push_back(Letter{std::move(g), exp});
}

Word Word::reduced(std::vector<Letter> letters) {
  Word w;
  w.letters_.reserve(letters.size());
  for (auto& l : letters) {
    if (l.exp != 1 && l.exp != -1) {
      throw std::invalid_argument("letter exponent must be +1 or -1");
    }
    push_reduced(w.letters_, std::move(l));
  }
  return w;
}

Word Word::inverse() const {
  Word w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    w.letters_.push_back(Letter{it->gen, -it->exp});
  }
  return w;
}

Word operator*(const Word& lhs, const Word& rhs) {
  Word w;
  w.letters_ = lhs.letters_;
  w.letters_.reserve(lhs.letters_.size() + rhs.letters_.size());
  for (const auto& l : rhs.letters_) {
    push_reduced(w.letters_, l);
  }
  return w;
}

Word reduce(const Word& w) { return w; }

Word commutator(const Word& u, const Word& v) {
  return u * v * u.inverse() * v.inverse();
}

Word power(const Word& w, long long k) {
  if (k < 0) {
    return power(w.inverse(), -k);
  }
  std::vector<Letter> letters;
  letters.reserve(static_cast<std::size_t>(k) * w.length());
  for (long long i = 0; i < k; ++i) {
    letters.insert(letters.end(), w.letters().begin(), w.letters().end());
  }
  return Word::reduced(std::move(letters));
}

std::string to_string(const Word& w) {
  if (w.is_identity()) {
    return "1";
  }
  std::string out;
  for (const auto& l : w.letters()) {
    if (!out.empty()) {
      out += ' ';
    }
    out += l.gen.name;
    if (l.exp < 0) {
      out += "^-1";
    }
  }
  return out;
}

namespace {

// Recursive-descent parser over the word grammar.
class WordParser {
 public:
  WordParser(std::string_view text, const std::vector<Generator>& known)
      : text_(text), known_(known) {}

  Word parse() {
    Word w = parse_sequence();
    skip_ws();
    if (pos_ != text_.size()) {
      fail("unexpected character");
    }
    return w;
  }

 private:
  Word parse_sequence() {
    Word w;
    while (true) {
      skip_ws();
      if (pos_ == text_.size() || text_[pos_] == ',' || text_[pos_] == ']' ||
          text_[pos_] == ')') {
        return w;
      }
      w = w * parse_item();
    }
  }

  Word parse_item() {
    Word atom = parse_atom();
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      return power(atom, parse_integer());
    }
    return atom;
  }

  Word parse_atom() {
    skip_ws();
    if (pos_ == text_.size()) {
      fail("unexpected end of input");
    }
    char c = text_[pos_];
    if (c == '[') {
      ++pos_;
      Word u = parse_sequence();
      expect(',');
      Word v = parse_sequence();
      expect(']');
      return commutator(u, v);
    }
    if (c == '(') {
      ++pos_;
      Word w = parse_sequence();
      expect(')');
      return w;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      return parse_name_run();
    }
    fail("expected generator, '[' or '('");
  }

  Word parse_name_run() {
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '_')) {
      ++pos_;
    }
    std::string run(text_.substr(start, pos_ - start));
    if (known_.empty()) {
      return Word(Generator{run});
    }
    // Greedy longest-match segmentation against the known generator list.
    Word w;
    std::size_t at = 0;
    while (at < run.size()) {
      std::size_t best = 0;
      for (const auto& g : known_) {
        if (g.name.size() > best && run.compare(at, g.name.size(), g.name) == 0) {
          best = g.name.size();
        }
      }
      if (best == 0) {
        fail("unknown generator in '" + run + "'");
      }
      w = w * Word(Generator{run.substr(at, best)});
      at += best;
    }
    return w;
  }

  long long parse_integer() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      ++pos_;
    }
    std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (pos_ == digits) {
      fail("expected integer exponent");
    }
    return std::stoll(std::string(text_.substr(start, pos_ - start)));
  }

  void expect(char c) {
    skip_ws();
    if (pos_ == text_.size() || text_[pos_] != c) {
      fail(std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("word parse error at position " +
                                std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  const std::vector<Generator>& known_;
  std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(std::string_view text, const std::vector<Generator>& known) {
  // "1" denotes the identity, matching to_string.
  std::string_view trimmed = text;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front()))) {
    trimmed.remove_prefix(1);
  }
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) {
    trimmed.remove_suffix(1);
  }
  if (trimmed == "1") {
    return Word();
  }
  return WordParser(text, known).parse();
}

}  // namespace toruscalc
