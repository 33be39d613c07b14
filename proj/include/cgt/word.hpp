#pragma once

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <string>
#include <vector>

#include "cgt/errors.hpp"

namespace cgt {

// A letter is a signed 1-based generator index: +g means generator g,
// -g its inverse.
using Letter = int;

/// A word in a free group, stored as a flat sequence of signed generator
/// indices. Words remember the size of their ambient alphabet so that
/// operations on words from different presentations can be rejected.
class Word {
 public:
  Word() = default;
  Word(int num_gens, std::vector<Letter> letters)
      : ngens_(num_gens), letters_(std::move(letters)) {
    for (Letter l : letters_) {
      if (l == 0 || std::abs(l) > ngens_)
        throw error("word letter out of range for its alphabet");
    }
  }

  int num_gens() const { return ngens_; }
  int size() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }
  const std::vector<Letter>& letters() const { return letters_; }
  Letter operator[](int i) const { return letters_[static_cast<size_t>(i)]; }

  bool operator==(const Word& o) const {
    return ngens_ == o.ngens_ && letters_ == o.letters_;
  }

 private:
  int ngens_ = 0;
  std::vector<Letter> letters_;
};

/// Removes all adjacent g g^{-1} pairs; the result is the unique reduced
/// word equal to the input in the free group.
inline Word free_reduce(const Word& w) {
  std::vector<Letter> out;
  out.reserve(static_cast<size_t>(w.size()));
  for (Letter l : w.letters()) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return Word(w.num_gens(), std::move(out));
}

/// Freely reduces, then strips matching first/last letters. The result is
/// cyclically reduced and conjugate to the input.
inline Word cyclically_reduce(const Word& w) {
  Word r = free_reduce(w);
  const std::vector<Letter>& ls = r.letters();
  size_t lo = 0, hi = ls.size();
  while (hi - lo >= 2 && ls[lo] == -ls[hi - 1]) {
    ++lo;
    --hi;
  }
  return Word(w.num_gens(), std::vector<Letter>(ls.begin() + static_cast<long>(lo),
                                                ls.begin() + static_cast<long>(hi)));
}

inline Word word_invert(const Word& u) {
  std::vector<Letter> out(u.letters().rbegin(), u.letters().rend());
  for (Letter& l : out) l = -l;
  return Word(u.num_gens(), std::move(out));
}

/// Reduced product of two words over the same alphabet.
inline Word word_multiply(const Word& u, const Word& v) {
  if (u.num_gens() != v.num_gens())
    throw error("cannot multiply words over different generator sets");
  std::vector<Letter> out = u.letters();
  out.insert(out.end(), v.letters().begin(), v.letters().end());
  return free_reduce(Word(u.num_gens(), std::move(out)));
}

inline Word word_pow(const Word& u, int e) {
  Word base = e < 0 ? word_invert(u) : u;
  int n = std::abs(e);
  std::vector<Letter> out;
  out.reserve(static_cast<size_t>(base.size()) * static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    out.insert(out.end(), base.letters().begin(), base.letters().end());
  return free_reduce(Word(u.num_gens(), std::move(out)));
}

/// Generators of a subgroup of an fp-group, as words over the ambient
/// presentation's alphabet.
struct SubgroupSpec {
  std::vector<Word> generators;
};

/// A finite presentation: named generators plus defining relators.
/// Relators are stored cyclically reduced.
class Presentation {
 public:
  Presentation() = default;
  Presentation(std::vector<std::string> generator_names,
               std::vector<Word> relators)
      : names_(std::move(generator_names)) {
    for (const std::string& n : names_) {
      if (n.empty()) throw error("zero-length generator name");
      if (!std::isalpha(static_cast<unsigned char>(n[0])))
        throw error("generator name must start with a letter: '" + n + "'");
      for (const std::string& m : names_) {
        if (&n != &m && n == m)
          throw error("duplicate generator name: '" + n + "'");
      }
    }
    relators_.reserve(relators.size());
    for (const Word& r : relators) {
      if (r.num_gens() != num_generators())
        throw error("relator references a different generator set");
      Word cr = cyclically_reduce(r);
      if (!cr.empty()) relators_.push_back(cr);  // empty relators assert nothing
    }
  }

  int num_generators() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& generator_names() const { return names_; }
  const std::vector<Word>& relators() const { return relators_; }

  /// 1-based index of a named generator, or 0 if unknown.
  int generator_index(const std::string& name) const {
    for (size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return static_cast<int>(i + 1);
    return 0;
  }

 private:
  std::vector<std::string> names_;
  std::vector<Word> relators_;
};

namespace detail {

// Recursive-descent parser for the presentation grammar:
//   presentation = '<' gens '|' relators '>'
//   word         = term { '*' term }
//   term         = factor [ '^' ( signed-integer | factor ) ]
//   factor       = identifier | '(' word ')' | '[' word ',' word ']'
// u^n is an n-fold power, u^v the conjugate v^{-1} u v, and [u,v] the
// commutator u^{-1} v^{-1} u v.
class WordParser {
 public:
  WordParser(const std::string& text, const Presentation& pres)
      : text_(text), pres_(pres) {}

  Word parse_word_all() {
    Word w = parse_word();
    skip_ws();
    if (pos_ != text_.size())
      throw parse_error("unexpected trailing input in word", pos_);
    return w;
  }

  Word parse_word() {
    Word w = parse_term();
    while (true) {
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        w = word_multiply(w, parse_term());
      } else {
        return w;
      }
    }
  }

  size_t pos() const { return pos_; }

 private:
  Word parse_term() {
    Word base = parse_factor();
    skip_ws();
    if (peek() != '^') return base;
    ++pos_;
    skip_ws();
    char c = peek();
    if (c == '-' || c == '+' || std::isdigit(static_cast<unsigned char>(c))) {
      return word_pow(base, parse_int());
    }
    Word conj = parse_factor();  // u^v = v^{-1} u v
    return word_multiply(word_multiply(word_invert(conj), base), conj);
  }

  Word parse_factor() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      ++pos_;
      Word w = parse_word();
      expect(')');
      return w;
    }
    if (c == '[') {
      ++pos_;
      Word u = parse_word();
      expect(',');
      Word v = parse_word();
      expect(']');
      return word_multiply(word_multiply(word_invert(u), word_invert(v)),
                           word_multiply(u, v));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      std::string name = parse_identifier();
      int idx = pres_.generator_index(name);
      if (idx == 0)
        throw parse_error("unknown generator name '" + name + "'", start);
      return Word(pres_.num_generators(), {idx});
    }
    throw parse_error("expected a generator, '(' or '['", pos_);
  }

  std::string parse_identifier() {
    size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '_'))
      ++pos_;
    return text_.substr(start, pos_ - start);
  }

  int parse_int() {
    size_t start = pos_;
    if (peek() == '-' || peek() == '+') ++pos_;
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      throw parse_error("expected an integer exponent", pos_);
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    return std::stoi(text_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c)
      throw parse_error(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  const std::string& text_;
  const Presentation& pres_;
  size_t pos_ = 0;
};

inline std::vector<std::string> split_generator_names(const std::string& s) {
  std::vector<std::string> names;
  size_t i = 0;
  auto skip = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  skip();
  while (i < s.size()) {
    size_t start = i;
    if (!std::isalpha(static_cast<unsigned char>(s[i])))
      throw parse_error("generator name must start with a letter", i);
    while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) ||
                            s[i] == '_'))
      ++i;
    names.push_back(s.substr(start, i - start));
    skip();
    if (i < s.size()) {
      if (s[i] != ',') throw parse_error("expected ',' between generators", i);
      ++i;
      skip();
      if (i == s.size())
        throw parse_error("trailing ',' in generator list", i);
    }
  }
  return names;
}

}  // namespace detail

/// Parses one word over the generators of an existing presentation.
inline Word parse_word(const std::string& text, const Presentation& pres) {
  detail::WordParser p(text, pres);
  return p.parse_word_all();
}

/// Parses a comma-separated list of subgroup generator words.
inline SubgroupSpec parse_subgroup(const std::string& text,
                                   const Presentation& pres) {
  SubgroupSpec spec;
  size_t start = 0;
  int depth = 0;
  auto flush = [&](size_t end) {
    std::string piece = text.substr(start, end - start);
    bool blank = true;
    for (char c : piece)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (!blank) spec.generators.push_back(parse_word(piece, pres));
  };
  for (size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == ',' && depth == 0) {
      flush(i);
      start = i + 1;
    }
  }
  flush(text.size());
  return spec;
}

/// Parses a full presentation `< gens | relators >`.
inline Presentation parse_presentation(const std::string& text) {
  size_t lt = text.find('<');
  size_t bar = text.find('|');
  size_t gt = text.rfind('>');
  if (lt == std::string::npos || gt == std::string::npos || gt < lt)
    throw parse_error("presentation must be enclosed in '<' ... '>'",
                      lt == std::string::npos ? 0 : lt);
  for (size_t i = 0; i < lt; ++i)
    if (!std::isspace(static_cast<unsigned char>(text[i])))
      throw parse_error("unexpected input before '<'", i);
  for (size_t i = gt + 1; i < text.size(); ++i)
    if (!std::isspace(static_cast<unsigned char>(text[i])))
      throw parse_error("unexpected input after '>'", i);

  std::string gens_part, rels_part;
  if (bar != std::string::npos && bar < gt) {
    gens_part = text.substr(lt + 1, bar - lt - 1);
    rels_part = text.substr(bar + 1, gt - bar - 1);
  } else {
    gens_part = text.substr(lt + 1, gt - lt - 1);  // free group, no relators
  }

  Presentation shell(detail::split_generator_names(gens_part), {});

  std::vector<Word> relators;
  size_t start = 0;
  int depth = 0;
  auto flush = [&](size_t end) {
    std::string piece = rels_part.substr(start, end - start);
    bool blank = true;
    for (char c : piece)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (!blank) relators.push_back(parse_word(piece, shell));
  };
  for (size_t i = 0; i < rels_part.size(); ++i) {
    char c = rels_part[i];
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == ',' && depth == 0) {
      flush(i);
      start = i + 1;
    }
  }
  flush(rels_part.size());

  return Presentation(shell.generator_names(), std::move(relators));
}

/// Renders a word using the presentation's generator names, collapsing
/// runs of equal letters into powers. The empty word renders as "1"
/// (parseable only as an absent relator, so callers render it explicitly).
inline std::string word_to_string(const Word& w, const Presentation& pres) {
  if (w.empty()) return "1";
  std::string out;
  const std::vector<Letter>& ls = w.letters();
  size_t i = 0;
  while (i < ls.size()) {
    size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    int run = static_cast<int>(j - i);
    int exp = ls[i] > 0 ? run : -run;
    if (!out.empty()) out += '*';
    out += pres.generator_names()[static_cast<size_t>(std::abs(ls[i]) - 1)];
    if (exp != 1) out += '^' + std::to_string(exp);
    i = j;
  }
  return out;
}

/// Renders a presentation in the same grammar accepted by
/// parse_presentation, so parse/unparse round-trips.
inline std::string presentation_to_string(const Presentation& pres) {
  std::string out = "< ";
  for (size_t i = 0; i < pres.generator_names().size(); ++i) {
    if (i) out += ", ";
    out += pres.generator_names()[i];
  }
  out += " |";
  for (size_t i = 0; i < pres.relators().size(); ++i) {
    out += i ? ", " : " ";
    out += word_to_string(pres.relators()[i], pres);
  }
  out += " >";
  return out;
}

}  // namespace cgt
