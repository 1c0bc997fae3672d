#pragma once

// Group words over a finite generating set, plus finitely presented
// groups and the concrete syntax used everywhere else in the library.
//
// A Word is always freely reduced; the raw-letter entry points reduce on
// construction. Generators are referred to by index into the owning
// presentation's name list.

#include <cctype>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace vdg {

struct Letter {
  std::uint32_t gen = 0;
  std::int8_t sign = 1;  // +1 or -1

  friend bool operator==(const Letter&, const Letter&) = default;
};

inline Letter inverse(Letter l) { return {l.gen, static_cast<std::int8_t>(-l.sign)}; }

class Word {
 public:
  Word() = default;

  // Reduces the given letter sequence (cancels adjacent g g^-1 pairs).
  static Word from_letters(std::vector<Letter> letters) {
    Word w;
    for (Letter l : letters) w.push_reduced(l);
    return w;
  }

  static Word generator(std::uint32_t g, std::int8_t sign = 1) {
    Word w;
    w.letters_.push_back({g, sign});
    return w;
  }

  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }
  const std::vector<Letter>& letters() const { return letters_; }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }

  // Largest generator index used, or nullopt for the empty word.
  std::optional<std::uint32_t> max_generator() const {
    std::optional<std::uint32_t> m;
    for (const Letter& l : letters_)
      if (!m || l.gen > *m) m = l.gen;
    return m;
  }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  friend Word reduce(const std::vector<Letter>&);
  friend Word invert(const Word&);
  friend Word concat(const Word&, const Word&);

  void push_reduced(Letter l) {
    if (!letters_.empty() && letters_.back().gen == l.gen &&
        letters_.back().sign == -l.sign) {
      letters_.pop_back();
    } else {
      letters_.push_back(l);
    }
  }

  std::vector<Letter> letters_;
};

inline Word reduce(const std::vector<Letter>& letters) { return Word::from_letters(letters); }

// Words are kept reduced, so reducing an existing Word is the identity;
// the overload exists so the idempotence property reads naturally.
inline Word reduce(const Word& w) { return w; }

inline Word invert(const Word& w) {
  Word r;
  r.letters_.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
    r.letters_.push_back(inverse(*it));
  return r;
}

inline Word concat(const Word& u, const Word& v) {
  Word r = u;
  for (const Letter& l : v.letters()) r.push_reduced(l);
  return r;
}

inline Word power(const Word& w, long long k) {
  Word base = k < 0 ? invert(w) : w;
  unsigned long long reps = k < 0 ? static_cast<unsigned long long>(-(k + 1)) + 1
                                  : static_cast<unsigned long long>(k);
  Word r;
  for (unsigned long long i = 0; i < reps; ++i) r = concat(r, base);
  return r;
}

class Presentation {
 public:
  Presentation() = default;

  explicit Presentation(std::vector<std::string> generator_names)
      : generator_names_(std::move(generator_names)) {
    for (std::size_t i = 0; i < generator_names_.size(); ++i)
      for (std::size_t j = i + 1; j < generator_names_.size(); ++j)
        if (generator_names_[i] == generator_names_[j])
          throw std::invalid_argument("duplicate generator name: " + generator_names_[i]);
  }

  std::size_t generator_count() const { return generator_names_.size(); }
  const std::vector<std::string>& generator_names() const { return generator_names_; }
  const std::vector<Word>& relators() const { return relators_; }

  std::optional<std::uint32_t> generator_index(std::string_view name) const {
    for (std::uint32_t i = 0; i < generator_names_.size(); ++i)
      if (generator_names_[i] == name) return i;
    return std::nullopt;
  }

  // Empty relators (after reduction) are dropped.
  void add_relator(Word w) {
    if (w.empty()) return;
    if (auto m = w.max_generator(); m && *m >= generator_count())
      throw std::invalid_argument("relator uses generator index out of range");
    relators_.push_back(std::move(w));
  }

  Presentation with_relator(const Word& w) const {
    Presentation p = *this;
    p.add_relator(w);
    return p;
  }

  friend bool operator==(const Presentation&, const Presentation&) = default;

 private:
  std::vector<std::string> generator_names_;
  std::vector<Word> relators_;
};

struct ParseError : std::runtime_error {
  ParseError(std::size_t position, const std::string& what)
      : std::runtime_error("parse error at offset " + std::to_string(position) + ": " + what),
        position(position) {}
  std::size_t position;
};

namespace detail {

// Recursive-descent parser for
//   presentation := "<" names "|" relator-list ">"
//   names        := ident ("," ident)*
//   relator-list := (item ("," item)*)?
//   item         := word ("=" word)?
//   word         := factor ("*" factor)*
//   factor       := (ident | "(" word ")" | "1") ("^" signed-int)?
//   ident        := [A-Za-z][A-Za-z0-9_]*
// Whitespace is insignificant everywhere.
class PresentationParser {
 public:
  explicit PresentationParser(std::string_view text) : text_(text) {}

  Presentation parse() {
    expect('<');
    std::vector<std::string> names;
    names.push_back(parse_ident());
    while (peek() == ',') {
      ++pos_;
      names.push_back(parse_ident());
    }
    Presentation p{std::move(names)};
    expect('|');
    skip_ws();
    if (peek() != '>') {
      p.add_relator(parse_item(p));
      while (peek() == ',') {
        ++pos_;
        p.add_relator(parse_item(p));
      }
    }
    expect('>');
    skip_ws();
    if (pos_ != text_.size()) throw ParseError(pos_, "trailing input after '>'");
    return p;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c) {
    if (peek() != c)
      throw ParseError(pos_, std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string parse_ident() {
    skip_ws();
    if (pos_ >= text_.size() || !std::isalpha(static_cast<unsigned char>(text_[pos_])))
      throw ParseError(pos_, "expected identifier");
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  long long parse_signed_int() {
    skip_ws();
    std::size_t start = pos_;
    bool neg = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      neg = text_[pos_] == '-';
      ++pos_;
    }
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw ParseError(start, "malformed exponent");
    long long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 1'000'000) throw ParseError(start, "exponent out of range");
      ++pos_;
    }
    return neg ? -v : v;
  }

  Word parse_factor(const Presentation& p) {
    skip_ws();
    Word base;
    if (peek() == '(') {
      std::size_t open = pos_;
      ++pos_;
      base = parse_word(p);
      if (peek() != ')') throw ParseError(open, "unbalanced parenthesis");
      ++pos_;
    } else if (peek() == '1') {
      ++pos_;
    } else {
      std::size_t at = pos_;
      std::string name = parse_ident();
      auto idx = p.generator_index(name);
      if (!idx) throw ParseError(at, "unknown generator '" + name + "'");
      base = Word::generator(*idx);
    }
    if (peek() == '^') {
      ++pos_;
      return power(base, parse_signed_int());
    }
    return base;
  }

  Word parse_word(const Presentation& p) {
    Word w = parse_factor(p);
    while (peek() == '*') {
      ++pos_;
      w = concat(w, parse_factor(p));
    }
    return w;
  }

  // An equation u=v is stored as the relator u v^-1 (in that order).
  Word parse_item(const Presentation& p) {
    Word u = parse_word(p);
    if (peek() == '=') {
      ++pos_;
      Word v = parse_word(p);
      return concat(u, invert(v));
    }
    return u;
  }
};

}  // namespace detail

inline Presentation parse_presentation(std::string_view text) {
  return detail::PresentationParser(text).parse();
}

// Canonical printer: runs of equal letters collapse to powers, factors
// joined with '*'. parse_presentation(render(p)) == p.
inline std::string render(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    long long e = static_cast<long long>(j - i) * w[i].sign;
    if (!out.empty()) out += "*";
    out += names.at(w[i].gen);
    if (e != 1) out += "^" + std::to_string(e);
    i = j;
  }
  return out;
}

inline std::string render(const Presentation& p) {
  std::string out = "< ";
  for (std::size_t i = 0; i < p.generator_count(); ++i) {
    if (i) out += ", ";
    out += p.generator_names()[i];
  }
  out += " | ";
  for (std::size_t i = 0; i < p.relators().size(); ++i) {
    if (i) out += ", ";
    out += render(p.relators()[i], p.generator_names());
  }
  out += " >";
  return out;
}

// Per-generator exponent sums; the raw material for abelianization.
inline std::vector<long long> exponent_sums(const Word& w, std::size_t ngens) {
  std::vector<long long> sums(ngens, 0);
  for (const Letter& l : w.letters()) sums.at(l.gen) += l.sign;
  return sums;
}

}  // namespace vdg
