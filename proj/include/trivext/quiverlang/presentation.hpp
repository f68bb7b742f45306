#pragma once

#include <cctype>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "trivext/exactla/field.hpp"

namespace trivext::quiver {

/// Parse or validation failure located in the source text (1-based).
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, std::size_t column, const std::string& msg)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        line_(line), column_(column), message_(msg) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

private:
  std::size_t line_, column_;
  std::string message_;
};

struct Arrow {
  std::string name;
  std::size_t source;
  std::size_t target;
};

/// One summand c * w of a relation. The word is stored as written: word.front() is
/// applied last (right-to-left composition, so p*q means first q, then p).
struct Term {
  Elem coefficient;
  std::vector<std::size_t> word;
};

struct Relation {
  std::vector<Term> terms;
  std::size_t source = 0;
  std::size_t target = 0;
  std::size_t length = 0;
  std::size_t line = 0;
};

struct Presentation {
  std::string name;
  std::uint32_t field_prime = Field::default_prime;
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
  std::vector<Relation> relations;
  std::size_t path_length_bound = 32;

  std::size_t vertex_index(const std::string& v) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
      if (vertices[i] == v) return i;
    return npos;
  }
  std::size_t arrow_index(const std::string& a) const {
    for (std::size_t i = 0; i < arrows.size(); ++i)
      if (arrows[i].name == a) return i;
    return npos;
  }
  /// Source of a nonempty right-to-left word: the source of its last letter.
  std::size_t word_source(const std::vector<std::size_t>& w) const { return arrows[w.back()].source; }
  std::size_t word_target(const std::vector<std::size_t>& w) const { return arrows[w.front()].target; }

  std::string word_name(const std::vector<std::size_t>& w) const {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "*" : "") + arrows[w[i]].name;
    return s;
  }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

namespace detail {

enum class Tok { Ident, Int, Sym, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

inline std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    std::size_t l = line, cl = col;
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      bool digits = true;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_' ||
                                 text[j] == '\'')) {
        if (!std::isdigit(static_cast<unsigned char>(text[j]))) digits = false;
        ++j;
      }
      out.push_back({digits ? Tok::Int : Tok::Ident, text.substr(i, j - i), l, cl});
      advance(j - i);
      continue;
    }
    if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      out.push_back({Tok::Sym, "->", l, cl});
      advance(2);
      continue;
    }
    if (std::string("{}:;,*+-").find(c) != std::string::npos) {
      out.push_back({Tok::Sym, std::string(1, c), l, cl});
      advance(1);
      continue;
    }
    if (static_cast<unsigned char>(c) >= 0x80) throw ParseError(l, cl, "non-ASCII character");
    throw ParseError(l, cl, std::string("unexpected character '") + c + "'");
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

class Parser {
public:
  explicit Parser(const std::string& text) : toks_(tokenize(text)) {}

  Presentation parse() {
    Presentation p;
    keyword("quiver");
    p.name = name("quiver name");
    sym("{");
    keyword("field");
    sym(":");
    const Token& f = next();
    if (f.kind != Tok::Ident || f.text.rfind("F_", 0) != 0 || f.text.size() == 2 ||
        f.text.find_first_not_of("0123456789", 2) != std::string::npos)
      throw ParseError(f.line, f.column, "expected field of the form F_<prime>");
    unsigned long long q = std::stoull(f.text.substr(2));
    if (q > 0x7fffffffULL || !Field::is_prime(static_cast<std::uint32_t>(q)))
      throw ParseError(f.line, f.column, "field characteristic must be a prime below 2^31");
    p.field_prime = static_cast<std::uint32_t>(q);
    sym(";");

    keyword("vertices");
    sym(":");
    do {
      const Token& t = peek();
      std::string v = name("vertex name");
      if (p.vertex_index(v) != Presentation::npos)
        throw ParseError(t.line, t.column, "duplicate vertex '" + v + "'");
      p.vertices.push_back(v);
    } while (accept(","));
    sym(";");

    keyword("arrows");
    sym(":");
    // an empty arrow list is accepted for semisimple presentations
    if (!accept(";")) {
      do {
        const Token& t = peek();
        std::string a = ident("arrow name");
        if (p.arrow_index(a) != Presentation::npos)
          throw ParseError(t.line, t.column, "duplicate arrow '" + a + "'");
        sym(":");
        std::size_t s = vertex(p);
        sym("->");
        std::size_t e = vertex(p);
        p.arrows.push_back({a, s, e});
      } while (accept(","));
      sym(";");
    }

    if (peek().kind == Tok::Ident && peek().text == "relations") {
      next();
      sym(":");
      Field field(p.field_prime);
      do p.relations.push_back(relation(p, field));
      while (accept(","));
      sym(";");
    }
    sym("}");
    if (peek().kind != Tok::End) fail(peek(), "unexpected input after presentation");
    return p;
  }

private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] static void fail(const Token& t, const std::string& msg) {
    throw ParseError(t.line, t.column, msg);
  }

  static std::string describe(const Token& t) {
    return t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
  }

  void keyword(const std::string& k) {
    const Token& t = next();
    if (t.kind != Tok::Ident || t.text != k) fail(t, "expected '" + k + "', found " + describe(t));
  }
  void sym(const std::string& s) {
    const Token& t = next();
    if (t.kind != Tok::Sym || t.text != s) fail(t, "expected '" + s + "', found " + describe(t));
  }
  bool accept(const std::string& s) {
    if (peek().kind == Tok::Sym && peek().text == s) {
      next();
      return true;
    }
    return false;
  }
  std::string ident(const std::string& what) {
    const Token& t = next();
    if (t.kind != Tok::Ident) fail(t, "expected " + what + ", found " + describe(t));
    return t.text;
  }
  // vertex names may be numerals, as in the usual 1, 2, ... labelling
  std::string name(const std::string& what) {
    const Token& t = next();
    if (t.kind != Tok::Ident && t.kind != Tok::Int) fail(t, "expected " + what + ", found " + describe(t));
    return t.text;
  }
  std::size_t vertex(const Presentation& p) {
    const Token& t = peek();
    std::string v = name("vertex name");
    std::size_t idx = p.vertex_index(v);
    if (idx == Presentation::npos) fail(t, "undefined vertex '" + v + "'");
    return idx;
  }

  Relation relation(const Presentation& p, const Field& field) {
    Relation r;
    r.line = peek().line;
    const Token& start = peek();
    bool negative = accept("-");
    while (true) {
      const Token& tt = peek();
      Term term = this->term(p, field);
      if (negative) term.coefficient = field.neg(term.coefficient);
      std::size_t s = p.word_source(term.word), e = p.word_target(term.word);
      if (r.terms.empty()) {
        r.source = s;
        r.target = e;
        r.length = term.word.size();
        if (r.length < 2) fail(tt, "relation term '" + p.word_name(term.word) + "' has length < 2");
      } else {
        if (s != r.source || e != r.target)
          fail(tt, "relation terms are not parallel paths");
        if (term.word.size() != r.length)
          fail(tt, "relation terms must all have the same length");
      }
      if (term.coefficient != 0) r.terms.push_back(std::move(term));
      else if (r.terms.empty()) r.terms.push_back(std::move(term));
      if (accept("+")) negative = false;
      else if (accept("-")) negative = true;
      else break;
    }
    // merge repeated words so the relation vector is well defined
    std::vector<Term> merged;
    for (auto& t : r.terms) {
      bool found = false;
      for (auto& m : merged)
        if (m.word == t.word) {
          m.coefficient = field.add(m.coefficient, t.coefficient);
          found = true;
        }
      if (!found) merged.push_back(t);
    }
    std::erase_if(merged, [](const Term& t) { return t.coefficient == 0; });
    if (merged.empty()) fail(start, "relation is zero");
    r.terms = std::move(merged);
    return r;
  }

  Term term(const Presentation& p, const Field& field) {
    Term t{1, {}};
    if (peek().kind == Tok::Int) {
      const Token& c = next();
      unsigned long long v = 0;
      for (char ch : c.text) v = (v * 10 + static_cast<unsigned>(ch - '0')) % field.prime();
      t.coefficient = static_cast<Elem>(v);
      sym("*");
    }
    std::vector<const Token*> where;
    do {
      const Token& a = peek();
      std::string name = ident("arrow name");
      std::size_t idx = p.arrow_index(name);
      if (idx == Presentation::npos) fail(a, "undefined arrow '" + name + "'");
      t.word.push_back(idx);
      where.push_back(&a);
    } while (accept("*"));
    for (std::size_t i = 0; i + 1 < t.word.size(); ++i) {
      const Arrow& left = p.arrows[t.word[i]];
      const Arrow& right = p.arrows[t.word[i + 1]];
      if (left.source != right.target)
        fail(*where[i], "non-composable term: '" + left.name + "' cannot follow '" + right.name + "'");
    }
    return t;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Presentation parse_presentation(const std::string& text) { return detail::Parser(text).parse(); }

}  // namespace trivext::quiver
