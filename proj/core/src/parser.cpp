#include <cctype>
#include <string>
#include <vector>

#include "modal/formula.hpp"

// Recursive-descent parser for the concrete grammar:
//   variables  [a-z][a-z0-9_]*        keywords: box dia true
//   ~  ->  <->  &  |  box/[]  dia/<>  true  ( )
//   precedence  ~,box,dia  >  &  >  |  >  ->  >  <->
//   -> and <-> associate to the right, & and | to the left.
// Sugar (true, &, |, <->) is eliminated while parsing.

namespace modal {
namespace {

enum class Tok { LParen, RParen, Not, And, Or, Impl, Iff, Box, Dia, True, Ident, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    std::size_t start = i;
    switch (c) {
      case '(': out.push_back({Tok::LParen, "(", start}); ++i; continue;
      case ')': out.push_back({Tok::RParen, ")", start}); ++i; continue;
      case '~': out.push_back({Tok::Not, "~", start}); ++i; continue;
      case '&': out.push_back({Tok::And, "&", start}); ++i; continue;
      case '|': out.push_back({Tok::Or, "|", start}); ++i; continue;
      case '-':
        if (i + 1 < s.size() && s[i + 1] == '>') {
          out.push_back({Tok::Impl, "->", start});
          i += 2;
          continue;
        }
        throw UnknownSymbolError("stray '-'", start);
      case '<':
        if (i + 2 < s.size() && s[i + 1] == '-' && s[i + 2] == '>') {
          out.push_back({Tok::Iff, "<->", start});
          i += 3;
          continue;
        }
        if (i + 1 < s.size() && s[i + 1] == '>') {
          out.push_back({Tok::Dia, "<>", start});
          i += 2;
          continue;
        }
        throw UnknownSymbolError("stray '<'", start);
      case '[':
        if (i + 1 < s.size() && s[i + 1] == ']') {
          out.push_back({Tok::Box, "[]", start});
          i += 2;
          continue;
        }
        throw UnknownSymbolError("stray '['", start);
      default:
        break;
    }
    if (c >= 'a' && c <= 'z') {
      std::size_t j = i + 1;
      while (j < s.size() &&
             ((s[j] >= 'a' && s[j] <= 'z') || (s[j] >= '0' && s[j] <= '9') || s[j] == '_'))
        ++j;
      std::string word(s.substr(i, j - i));
      i = j;
      if (word == "box")
        out.push_back({Tok::Box, word, start});
      else if (word == "dia")
        out.push_back({Tok::Dia, word, start});
      else if (word == "true")
        out.push_back({Tok::True, word, start});
      else
        out.push_back({Tok::Ident, word, start});
      continue;
    }
    throw UnknownSymbolError(std::string("unknown symbol '") + c + "'", start);
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(lex(text)) {}

  Formula run() {
    Formula f = iff();
    expect(Tok::End, "end of input");
    return f;
  }

 private:
  const Token& peek() const { return toks_[i_]; }
  Token take() { return toks_[i_++]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++i_;
    return true;
  }
  void expect(Tok k, const char* what) {
    if (!accept(k))
      throw SyntaxError(std::string("expected ") + what + ", found '" + peek().text + "'",
                        peek().pos);
  }

  Formula iff() {
    Formula a = imp();
    if (accept(Tok::Iff)) return make_iff(std::move(a), iff());
    return a;
  }

  Formula imp() {
    Formula a = disj();
    if (accept(Tok::Impl)) return Formula::impl(std::move(a), imp());
    return a;
  }

  Formula disj() {
    Formula a = conj();
    while (accept(Tok::Or)) a = make_or(std::move(a), conj());
    return a;
  }

  Formula conj() {
    Formula a = unary();
    while (accept(Tok::And)) a = make_and(std::move(a), unary());
    return a;
  }

  Formula unary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Not: ++i_; return Formula::neg(unary());
      case Tok::Box: ++i_; return Formula::box(unary());
      case Tok::Dia: ++i_; return Formula::dia(unary());
      default: return atom();
    }
  }

  Formula atom() {
    Token t = take();
    switch (t.kind) {
      case Tok::True: return make_top();
      case Tok::Ident: return Formula::var(t.text);
      case Tok::LParen: {
        Formula f = iff();
        expect(Tok::RParen, "')'");
        return f;
      }
      default:
        throw SyntaxError("expected a formula, found '" + t.text + "'", t.pos);
    }
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
};

}  // namespace

Formula parse_surface(std::string_view text) { return Parser(text).run(); }

}  // namespace modal
