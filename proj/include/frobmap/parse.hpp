#pragma once

#include <cctype>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "frobmap/errors.hpp"
#include "frobmap/polynomial.hpp"
#include "frobmap/ring.hpp"

namespace frobmap {
namespace detail {

struct PolyToken {
  enum Kind { Int, Ident, Plus, Minus, Star, Caret, LParen, RParen, End };
  Kind kind;
  std::string text;
  int line;
  int column;
};

class PolyLexer {
 public:
  PolyLexer(const std::string& src, int line, int column)
      : src_(src), line_(line), column_(column) {}

  PolyToken next() {
    while (pos_ < src_.size() &&
           std::isspace(static_cast<unsigned char>(src_[pos_])))
      advance();
    if (pos_ >= src_.size()) return {PolyToken::End, "", line_, column_};
    int line = line_, col = column_;
    char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string text;
      while (pos_ < src_.size() &&
             std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        text += src_[pos_];
        advance();
      }
      return {PolyToken::Int, std::move(text), line, col};
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string text;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
              src_[pos_] == '_')) {
        text += src_[pos_];
        advance();
      }
      return {PolyToken::Ident, std::move(text), line, col};
    }
    advance();
    switch (c) {
      case '+': return {PolyToken::Plus, "+", line, col};
      case '-': return {PolyToken::Minus, "-", line, col};
      case '*': return {PolyToken::Star, "*", line, col};
      case '^': return {PolyToken::Caret, "^", line, col};
      case '(': return {PolyToken::LParen, "(", line, col};
      case ')': return {PolyToken::RParen, ")", line, col};
      default:
        throw ParseError("unexpected character '" + std::string(1, c) + "'",
                         line, col);
    }
  }

 private:
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  const std::string& src_;
  std::size_t pos_ = 0;
  int line_;
  int column_;
};

// expr   := term (('+'|'-') term)*
// term   := factor ('*' factor)*
// factor := '-' factor | primary ('^' integer)?
// primary := integer | variable | '(' expr ')'
class PolyParser {
 public:
  PolyParser(RingContextPtr ring, const std::string& src, int line, int column)
      : ring_(std::move(ring)), lexer_(src, line, column) {
    tok_ = lexer_.next();
  }

  Polynomial parse() {
    Polynomial f = expr();
    if (tok_.kind != PolyToken::End)
      throw ParseError("unexpected '" + tok_.text + "'", tok_.line,
                       tok_.column);
    return f;
  }

 private:
  Polynomial expr() {
    Polynomial f = term();
    while (tok_.kind == PolyToken::Plus || tok_.kind == PolyToken::Minus) {
      bool minus = tok_.kind == PolyToken::Minus;
      eat();
      Polynomial g = term();
      f = minus ? f.sub(g) : f.add(g);
    }
    return f;
  }

  Polynomial term() {
    Polynomial f = factor();
    while (tok_.kind == PolyToken::Star) {
      eat();
      f = f.mul(factor());
    }
    return f;
  }

  Polynomial factor() {
    if (tok_.kind == PolyToken::Minus) {
      eat();
      return factor().neg();
    }
    Polynomial base = primary();
    if (tok_.kind == PolyToken::Caret) {
      eat();
      if (tok_.kind != PolyToken::Int)
        throw ParseError("expected integer exponent", tok_.line, tok_.column);
      std::int64_t k = parse_int(tok_);
      eat();
      base = power(base, k);
    }
    return base;
  }

  Polynomial primary() {
    switch (tok_.kind) {
      case PolyToken::Int: {
        std::int64_t v = parse_int(tok_);
        eat();
        return Polynomial::constant(ring_, v);
      }
      case PolyToken::Ident: {
        int i = ring_->variable_index(tok_.text);
        if (i < 0)
          throw ParseError("unknown variable '" + tok_.text + "'", tok_.line,
                           tok_.column);
        eat();
        return Polynomial::variable(ring_, i);
      }
      case PolyToken::LParen: {
        eat();
        Polynomial f = expr();
        if (tok_.kind != PolyToken::RParen)
          throw ParseError("expected ')'", tok_.line, tok_.column);
        eat();
        return f;
      }
      default:
        throw ParseError("expected a polynomial term, found '" + tok_.text +
                             "'",
                         tok_.line, tok_.column);
    }
  }

  Polynomial power(const Polynomial& base, std::int64_t k) {
    if (k == 0) return Polynomial::constant(ring_, 1);
    if (base.is_single_term()) {
      const Term& t = base.terms()[0];
      FieldElement c = FieldElement::one();
      FieldElement b = t.coeff;
      std::int64_t e = k;
      std::int64_t p = ring_->characteristic();
      while (e > 0) {
        if (e & 1) c = c.mul(b, p);
        b = b.mul(b, p);
        e >>= 1;
      }
      return Polynomial::from_monomial(ring_, t.mono.scaled(k), 1).scaled(c);
    }
    Polynomial acc = Polynomial::constant(ring_, 1);
    Polynomial b = base;
    std::int64_t e = k;
    while (e > 0) {
      if (e & 1) acc = acc.mul(b);
      b = b.mul(b);
      e >>= 1;
      if (e > 0 && b.num_terms() == 0) break;
    }
    return acc;
  }

  std::int64_t parse_int(const PolyToken& t) {
    std::int64_t v = 0;
    for (char c : t.text) {
      if (__builtin_mul_overflow(v, std::int64_t{10}, &v) ||
          __builtin_add_overflow(v, std::int64_t{c - '0'}, &v))
        throw ParseError("integer literal too large", t.line, t.column);
    }
    return v;
  }

  void eat() { tok_ = lexer_.next(); }

  RingContextPtr ring_;
  PolyLexer lexer_;
  PolyToken tok_;
};

}  // namespace detail

// Parses one polynomial expression.  line/column seed the positions reported
// in errors, so callers embedding expressions in larger files get accurate
// locations.
inline Polynomial parse_polynomial(RingContextPtr ring, const std::string& src,
                                   int line = 1, int column = 1) {
  return detail::PolyParser(std::move(ring), src, line, column).parse();
}

}  // namespace frobmap
