#ifndef FROBLAB_PARSE_HPP
#define FROBLAB_PARSE_HPP

#include <cctype>
#include <string>

#include "froblab/skew.hpp"

namespace froblab {

// ---------------------------------------------------------------------------
// Expression parser for skew polynomials:
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' uint)?
//   atom   := uint | 'x' | 't' | 'w' | 'F' | '(' expr ')'
// '*' is the (noncommutative) skew product, evaluated left to right; '-'
// folds through characteristic-p negation. Printing a normal form and
// reparsing it returns the same element.
// ---------------------------------------------------------------------------

class SkewParser {
 public:
  SkewParser(std::string text, RingPtr ring) : text_(std::move(text)), ring_(std::move(ring)) {}

  SkewPoly parse() {
    SkewPoly v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail_here("unexpected trailing input");
    return v;
  }

 private:
  SkewPoly expr() {
    SkewPoly acc = term();
    while (true) {
      skip_ws();
      if (peek() == '+') {
        ++pos_;
        acc = acc + term();
      } else if (peek() == '-') {
        ++pos_;
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  SkewPoly term() {
    SkewPoly acc = factor();
    while (true) {
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        acc = acc * factor();
      } else {
        return acc;
      }
    }
  }

  SkewPoly factor() {
    SkewPoly base = atom();
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      if (!std::isdigit(peek())) fail_here("expected an exponent");
      i64 e = read_uint();
      return base.pow(e);
    }
    return base;
  }

  SkewPoly atom() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      ++pos_;
      SkewPoly v = expr();
      skip_ws();
      if (peek() != ')') fail_here("expected ')'");
      ++pos_;
      return v;
    }
    if (std::isdigit(c)) return SkewPoly::constant(ring_->from_int(read_uint()));
    if (c == 'F') {
      ++pos_;
      return SkewPoly::f_power(ring_, 1);
    }
    if (std::isalpha(c)) {
      auto e = ring_->symbol_elem(c);
      if (!e)
        throw Error(errc::unknown_symbol, std::string("symbol '") + c + "' is not available in " +
                                              ring_->describe() + " (position " +
                                              std::to_string(pos_) + ")");
      ++pos_;
      return SkewPoly::constant(*e);
    }
    fail_here(c == '\0' ? "unexpected end of input" : "unexpected character");
  }

  i64 read_uint() {
    std::size_t start = pos_;
    i64 v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > (i64{1} << 40)) fail_at(start, "number too large");
      ++pos_;
    }
    return v;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  [[noreturn]] void fail_here(const std::string& what) { fail_at(pos_, what); }
  [[noreturn]] void fail_at(std::size_t at, const std::string& what) {
    throw Error(errc::syntax_error, what + " at position " + std::to_string(at) + " in \"" + text_ + "\"");
  }

  std::string text_;
  std::size_t pos_ = 0;
  RingPtr ring_;
};

inline SkewPoly parse_skew_expr(const std::string& text, const RingPtr& ring) {
  return SkewParser(text, ring).parse();
}

// parse an expression that must be a ring element (F-degree zero)
inline RingElem parse_ring_elem(const std::string& text, const RingPtr& ring) {
  SkewPoly v = parse_skew_expr(text, ring);
  require(v.degree() < FDegree::of(1), errc::invalid_params,
          "expected a base ring element, got F-degree " + v.degree().to_string());
  return v.coeff(0);
}

}  // namespace froblab

#endif  // FROBLAB_PARSE_HPP
