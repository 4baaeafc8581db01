#ifndef GSPLINE_POLY_PARSER_HPP
#define GSPLINE_POLY_PARSER_HPP

// Recursive-descent parser for edge-label expressions.
//
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' natural)?
//   base   := literal | variable | '(' expr ')'
//   literal:= digits ('/' digits)?
//
// Juxtaposition ("2x") is not multiplication. Every error carries the
// character offset where parsing stopped.

#include <cctype>
#include <string>
#include <string_view>

#include "gspline/errors.hpp"
#include "gspline/polynomial.hpp"

namespace gspline {

namespace detail {

class PolyParser {
 public:
  PolyParser(std::string_view text, PolyContextPtr ctx) : text_(text), ctx_(std::move(ctx)) {}

  Polynomial parse() {
    skip();
    if (pos_ == text_.size()) throw ParseError("empty input", pos_);
    Polynomial p = expr();
    skip();
    if (pos_ != text_.size()) throw ParseError(std::string("unexpected character '") + text_[pos_] + "'", pos_);
    return p;
  }

 private:
  static constexpr unsigned kMaxExponent = 4096;

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    Polynomial sum = term();
    if (negate) sum = -sum;
    for (;;) {
      if (accept('+')) sum += term();
      else if (accept('-')) sum -= term();
      else return sum;
    }
  }

  Polynomial term() {
    Polynomial product = factor();
    while (accept('*')) product *= factor();
    return product;
  }

  Polynomial factor() {
    Polynomial b = base();
    if (accept('^')) {
      skip();
      if (pos_ < text_.size() && text_[pos_] == '-') throw ParseError("negative exponent", pos_);
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ == start) throw ParseError("expected exponent", start);
      if (pos_ - start > 4 || std::stoul(std::string(text_.substr(start, pos_ - start))) > kMaxExponent)
        throw ParseError("exponent too large", start);
      b = b.pow(static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
    }
    return b;
  }

  Polynomial base() {
    skip();
    if (pos_ == text_.size()) throw ParseError("unexpected end of input", pos_);
    char c = text_[pos_];
    if (c == '(') {
      std::size_t open = pos_++;
      Polynomial inner = expr();
      if (!accept(')')) throw ParseError(pos_ == text_.size() ? "unclosed '(' opened at " + std::to_string(open)
                                                              : "expected ')'",
                                         pos_);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return literal();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return variable();
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  Polynomial literal() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    Rational value{Integer(std::string(text_.substr(start, pos_ - start)), 10)};
    if (pos_ < text_.size() && text_[pos_] == '/') {
      std::size_t den_start = ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ == den_start) throw ParseError("malformed rational literal", den_start);
      Integer den(std::string(text_.substr(den_start, pos_ - den_start)), 10);
      if (den == 0) throw ParseError("zero denominator in rational literal", den_start);
      value = Rational(value.get_num(), den);
      value.canonicalize();
      if (ctx_->coefficients == Coefficients::Integer && value.get_den() != 1)
        throw ParseError("non-integer literal in an integer coefficient ring", start);
    }
    if (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      throw ParseError("malformed literal (implicit multiplication is not allowed)", pos_);
    return Polynomial::constant(ctx_, value);
  }

  Polynomial variable() {
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    std::string name(text_.substr(start, pos_ - start));
    auto idx = ctx_->index_of(name);
    if (!idx) throw ParseError("unknown variable '" + name + "'", start);
    return Polynomial::variable(ctx_, *idx);
  }

  std::string_view text_;
  PolyContextPtr ctx_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses `text` into a polynomial of `ctx`.
inline Polynomial parse_polynomial(std::string_view text, const PolyContextPtr& ctx) {
  return detail::PolyParser(text, ctx).parse();
}

inline Polynomial parse_polynomial(std::string_view text, std::vector<std::string> variables,
                                   Coefficients coefficients) {
  return parse_polynomial(text, make_context(std::move(variables), coefficients));
}

}  // namespace gspline

#endif  // GSPLINE_POLY_PARSER_HPP
