#ifndef GSPLINE_POLYNOMIAL_RING_HPP
#define GSPLINE_POLYNOMIAL_RING_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gspline/errors.hpp"
#include "gspline/poly_gcd.hpp"
#include "gspline/poly_parser.hpp"
#include "gspline/polynomial.hpp"

namespace gspline {

/// Ring object for ZZ[vars] or QQ[vars].
class PolynomialRing {
 public:
  using element_type = Polynomial;

  explicit PolynomialRing(PolyContextPtr ctx) : ctx_(std::move(ctx)) {
    if (!ctx_) throw DomainError("polynomial ring without a context");
  }
  PolynomialRing(std::vector<std::string> variables, Coefficients coefficients)
      : ctx_(make_context(std::move(variables), coefficients)) {}

  const PolyContextPtr& context() const { return ctx_; }
  const std::vector<std::string>& variables() const { return ctx_->variables; }
  Coefficients coefficients() const { return ctx_->coefficients; }

  Polynomial zero() const { return Polynomial(ctx_); }
  Polynomial one() const { return Polynomial::constant(ctx_, 1); }
  Polynomial from_int(long v) const { return Polynomial::constant(ctx_, v); }
  Polynomial constant(const Rational& c) const { return Polynomial::constant(ctx_, c); }
  Polynomial variable(std::size_t i) const { return Polynomial::variable(ctx_, i); }

  bool is_zero(const Polynomial& a) const { return a.is_zero(); }

  /// Units: nonzero constants over QQ, +-1 over ZZ.
  bool is_unit(const Polynomial& a) const {
    if (a.is_zero() || !a.is_constant()) return false;
    return ctx_->coefficients == Coefficients::Rational || abs(a.leading_coefficient()) == 1;
  }

  Polynomial normalize(const Polynomial& a) const { return detail::unit_normalize(a); }

  bool divides(const Polynomial& a, const Polynomial& b) const {
    if (a.is_zero()) {
      if (b.is_zero()) return true;
      throw DomainError("divides: zero divisor with nonzero dividend");
    }
    return poly_exact_divide(b, a).has_value();
  }

  std::optional<Polynomial> exact_divide(const Polynomial& num, const Polynomial& den) const {
    return poly_exact_divide(num, den);
  }

  Polynomial gcd(const Polynomial& a, const Polynomial& b) const { return poly_gcd(a, b); }

  Polynomial lcm(const Polynomial& a, const Polynomial& b) const {
    if (a.is_zero() || b.is_zero()) throw DomainError("lcm of zero is undefined");
    return normalize(detail::divide_or_throw(a * b, poly_gcd(a, b)));
  }

  std::string format(const Polynomial& a) const { return a.to_string(); }
  Polynomial parse(std::string_view text) const { return parse_polynomial(text, ctx_); }

  std::string name() const {
    std::string s = ctx_->coefficients == Coefficients::Integer ? "ZZ[" : "QQ[";
    for (std::size_t i = 0; i < ctx_->variables.size(); ++i) s += (i ? "," : "") + ctx_->variables[i];
    return s + "]";
  }

  friend bool operator==(const PolynomialRing& a, const PolynomialRing& b) { return *a.ctx_ == *b.ctx_; }

 private:
  PolyContextPtr ctx_;
};

}  // namespace gspline

#endif  // GSPLINE_POLYNOMIAL_RING_HPP
