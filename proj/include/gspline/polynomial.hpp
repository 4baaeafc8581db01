#ifndef GSPLINE_POLYNOMIAL_HPP
#define GSPLINE_POLYNOMIAL_HPP

// Sparse multivariate polynomials over ZZ or QQ.
//
// Coefficients are always stored as mpq_class; a polynomial whose context says
// Coefficients::Integer keeps every coefficient integral. Terms are kept in a
// map ordered graded-lexicographically (descending) with respect to the
// declared variable order, so the first term is the leading term.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <cctype>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gspline/errors.hpp"
#include "gspline/ring.hpp"

namespace gspline {

enum class Coefficients { Integer, Rational };

struct PolyContext {
  std::vector<std::string> variables;
  Coefficients coefficients = Coefficients::Rational;

  bool operator==(const PolyContext&) const = default;

  std::optional<std::size_t> index_of(std::string_view name) const {
    auto it = std::find(variables.begin(), variables.end(), name);
    if (it == variables.end()) return std::nullopt;
    return static_cast<std::size_t>(it - variables.begin());
  }
};

using PolyContextPtr = std::shared_ptr<const PolyContext>;

inline PolyContextPtr make_context(std::vector<std::string> variables,
                                   Coefficients coefficients = Coefficients::Rational) {
  for (std::size_t i = 0; i < variables.size(); ++i) {
    const std::string& v = variables[i];
    bool ok = !v.empty() && (std::isalpha(static_cast<unsigned char>(v[0])) || v[0] == '_');
    for (char ch : v) ok = ok && (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_');
    if (!ok) throw DomainError("invalid variable name '" + v + "'");
    for (std::size_t j = 0; j < i; ++j)
      if (variables[i] == variables[j]) throw DomainError("duplicate variable '" + variables[i] + "'");
  }
  return std::make_shared<const PolyContext>(PolyContext{std::move(variables), coefficients});
}

using Exponents = std::vector<unsigned>;

inline unsigned total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0u); }

/// Strict "greater than" in graded lex order: higher total degree first, ties
/// broken lexicographically in declaration order.
struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const {
    unsigned da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return a > b;
  }
};

class Polynomial {
 public:
  using TermMap = std::map<Exponents, Rational, GrlexGreater>;

  /// The zero polynomial of `ctx`.
  explicit Polynomial(PolyContextPtr ctx) : ctx_(std::move(ctx)) {
    if (!ctx_) throw DomainError("polynomial without a context");
  }

  static Polynomial constant(PolyContextPtr ctx, const Rational& c) {
    Polynomial p(std::move(ctx));
    p.add_term(Exponents(p.num_vars(), 0), c);
    return p;
  }

  static Polynomial variable(PolyContextPtr ctx, std::size_t index) {
    Polynomial p(std::move(ctx));
    if (index >= p.num_vars()) throw DomainError("variable index out of range");
    Exponents e(p.num_vars(), 0);
    e[index] = 1;
    p.add_term(e, 1);
    return p;
  }

  static Polynomial monomial(PolyContextPtr ctx, Exponents e, const Rational& c) {
    Polynomial p(std::move(ctx));
    p.add_term(e, c);
    return p;
  }

  const PolyContextPtr& context() const { return ctx_; }
  std::size_t num_vars() const { return ctx_->variables.size(); }
  bool integer_coefficients() const { return ctx_->coefficients == Coefficients::Integer; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
  }

  /// Total degree; -1 for the zero polynomial.
  int degree() const { return is_zero() ? -1 : static_cast<int>(total_degree(terms_.begin()->first)); }

  unsigned degree_in(std::size_t var) const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
  }

  const Exponents& leading_exponents() const {
    if (is_zero()) throw DomainError("leading term of the zero polynomial");
    return terms_.begin()->first;
  }
  const Rational& leading_coefficient() const {
    if (is_zero()) throw DomainError("leading coefficient of the zero polynomial");
    return terms_.begin()->second;
  }

  Rational constant_term() const {
    auto it = terms_.find(Exponents(num_vars(), 0));
    return it == terms_.end() ? Rational(0) : it->second;
  }

  Rational coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// Adds c * x^e in place, dropping the term if it cancels.
  void add_term(const Exponents& e, const Rational& c) {
    if (e.size() != num_vars()) throw DimensionError("exponent vector has the wrong length");
    if (sgn(c) == 0) return;
    if (integer_coefficients() && c.get_den() != 1)
      throw DomainError("non-integer coefficient " + c.get_str() + " in an integer polynomial ring");
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  Polynomial operator-() const {
    Polynomial r(*this);
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  Polynomial& operator*=(const Polynomial& o) {
    *this = *this * o;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_compatible(b);
    Polynomial r(a.ctx_);
    Exponents e(a.num_vars());
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    }
    return r;
  }

  Polynomial scaled(const Rational& s) const {
    Polynomial r(ctx_);
    if (sgn(s) == 0) return r;
    for (const auto& [e, c] : terms_) r.add_term(e, c * s);
    return r;
  }

  Polynomial pow(unsigned k) const {
    Polynomial result = constant(ctx_, 1);
    Polynomial base = *this;
    while (k) {
      if (k & 1u) result *= base;
      k >>= 1u;
      if (k) base *= base;
    }
    return result;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return *a.ctx_ == *b.ctx_ && a.terms_ == b.terms_;
  }

  /// Deterministic text: grlex-descending terms, explicit '*' and '^'.
  std::string to_string() const;

  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

  void check_compatible(const Polynomial& o) const {
    if (ctx_ != o.ctx_ && !(*ctx_ == *o.ctx_))
      throw RingMismatch("polynomials belong to different rings");
  }

 private:
  PolyContextPtr ctx_;
  TermMap terms_;
};

inline std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    bool negative = sgn(c) < 0;
    Rational mag = abs(c);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += ctx_->variables[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.get_str() + "*" + mono;
    }
  }
  return out;
}

/// Exact division under graded-lex leading terms. Returns q with den * q == num
/// or nullopt when no such q exists in the polynomial ring (over ZZ the
/// quotient must also have integer coefficients).
inline std::optional<Polynomial> poly_exact_divide(const Polynomial& num, const Polynomial& den) {
  num.check_compatible(den);
  if (den.is_zero()) throw DomainError("polynomial division by zero");
  Polynomial quotient(num.context());
  if (num.is_zero()) return quotient;

  // Division happens over QQ; integrality of the quotient is checked last.
  PolyContextPtr rat_ctx =
      num.integer_coefficients()
          ? std::make_shared<const PolyContext>(PolyContext{num.context()->variables, Coefficients::Rational})
          : num.context();
  Polynomial rem(rat_ctx);
  for (const auto& [e, c] : num.terms()) rem.add_term(e, c);
  Polynomial q(rat_ctx);
  const Exponents& lead_den = den.leading_exponents();
  const Rational& lc_den = den.leading_coefficient();
  const std::size_t nv = num.num_vars();
  Exponents shift(nv);

  while (!rem.is_zero()) {
    const Exponents& lead = rem.leading_exponents();
    for (std::size_t i = 0; i < nv; ++i) {
      if (lead[i] < lead_den[i]) return std::nullopt;
      shift[i] = lead[i] - lead_den[i];
    }
    Rational factor = rem.leading_coefficient() / lc_den;
    q.add_term(shift, factor);
    Exponents e(nv);
    for (const auto& [ed, cd] : den.terms()) {
      for (std::size_t i = 0; i < nv; ++i) e[i] = ed[i] + shift[i];
      rem.add_term(e, -factor * cd);
    }
  }
  for (const auto& [e, c] : q.terms()) {
    if (num.integer_coefficients() && c.get_den() != 1) return std::nullopt;
    quotient.add_term(e, c);
  }
  return quotient;
}

/// Evaluates p at the given point; `values[i]` is assigned to variable i.
inline Rational evaluate(const Polynomial& p, const std::vector<Rational>& values) {
  if (values.size() != p.num_vars()) throw DimensionError("evaluation point has the wrong length");
  Rational sum = 0;
  for (const auto& [e, c] : p.terms()) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (unsigned k = 0; k < e[i]; ++k) term *= values[i];
    }
    sum += term;
  }
  return sum;
}

/// Evaluates p with variables assigned by name. Every variable must be assigned.
inline Rational poly_substitute(const Polynomial& p, const std::map<std::string, Rational>& assignments) {
  const auto& vars = p.context()->variables;
  std::vector<Rational> values;
  values.reserve(vars.size());
  for (const auto& v : vars) {
    auto it = assignments.find(v);
    if (it == assignments.end()) throw DomainError("no value assigned to variable '" + v + "'");
    values.push_back(it->second);
  }
  return evaluate(p, values);
}

}  // namespace gspline

#endif  // GSPLINE_POLYNOMIAL_HPP
