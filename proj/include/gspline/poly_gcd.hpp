#ifndef GSPLINE_POLY_GCD_HPP
#define GSPLINE_POLY_GCD_HPP

// Multivariate gcd by recursion on the number of variables.
//
// A polynomial is viewed as univariate in its highest-indexed variable with
// coefficients in the ring of the remaining variables. The gcd is
// gcd(contents) * pp(last nonzero subresultant), where the subresultant
// remainder sequence keeps coefficient growth polynomial in the degree.

#include <optional>
#include <utility>
#include <vector>

#include "gspline/errors.hpp"
#include "gspline/polynomial.hpp"
#include "gspline/ring.hpp"

namespace gspline {

namespace detail {

// Coefficients of p as a polynomial in `var`: result[d] is free of `var`.
inline std::vector<Polynomial> split_by(const Polynomial& p, std::size_t var) {
  std::vector<Polynomial> out(p.degree_in(var) + 1, Polynomial(p.context()));
  for (const auto& [e, c] : p.terms()) {
    Exponents rest = e;
    rest[var] = 0;
    out[e[var]].add_term(rest, c);
  }
  return out;
}

inline Polynomial join_by(const std::vector<Polynomial>& coeffs, std::size_t var, const PolyContextPtr& ctx) {
  Polynomial p(ctx);
  for (std::size_t d = 0; d < coeffs.size(); ++d) {
    for (const auto& [e, c] : coeffs[d].terms()) {
      Exponents full = e;
      full[var] = static_cast<unsigned>(d);
      p.add_term(full, c);
    }
  }
  return p;
}

using UPoly = std::vector<Polynomial>;

inline void trim(UPoly& u) {
  while (!u.empty() && u.back().is_zero()) u.pop_back();
}

inline Polynomial divide_or_throw(const Polynomial& num, const Polynomial& den) {
  auto q = poly_exact_divide(num, den);
  if (!q) throw DomainError("internal: inexact division in gcd computation");
  return *std::move(q);
}

// lc(B)^(deg A - deg B + 1) * A mod B, computed without fractions.
inline UPoly pseudo_remainder(UPoly a, const UPoly& b) {
  const std::size_t db = b.size() - 1;
  const Polynomial& lb = b.back();
  std::size_t exponent = a.size() - b.size() + 1;
  while (!a.empty() && a.size() - 1 >= db) {
    Polynomial lr = a.back();
    std::size_t shift = a.size() - 1 - db;
    for (auto& c : a) c *= lb;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= lr * b[i];
    trim(a);
    --exponent;
  }
  if (exponent > 0 && !a.empty()) {
    Polynomial scale = lb.pow(static_cast<unsigned>(exponent));
    for (auto& c : a) c *= scale;
  }
  return a;
}

inline Polynomial gcd_recursive(const Polynomial& a, const Polynomial& b);

inline Polynomial unit_normalize(const Polynomial& p) {
  if (p.is_zero()) return p;
  const Rational& lc = p.leading_coefficient();
  if (p.integer_coefficients()) return sgn(lc) < 0 ? -p : p;
  return p.scaled(Rational(1) / lc);
}

inline Polynomial content_of(const UPoly& u) {
  Polynomial g = u.front();
  for (std::size_t i = 1; i < u.size(); ++i) {
    if (u[i].is_zero()) continue;
    g = g.is_zero() ? unit_normalize(u[i]) : gcd_recursive(g, u[i]);
    if (g.is_constant() && !g.is_zero() && (!g.integer_coefficients() || g.leading_coefficient() == 1)) break;
  }
  return unit_normalize(g);
}

inline UPoly divide_all(const UPoly& u, const Polynomial& d) {
  UPoly out;
  out.reserve(u.size());
  for (const auto& c : u) out.push_back(divide_or_throw(c, d));
  return out;
}

// Subresultant PRS on primitive inputs; returns the last nonzero remainder.
inline UPoly subresultant_last(UPoly a, UPoly b, const PolyContextPtr& ctx) {
  if (a.size() < b.size()) std::swap(a, b);
  Polynomial g = Polynomial::constant(ctx, 1);
  Polynomial h = Polynomial::constant(ctx, 1);
  for (;;) {
    const std::size_t delta = a.size() - b.size();
    UPoly r = pseudo_remainder(a, b);
    if (r.empty()) return b;
    if (r.size() == 1) return UPoly{Polynomial::constant(ctx, 1)};
    a = std::move(b);
    Polynomial divisor = g * h.pow(static_cast<unsigned>(delta));
    b = divide_all(r, divisor);
    g = a.back();
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      h = divide_or_throw(g.pow(static_cast<unsigned>(delta)), h.pow(static_cast<unsigned>(delta - 1)));
    }
  }
}

inline std::optional<std::size_t> top_variable(const Polynomial& p) {
  std::optional<std::size_t> top;
  for (const auto& [e, c] : p.terms())
    for (std::size_t i = e.size(); i-- > 0;)
      if (e[i] > 0) {
        if (!top || i > *top) top = i;
        break;
      }
  return top;
}

inline Polynomial gcd_recursive(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return unit_normalize(b);
  if (b.is_zero()) return unit_normalize(a);
  const PolyContextPtr& ctx = a.context();

  auto ta = top_variable(a), tb = top_variable(b);
  if (!ta && !tb) {
    if (!a.integer_coefficients()) return Polynomial::constant(ctx, 1);
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.leading_coefficient().get_num_mpz_t(), b.leading_coefficient().get_num_mpz_t());
    return Polynomial::constant(ctx, Rational(g));
  }
  std::size_t var = std::max(ta.value_or(0), tb.value_or(0));

  UPoly ua = split_by(a, var), ub = split_by(b, var);
  if (ua.size() == 1) return gcd_recursive(a, content_of(ub));
  if (ub.size() == 1) return gcd_recursive(content_of(ua), b);

  Polynomial ca = content_of(ua), cb = content_of(ub);
  Polynomial d = gcd_recursive(ca, cb);
  UPoly last = subresultant_last(divide_all(ua, ca), divide_all(ub, cb), ctx);
  UPoly prim = divide_all(last, content_of(last));
  return unit_normalize(d * join_by(prim, var, ctx));
}

}  // namespace detail

/// Normalized gcd: monic over QQ, positive leading coefficient over ZZ.
inline Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
  a.check_compatible(b);
  if (a.is_zero() && b.is_zero()) throw DomainError("gcd(0, 0) is undefined");
  return detail::gcd_recursive(a, b);
}

}  // namespace gspline

#endif  // GSPLINE_POLY_GCD_HPP
