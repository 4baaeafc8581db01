#ifndef GSPLINE_RING_HPP
#define GSPLINE_RING_HPP

// Ring objects for the scalar coefficient rings ZZ and QQ, plus the concept
// every algorithm in the library is written against.
//
// Elements are plain value types with the usual + - * == operators. Anything
// that needs to know which ring an element lives in (identities, divisibility,
// gcd, unit normalization, text I/O) goes through a ring object, so that
// polynomial rings can carry their variable list at runtime.

#include <gmpxx.h>

#include <cctype>
#include <concepts>
#include <optional>
#include <string>
#include <string_view>

#include "gspline/errors.hpp"

namespace gspline {

using Integer = mpz_class;
using Rational = mpq_class;

// clang-format off
template <class R>
concept Ring = requires(const R& ring, const typename R::element_type& a, std::string_view text) {
  typename R::element_type;
  { ring.zero() } -> std::same_as<typename R::element_type>;
  { ring.one() } -> std::same_as<typename R::element_type>;
  { ring.from_int(long{}) } -> std::same_as<typename R::element_type>;
  { ring.is_zero(a) } -> std::same_as<bool>;
  { ring.is_unit(a) } -> std::same_as<bool>;
  { ring.normalize(a) } -> std::same_as<typename R::element_type>;
  { ring.divides(a, a) } -> std::same_as<bool>;
  { ring.exact_divide(a, a) } -> std::same_as<std::optional<typename R::element_type>>;
  { ring.gcd(a, a) } -> std::same_as<typename R::element_type>;
  { ring.lcm(a, a) } -> std::same_as<typename R::element_type>;
  { ring.format(a) } -> std::same_as<std::string>;
  { ring.parse(text) } -> std::same_as<typename R::element_type>;
  { a + a } -> std::convertible_to<typename R::element_type>;
  { a - a } -> std::convertible_to<typename R::element_type>;
  { a * a } -> std::convertible_to<typename R::element_type>;
  { a == a } -> std::convertible_to<bool>;
};
// clang-format on

namespace detail {

inline std::size_t skip_space(std::string_view text, std::size_t pos) {
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  return pos;
}

// Reads [sign] digits starting at `pos`; returns the end offset.
inline std::size_t scan_signed_digits(std::string_view text, std::size_t pos, bool allow_sign) {
  std::size_t start = pos;
  if (allow_sign && pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
  std::size_t digits = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == digits) {
    throw ParseError(text.size() == start ? "empty input" : "malformed integer literal", digits);
  }
  return pos;
}

}  // namespace detail

/// Parses a decimal integer with an optional sign. Surrounding whitespace is
/// allowed; anything else is a ParseError carrying the offending offset.
inline Integer parse_integer(std::string_view text) {
  std::size_t pos = detail::skip_space(text, 0);
  if (pos == text.size()) throw ParseError("empty input", pos);
  std::size_t begin = pos;
  pos = detail::scan_signed_digits(text, pos, true);
  std::string digits(text.substr(begin, pos - begin));
  if (!digits.empty() && digits.front() == '+') digits.erase(0, 1);
  pos = detail::skip_space(text, pos);
  if (pos != text.size()) throw ParseError("unexpected character in integer literal", pos);
  return Integer(digits, 10);
}

/// Parses "p" or "p/q" (q nonzero) into a canonical rational.
inline Rational parse_rational(std::string_view text) {
  std::size_t pos = detail::skip_space(text, 0);
  if (pos == text.size()) throw ParseError("empty input", pos);
  std::size_t begin = pos;
  pos = detail::scan_signed_digits(text, pos, true);
  std::string num(text.substr(begin, pos - begin));
  if (!num.empty() && num.front() == '+') num.erase(0, 1);
  Rational value{Integer(num, 10)};
  if (pos < text.size() && text[pos] == '/') {
    std::size_t den_begin = ++pos;
    pos = detail::scan_signed_digits(text, pos, false);
    Integer den(std::string(text.substr(den_begin, pos - den_begin)), 10);
    if (den == 0) throw ParseError("zero denominator in rational literal", den_begin);
    value = Rational(value.get_num(), den);
    value.canonicalize();
  }
  pos = detail::skip_space(text, pos);
  if (pos != text.size()) throw ParseError("unexpected character in rational literal", pos);
  return value;
}

inline std::string to_string(const Integer& a) { return a.get_str(); }
inline std::string to_string(const Rational& a) { return a.get_str(); }

/// The integers. Units are +1 and -1; the canonical associate is nonnegative.
class IntegerRing {
 public:
  using element_type = Integer;

  Integer zero() const { return 0; }
  Integer one() const { return 1; }
  Integer from_int(long v) const { return v; }

  bool is_zero(const Integer& a) const { return sgn(a) == 0; }
  bool is_unit(const Integer& a) const { return mpz_cmpabs_ui(a.get_mpz_t(), 1) == 0; }
  Integer normalize(const Integer& a) const { return abs(a); }

  /// True iff a | b. divides(0, 0) holds; divides(0, b != 0) is a DomainError.
  bool divides(const Integer& a, const Integer& b) const {
    if (sgn(a) == 0) {
      if (sgn(b) == 0) return true;
      throw DomainError("divides: zero divisor with nonzero dividend");
    }
    return mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t()) != 0;
  }

  /// num / den when den divides num, otherwise nullopt.
  std::optional<Integer> exact_divide(const Integer& num, const Integer& den) const {
    if (sgn(den) == 0) throw DomainError("exact_divide: division by zero");
    if (mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()) == 0) return std::nullopt;
    Integer q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
  }

  Integer gcd(const Integer& a, const Integer& b) const {
    if (sgn(a) == 0 && sgn(b) == 0) throw DomainError("gcd(0, 0) is undefined");
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
  }

  Integer lcm(const Integer& a, const Integer& b) const {
    if (sgn(a) == 0 || sgn(b) == 0) throw DomainError("lcm of zero is undefined");
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
  }

  std::string format(const Integer& a) const { return a.get_str(); }
  Integer parse(std::string_view text) const { return parse_integer(text); }
  std::string name() const { return "ZZ"; }

  bool operator==(const IntegerRing&) const = default;
};

/// The rationals. Every nonzero element is a unit, so gcd of anything nonzero
/// is 1 and every nonzero element normalizes to 1.
class RationalRing {
 public:
  using element_type = Rational;

  Rational zero() const { return 0; }
  Rational one() const { return 1; }
  Rational from_int(long v) const { return v; }

  bool is_zero(const Rational& a) const { return sgn(a) == 0; }
  bool is_unit(const Rational& a) const { return sgn(a) != 0; }
  Rational normalize(const Rational& a) const { return sgn(a) == 0 ? Rational(0) : Rational(1); }

  bool divides(const Rational& a, const Rational& b) const {
    if (sgn(a) == 0) {
      if (sgn(b) == 0) return true;
      throw DomainError("divides: zero divisor with nonzero dividend");
    }
    return true;
  }

  std::optional<Rational> exact_divide(const Rational& num, const Rational& den) const {
    if (sgn(den) == 0) throw DomainError("exact_divide: division by zero");
    return Rational(num / den);
  }

  Rational gcd(const Rational& a, const Rational& b) const {
    if (sgn(a) == 0 && sgn(b) == 0) throw DomainError("gcd(0, 0) is undefined");
    return 1;
  }

  Rational lcm(const Rational& a, const Rational& b) const {
    if (sgn(a) == 0 || sgn(b) == 0) throw DomainError("lcm of zero is undefined");
    return 1;
  }

  std::string format(const Rational& a) const { return a.get_str(); }
  Rational parse(std::string_view text) const { return parse_rational(text); }
  std::string name() const { return "QQ"; }

  bool operator==(const RationalRing&) const = default;
};

}  // namespace gspline

#endif  // GSPLINE_RING_HPP
