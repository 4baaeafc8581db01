#ifndef GSPLINE_RING_ELEMENT_HPP
#define GSPLINE_RING_ELEMENT_HPP

// A dynamically typed ring element for code that only learns the active ring
// at runtime. The template algorithms never need this; it exists for callers
// that mix values from several sources and want mismatches reported instead
// of silently coerced.

#include <string>
#include <variant>

#include "gspline/errors.hpp"
#include "gspline/polynomial_ring.hpp"
#include "gspline/ring.hpp"

namespace gspline {

using RingElement = std::variant<Integer, Rational, Polynomial>;

namespace detail {

template <class F>
RingElement same_ring_binary(const RingElement& a, const RingElement& b, F&& f) {
  if (a.index() != b.index()) throw RingMismatch("operands belong to different rings");
  return std::visit(
      [&](const auto& x) -> RingElement {
        using T = std::decay_t<decltype(x)>;
        return f(x, std::get<T>(b));
      },
      a);
}

inline IntegerRing ring_of(const Integer&) { return {}; }
inline RationalRing ring_of(const Rational&) { return {}; }
inline PolynomialRing ring_of(const Polynomial& p) { return PolynomialRing(p.context()); }

}  // namespace detail

inline RingElement ring_add(const RingElement& a, const RingElement& b) {
  return detail::same_ring_binary(a, b, [](const auto& x, const auto& y) -> RingElement {
    using T = std::decay_t<decltype(x)>;
    return T(x + y);
  });
}

inline RingElement ring_sub(const RingElement& a, const RingElement& b) {
  return detail::same_ring_binary(a, b, [](const auto& x, const auto& y) -> RingElement {
    using T = std::decay_t<decltype(x)>;
    return T(x - y);
  });
}

inline RingElement ring_mul(const RingElement& a, const RingElement& b) {
  return detail::same_ring_binary(a, b, [](const auto& x, const auto& y) -> RingElement {
    using T = std::decay_t<decltype(x)>;
    return T(x * y);
  });
}

inline RingElement ring_gcd(const RingElement& a, const RingElement& b) {
  return detail::same_ring_binary(a, b, [](const auto& x, const auto& y) -> RingElement {
    return detail::ring_of(x).gcd(x, y);
  });
}

inline RingElement ring_lcm(const RingElement& a, const RingElement& b) {
  return detail::same_ring_binary(a, b, [](const auto& x, const auto& y) -> RingElement {
    return detail::ring_of(x).lcm(x, y);
  });
}

inline bool divides(const RingElement& a, const RingElement& b) {
  if (a.index() != b.index()) throw RingMismatch("operands belong to different rings");
  return std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        return detail::ring_of(x).divides(x, std::get<T>(b));
      },
      a);
}

inline bool is_unit(const RingElement& a) {
  return std::visit([](const auto& x) { return detail::ring_of(x).is_unit(x); }, a);
}

inline RingElement normalize(const RingElement& a) {
  return std::visit([](const auto& x) -> RingElement { return detail::ring_of(x).normalize(x); }, a);
}

inline std::string to_string(const RingElement& a) {
  return std::visit([](const auto& x) { return detail::ring_of(x).format(x); }, a);
}

}  // namespace gspline

#endif  // GSPLINE_RING_ELEMENT_HPP
