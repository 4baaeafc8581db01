#ifndef GSPLINE_DETERMINANT_HPP
#define GSPLINE_DETERMINANT_HPP

#include <cstddef>

#include "gspline/errors.hpp"
#include "gspline/matrix.hpp"
#include "gspline/ring.hpp"

namespace gspline {

/// Fraction-free (Bareiss) determinant. Every division is exact in any
/// integral domain, and intermediate entries are minors of the input, so this
/// works unchanged for integers and polynomials.
template <Ring R>
typename R::element_type bareiss_determinant(const R& ring, Matrix<typename R::element_type> m) {
  using T = typename R::element_type;
  const std::size_t n = m.rows();
  if (n != m.cols()) throw DimensionError("determinant of a non-square matrix");
  if (n == 0) return ring.one();
  bool negate = false;
  T previous = ring.one();
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (ring.is_zero(m(k, k))) {
      std::size_t swap = k + 1;
      while (swap < n && ring.is_zero(m(swap, k))) ++swap;
      if (swap == n) return ring.zero();
      m.swap_rows(k, swap);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        T num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        auto q = ring.exact_divide(num, previous);
        if (!q) throw DomainError("internal: inexact Bareiss step");
        m(i, j) = *q;
      }
      m(i, k) = ring.zero();
    }
    previous = m(k, k);
  }
  T det = m(n - 1, n - 1);
  return negate ? T(ring.zero() - det) : det;
}

}  // namespace gspline

#endif  // GSPLINE_DETERMINANT_HPP
