#ifndef GSPLINE_HNF_HPP
#define GSPLINE_HNF_HPP

// Column-style Hermite normal form over ZZ.
//
// H = M * U with U unimodular. H is in lower column echelon form: the pivot of
// column c sits in row pivot_rows[c], rows above it are zero in that column,
// pivots are positive and the entries to the left of a pivot (same row) lie
// in [0, pivot). Zero columns trail.

#include <cstddef>
#include <vector>

#include "gspline/matrix.hpp"
#include "gspline/ring.hpp"

namespace gspline {

struct HnfResult {
  IntegerMatrix hnf;
  IntegerMatrix transform;
  std::vector<std::size_t> pivot_rows;

  std::size_t rank() const { return pivot_rows.size(); }
};

namespace detail {

inline void column_axpy(IntegerMatrix& m, std::size_t dst, const Integer& factor, std::size_t src) {
  if (sgn(factor) == 0) return;
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, dst) -= factor * m(r, src);
}

inline void negate_column(IntegerMatrix& m, std::size_t c) {
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, c) = -m(r, c);
}

}  // namespace detail

inline HnfResult hermite_normal_form(const IntegerMatrix& m) {
  IntegerMatrix h = m;
  IntegerMatrix u = IntegerMatrix::identity(m.cols(), 0, 1);
  std::vector<std::size_t> pivots;
  std::size_t c = 0;

  for (std::size_t r = 0; r < h.rows() && c < h.cols(); ++r) {
    // Euclid on row r across columns c.., always pivoting on the smallest
    // nonzero magnitude so entries stay near the row gcd.
    for (;;) {
      std::size_t best = h.cols();
      for (std::size_t j = c; j < h.cols(); ++j) {
        if (sgn(h(r, j)) == 0) continue;
        if (best == h.cols() || mpz_cmpabs(h(r, j).get_mpz_t(), h(r, best).get_mpz_t()) < 0) best = j;
      }
      if (best == h.cols()) break;
      h.swap_columns(c, best);
      u.swap_columns(c, best);
      bool done = true;
      for (std::size_t j = c + 1; j < h.cols(); ++j) {
        if (sgn(h(r, j)) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), h(r, j).get_mpz_t(), h(r, c).get_mpz_t());
        detail::column_axpy(h, j, q, c);
        detail::column_axpy(u, j, q, c);
        if (sgn(h(r, j)) != 0) done = false;
      }
      if (done) break;
    }
    if (sgn(h(r, c)) == 0) continue;  // no pivot in this row
    if (sgn(h(r, c)) < 0) {
      detail::negate_column(h, c);
      detail::negate_column(u, c);
    }
    for (std::size_t j = 0; j < c; ++j) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), h(r, j).get_mpz_t(), h(r, c).get_mpz_t());
      detail::column_axpy(h, j, q, c);
      detail::column_axpy(u, j, q, c);
    }
    pivots.push_back(r);
    ++c;
  }
  return {std::move(h), std::move(u), std::move(pivots)};
}

/// A basis of the integer kernel {x : M x = 0}, as columns.
inline std::vector<std::vector<Integer>> integer_kernel(const IntegerMatrix& m) {
  HnfResult res = hermite_normal_form(m);
  std::vector<std::vector<Integer>> basis;
  for (std::size_t j = res.rank(); j < m.cols(); ++j) basis.push_back(res.transform.column(j));
  return basis;
}

}  // namespace gspline

#endif  // GSPLINE_HNF_HPP
