#ifndef GSPLINE_LINEAR_SOLVE_HPP
#define GSPLINE_LINEAR_SOLVE_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "gspline/errors.hpp"
#include "gspline/ring.hpp"

namespace gspline {

/// A x = b over QQ, stored as sparse rows of (column, coefficient).
struct RationalSystem {
  std::size_t unknowns = 0;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> rows;
  std::vector<Rational> rhs;

  void add_row(std::vector<std::pair<std::size_t, Rational>> row, Rational value) {
    rows.push_back(std::move(row));
    rhs.push_back(std::move(value));
  }
};

/// Gauss-Jordan elimination with exact rationals. Returns one solution (free
/// unknowns set to zero) or nullopt when the system is inconsistent.
inline std::optional<std::vector<Rational>> solve_rational_system(const RationalSystem& sys) {
  const std::size_t n = sys.unknowns;
  std::vector<std::vector<Rational>> a;
  a.reserve(sys.rows.size());
  for (std::size_t r = 0; r < sys.rows.size(); ++r) {
    std::vector<Rational> row(n + 1, 0);
    for (const auto& [c, v] : sys.rows[r]) {
      if (c >= n) throw DimensionError("system row references an unknown out of range");
      row[c] += v;
    }
    row[n] = sys.rhs[r];
    a.push_back(std::move(row));
  }

  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < n && rank < a.size(); ++c) {
    std::size_t p = rank;
    while (p < a.size() && sgn(a[p][c]) == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[rank]);
    Rational inv = 1 / a[rank][c];
    for (std::size_t j = c; j <= n; ++j) a[rank][j] *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == rank || sgn(a[i][c]) == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = c; j <= n; ++j)
        if (sgn(a[rank][j]) != 0) a[i][j] -= f * a[rank][j];
    }
    pivot_col.push_back(c);
    ++rank;
  }
  for (std::size_t i = rank; i < a.size(); ++i)
    if (sgn(a[i][n]) != 0) return std::nullopt;

  std::vector<Rational> x(n, 0);
  for (std::size_t i = 0; i < rank; ++i) x[pivot_col[i]] = a[i][n];
  return x;
}

}  // namespace gspline

#endif  // GSPLINE_LINEAR_SOLVE_HPP
