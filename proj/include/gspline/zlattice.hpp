#ifndef GSPLINE_ZLATTICE_HPP
#define GSPLINE_ZLATTICE_HPP

// Integer splines as a lattice.
//
// f is a spline iff E f = D t for some integer t, where E is the signed
// incidence matrix (edge k = (i, j) gives +1 at i, -1 at j) and D is the
// diagonal of edge labels. The kernel of [E | -D] projected to its first n
// coordinates is exactly the spline module; the projection is injective
// because every label is nonzero. The HNF of that projection is the flow-up
// class basis with minimal (positive) leading terms.

#include <cstddef>
#include <optional>
#include <vector>

#include <json.hpp>

#include "gspline/errors.hpp"
#include "gspline/graph.hpp"
#include "gspline/hnf.hpp"
#include "gspline/matrix.hpp"
#include "gspline/ring.hpp"
#include "gspline/spline.hpp"

namespace gspline {

/// The m x (n + m) block matrix [E | -D].
inline IntegerMatrix spline_constraint_matrix(const LabeledGraph<IntegerRing>& g) {
  const std::size_t n = g.vertex_count(), m = g.edges().size();
  IntegerMatrix a(m, n + m, 0);
  for (std::size_t k = 0; k < m; ++k) {
    const auto& e = g.edges()[k];
    a(k, e.u) += 1;
    a(k, e.v) -= 1;
    a(k, n + k) = -e.label;
  }
  return a;
}

/// n x n matrix whose columns generate the integer spline module.
inline IntegerMatrix spline_lattice_generators(const LabeledGraph<IntegerRing>& g) {
  const std::size_t n = g.vertex_count();
  if (g.edges().empty()) return IntegerMatrix::identity(n, 0, 1);
  auto kernel = integer_kernel(spline_constraint_matrix(g));
  if (kernel.size() != n) throw DomainError("internal: spline kernel has unexpected rank");
  IntegerMatrix gens(n, kernel.size(), 0);
  for (std::size_t j = 0; j < kernel.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) gens(i, j) = kernel[j][i];
  return gens;
}

/// Lower-triangular flow-up class basis: column k lies in flow-up class k and
/// its leading term diagonal[k] generates the ideal of leading terms of that
/// class.
struct HnfBasis {
  IntegerMatrix columns;
  std::vector<Integer> diagonal;

  std::size_t size() const { return diagonal.size(); }
  Spline<IntegerRing> column(std::size_t k) const { return columns.column(k); }

  std::vector<Spline<IntegerRing>> splines() const { return columns.columns(); }

  /// Product of the diagonal, the determinant of the basis matrix.
  Integer determinant() const {
    Integer d = 1;
    for (const auto& l : diagonal) d *= l;
    return d;
  }

  nlohmann::json to_json() const {
    nlohmann::json cols = nlohmann::json::array(), diag = nlohmann::json::array();
    for (std::size_t k = 0; k < size(); ++k) {
      nlohmann::json col = nlohmann::json::array();
      for (std::size_t i = 0; i < columns.rows(); ++i) col.push_back(columns(i, k).get_str());
      cols.push_back(col);
      diag.push_back(diagonal[k].get_str());
    }
    return {{"columns", cols}, {"diagonal", diag}, {"determinant", determinant().get_str()}};
  }
};

inline HnfBasis integer_flow_up_basis(const LabeledGraph<IntegerRing>& g) {
  HnfResult res = hermite_normal_form(spline_lattice_generators(g));
  const std::size_t n = g.vertex_count();
  if (res.rank() != n) throw DomainError("internal: spline lattice is not of full rank");
  HnfBasis basis{IntegerMatrix(n, n, 0), {}};
  for (std::size_t k = 0; k < n; ++k) {
    if (res.pivot_rows[k] != k) throw DomainError("internal: HNF pivot off the diagonal");
    for (std::size_t i = 0; i < n; ++i) basis.columns(i, k) = res.hnf(i, k);
    basis.diagonal.push_back(res.hnf(k, k));
  }
  return basis;
}

/// Integer coordinates of `candidate` in the basis, by forward substitution
/// down the triangular matrix; nullopt when some pivot step is not divisible
/// (the candidate is not in the spline lattice).
inline std::optional<std::vector<Integer>> lattice_membership(const HnfBasis& basis,
                                                              const Spline<IntegerRing>& candidate) {
  const std::size_t n = basis.size();
  if (candidate.size() != n) throw DimensionError("candidate length does not match the basis");
  std::vector<Integer> coords(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    Integer residual = candidate[k];
    for (std::size_t j = 0; j < k; ++j) residual -= coords[j] * basis.columns(k, j);
    if (mpz_divisible_p(residual.get_mpz_t(), basis.diagonal[k].get_mpz_t()) == 0) return std::nullopt;
    mpz_divexact(coords[k].get_mpz_t(), residual.get_mpz_t(), basis.diagonal[k].get_mpz_t());
  }
  return coords;
}

}  // namespace gspline

#endif  // GSPLINE_ZLATTICE_HPP
