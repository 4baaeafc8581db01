#ifndef GSPLINE_BASIS_HPP
#define GSPLINE_BASIS_HPP

// Determinantal basis criteria.
//
// A set of n splines is a basis exactly when its determinant is a unit
// multiple of an invariant Q of the graph. Which Q is available depends on
// the ring and the labels:
//
//   PID_DIAGONAL     over ZZ: product of the minimal leading terms (HNF diagonal).
//   COPRIME_PRODUCT  pairwise coprime labels: product of the labels.
//   LCM_LOWER_BOUND  otherwise: lcm of the labels, which only divides every
//                    determinant. Acceptance is sound; rejection is not, so a
//                    non-matching determinant is UNDECIDED.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <type_traits>
#include <vector>

#include <json.hpp>

#include "gspline/determinant.hpp"
#include "gspline/errors.hpp"
#include "gspline/graph.hpp"
#include "gspline/matrix.hpp"
#include "gspline/polynomial_ring.hpp"
#include "gspline/ring.hpp"
#include "gspline/spline.hpp"
#include "gspline/zlattice.hpp"

namespace gspline {

template <Ring R>
typename R::element_type product_of(const R& ring, const std::vector<typename R::element_type>& values) {
  typename R::element_type p = ring.one();
  for (const auto& v : values) p = p * v;
  return p;
}

template <Ring R>
typename R::element_type lcm_of(const R& ring, const std::vector<typename R::element_type>& values) {
  if (values.empty()) return ring.one();
  typename R::element_type l = ring.normalize(values.front());
  for (std::size_t i = 1; i < values.size(); ++i) l = ring.lcm(l, values[i]);
  return l;
}

template <Ring R>
typename R::element_type gcd_of(const R& ring, const std::vector<typename R::element_type>& values) {
  if (values.empty()) throw DomainError("gcd of an empty list");
  typename R::element_type g = ring.normalize(values.front());
  for (std::size_t i = 1; i < values.size(); ++i) g = ring.gcd(g, values[i]);
  return g;
}

/// gcd of the products that each omit one value. For pairwise coprime values
/// this is a unit.
template <Ring R>
typename R::element_type gcd_of_cofactors(const R& ring, const std::vector<typename R::element_type>& values) {
  std::vector<typename R::element_type> hats;
  for (std::size_t i = 0; i < values.size(); ++i) {
    typename R::element_type p = ring.one();
    for (std::size_t j = 0; j < values.size(); ++j)
      if (j != i) p = p * values[j];
    hats.push_back(p);
  }
  return gcd_of(ring, hats);
}

/// An ordered set of n splines on an n-vertex graph, each verified.
template <Ring R>
class SplineMatrix {
 public:
  using element_type = typename R::element_type;

  SplineMatrix(const LabeledGraph<R>& g, std::vector<Spline<R>> columns)
      : ring_(g.ring()), columns_(std::move(columns)) {
    if (columns_.size() != g.vertex_count())
      throw DimensionError("need " + std::to_string(g.vertex_count()) + " columns, got " +
                           std::to_string(columns_.size()));
    for (std::size_t k = 0; k < columns_.size(); ++k) {
      SplineCheck check = is_spline(g, columns_[k]);
      if (!check) throw DomainError("column " + std::to_string(k + 1) + " is not a spline on the graph");
    }
  }

  const R& ring() const { return ring_; }
  std::size_t size() const { return columns_.size(); }
  const std::vector<Spline<R>>& columns() const { return columns_; }
  Matrix<element_type> matrix() const { return Matrix<element_type>::from_columns(columns_, ring_.zero()); }

 private:
  R ring_;
  std::vector<Spline<R>> columns_;
};

template <Ring R>
typename R::element_type spline_determinant(const SplineMatrix<R>& m) {
  return bareiss_determinant(m.ring(), m.matrix());
}

enum class QProvenance { kPidDiagonal, kCoprimeProduct, kLcmLowerBound };

inline const char* provenance_name(QProvenance p) {
  switch (p) {
    case QProvenance::kPidDiagonal: return "PID_DIAGONAL";
    case QProvenance::kCoprimeProduct: return "COPRIME_PRODUCT";
    case QProvenance::kLcmLowerBound: return "LCM_LOWER_BOUND";
  }
  return "UNKNOWN";
}

template <Ring R>
struct QInvariant {
  typename R::element_type value;
  QProvenance provenance;

  /// Whether det == unit * Q decides basis-hood in both directions.
  bool is_exact() const { return provenance != QProvenance::kLcmLowerBound; }
};

/// lcm of the edge labels: divides the determinant of every n-subset.
template <Ring R>
QInvariant<R> lcm_bound(const LabeledGraph<R>& g) {
  return {lcm_of(g.ring(), g.labels()), QProvenance::kLcmLowerBound};
}

template <Ring R>
QInvariant<R> compute_q(const LabeledGraph<R>& g) {
  const R& ring = g.ring();
  if constexpr (std::is_same_v<R, IntegerRing>) {
    return {integer_flow_up_basis(g).determinant(), QProvenance::kPidDiagonal};
  } else {
    if (pairwise_coprime_labels(g)) return {ring.normalize(product_of(ring, g.labels())), QProvenance::kCoprimeProduct};
    return lcm_bound(g);
  }
}

enum class Verdict { kAccepted, kRejected, kUndecided };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kAccepted: return "ACCEPTED";
    case Verdict::kRejected: return "REJECTED";
    case Verdict::kUndecided: return "UNDECIDED";
  }
  return "UNKNOWN";
}

template <Ring R>
struct BasisVerdict {
  Verdict verdict;
  typename R::element_type determinant;
  std::optional<typename R::element_type> unit_factor;  // set when accepted
  std::string reason;

  bool accepted() const { return verdict == Verdict::kAccepted; }
};

template <Ring R>
BasisVerdict<R> check_basis(const SplineMatrix<R>& m, const QInvariant<R>& q) {
  const R& ring = m.ring();
  auto det = spline_determinant(m);
  if (ring.is_zero(det)) return {Verdict::kRejected, det, std::nullopt, "columns are linearly dependent (det = 0)"};
  auto quotient = ring.exact_divide(det, q.value);
  if (quotient && ring.is_unit(*quotient)) {
    return {Verdict::kAccepted, det, *quotient,
            "det = " + ring.format(*quotient) + " * Q with Q = " + ring.format(q.value)};
  }
  std::string why = quotient ? "det = " + ring.format(*quotient) + " * Q and " + ring.format(*quotient) +
                                   " is not a unit"
                             : "Q = " + ring.format(q.value) + " does not divide det = " + ring.format(det);
  if (!q.is_exact()) {
    return {Verdict::kUndecided, det, std::nullopt,
            why + "; Q is only an lcm lower bound, so basis-hood is not decided"};
  }
  return {Verdict::kRejected, det, std::nullopt, why};
}

/// x with M x = det(M) * target, where x_i is det(M) with column i replaced
/// by `target`. Every x_i is a determinant of ring elements, so it lies in
/// the ring.
template <Ring R>
std::vector<typename R::element_type> cramer_membership(const SplineMatrix<R>& m, const Spline<R>& target) {
  const R& ring = m.ring();
  if (target.size() != m.size()) throw DimensionError("target length does not match the matrix");
  auto base = m.matrix();
  if (ring.is_zero(bareiss_determinant(ring, base))) throw DomainError("cramer_membership: singular matrix");
  std::vector<typename R::element_type> x;
  for (std::size_t i = 0; i < m.size(); ++i) {
    auto replaced = base;
    replaced.set_column(i, target);
    x.push_back(bareiss_determinant(ring, std::move(replaced)));
  }
  return x;
}

namespace detail {

template <Ring R>
typename R::element_type random_scalar(const R& ring, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> small(-4, 4);
  if constexpr (std::is_same_v<R, PolynomialRing>) {
    std::uniform_int_distribution<long> coin(0, 2);
    Polynomial p = ring.from_int(small(rng));
    for (std::size_t v = 0; v < ring.variables().size(); ++v)
      if (coin(rng) == 0) p += ring.variable(v) * ring.from_int(small(rng));
    return p;
  } else {
    return ring.from_int(small(rng));
  }
}

}  // namespace detail

/// Generators the probe combines: the constant spline, every flow-up witness,
/// and over ZZ the columns of the flow-up basis.
template <Ring R>
std::vector<Spline<R>> probe_generators(const LabeledGraph<R>& g) {
  std::vector<Spline<R>> pool;
  if constexpr (std::is_same_v<R, IntegerRing>) {
    for (auto& col : integer_flow_up_basis(g).splines()) pool.push_back(std::move(col));
  }
  pool.push_back(constant_spline(g, g.ring().one()));
  for (std::size_t i = 1; i < g.vertex_count(); ++i) pool.push_back(flow_up_witness(g, i));
  return pool;
}

/// A random spline: a random combination of probe_generators(g).
template <Ring R>
Spline<R> random_spline(const LabeledGraph<R>& g, const std::vector<Spline<R>>& pool, std::mt19937_64& rng) {
  std::vector<typename R::element_type> coeffs;
  std::uniform_int_distribution<int> sparse(0, 3);
  for (std::size_t k = 0; k < pool.size(); ++k)
    coeffs.push_back(sparse(rng) == 0 ? g.ring().zero() : detail::random_scalar(g.ring(), rng));
  return spline_combination(g.ring(), coeffs, pool);
}

template <Ring R>
struct ProbeResult {
  bool holds = true;
  std::size_t trials_run = 0;
  std::vector<Spline<R>> counterexample;  // empty when holds
  std::optional<typename R::element_type> counterexample_det;
};

/// Checks q | det on `trials` n-subsets of splines. The first subset is the
/// leading n generators (the flow-up basis over ZZ); the rest are random
/// combinations drawn from a generator seeded with `seed`.
template <Ring R>
ProbeResult<R> divides_all_dets_probe(const LabeledGraph<R>& g, const typename R::element_type& q, std::size_t trials,
                                      std::uint64_t seed) {
  if (trials == 0) throw DomainError("probe needs at least one trial");
  const R& ring = g.ring();
  const std::size_t n = g.vertex_count();
  auto pool = probe_generators(g);
  std::mt19937_64 rng(seed);
  ProbeResult<R> result;
  for (std::size_t t = 0; t < trials; ++t) {
    std::vector<Spline<R>> cols;
    if (t == 0) {
      cols.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(n));
    } else {
      for (std::size_t k = 0; k < n; ++k) cols.push_back(random_spline(g, pool, rng));
    }
    auto det = bareiss_determinant(ring, Matrix<typename R::element_type>::from_columns(cols, ring.zero()));
    ++result.trials_run;
    if (!ring.divides(q, det)) {
      result.holds = false;
      result.counterexample = std::move(cols);
      result.counterexample_det = det;
      return result;
    }
  }
  return result;
}

template <Ring R>
nlohmann::json verdict_to_json(const R& ring, const BasisVerdict<R>& v, const QInvariant<R>& q) {
  nlohmann::json j = {{"verdict", verdict_name(v.verdict)},
                      {"determinant", ring.format(v.determinant)},
                      {"q", ring.format(q.value)},
                      {"provenance", provenance_name(q.provenance)},
                      {"reason", v.reason}};
  j["unit"] = v.unit_factor ? nlohmann::json(ring.format(*v.unit_factor)) : nlohmann::json(nullptr);
  return j;
}

}  // namespace gspline

#endif  // GSPLINE_BASIS_HPP
