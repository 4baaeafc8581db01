#ifndef GSPLINE_SEARCH_HPP
#define GSPLINE_SEARCH_HPP

// Bounded search for a flow-up class basis over QQ[vars].
//
// With pairwise coprime labels, a flow-up set is a basis iff the product of
// its leading terms is a unit times Q = a_1 ... a_m. Given the irreducible
// factors of Q as a multiset, every flow-up basis therefore distributes those
// factors over the n diagonal positions. For each distribution the leading
// term of column k is fixed (up to a unit, normalized to 1), and the column
// exists iff a linear system over QQ in the coefficients of the remaining
// entries is solvable:
//
//   column k = (0, ..., 0, l_k, f_{k+1}, ..., f_n),  deg f_j <= D,
//   edge (i, j, a):  f_i - f_j = a * t_e  with t_e unknown.
//
// Columns are independent, so solvability is cached per (position, l_k).
// A NONEXISTENT(D) answer certifies that no flow-up basis has all entries of
// total degree <= D; it is not an unconditional statement.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gspline/basis.hpp"
#include "gspline/errors.hpp"
#include "gspline/graph.hpp"
#include "gspline/linear_solve.hpp"
#include "gspline/polynomial_ring.hpp"
#include "gspline/spline.hpp"

namespace gspline {

using PolySpline = Spline<PolynomialRing>;

struct FlowUpSearchResult {
  bool found = false;
  unsigned degree_bound = 0;
  std::vector<PolySpline> basis;         // columns, when found
  std::vector<Polynomial> leading_terms;  // when found
  std::uint64_t raw_assignments = 0;       // n^(number of factors), saturating
  std::size_t distinct_assignments = 0;    // multiset-distinct distributions examined
  std::size_t column_systems = 0;          // linear systems actually solved
  std::optional<BasisVerdict<PolynomialRing>> verdict;

  std::string summary() const {
    return found ? "FOUND" : "NONEXISTENT(" + std::to_string(degree_bound) + ")";
  }
};

namespace detail {

/// All exponent vectors in `nv` variables of total degree <= d, grlex descending.
inline std::vector<Exponents> monomials_up_to(std::size_t nv, int d) {
  std::vector<Exponents> out;
  if (d < 0) return out;
  Exponents e(nv, 0);
  // Enumerate by recursion on variables.
  auto rec = [&](auto&& self, std::size_t var, unsigned remaining) -> void {
    if (var + 1 == nv || nv == 0) {
      if (nv > 0) {
        for (unsigned k = 0; k <= remaining; ++k) {
          e[var] = k;
          out.push_back(e);
        }
        e[var] = 0;
      } else {
        out.push_back(e);
      }
      return;
    }
    for (unsigned k = 0; k <= remaining; ++k) {
      e[var] = k;
      self(self, var + 1, remaining - k);
    }
    e[var] = 0;
  };
  rec(rec, 0, static_cast<unsigned>(d));
  std::sort(out.begin(), out.end(), GrlexGreater{});
  return out;
}

/// Solves for column `k` with leading entry `lead`; nullopt if infeasible
/// within the degree bound.
inline std::optional<PolySpline> solve_flow_up_column(const LabeledGraph<PolynomialRing>& g, std::size_t k,
                                                      const Polynomial& lead, unsigned degree_bound,
                                                      std::size_t* systems_solved) {
  const auto& ring = g.ring();
  const std::size_t n = g.vertex_count();
  const std::size_t nv = ring.variables().size();
  const auto entry_monos = monomials_up_to(nv, static_cast<int>(degree_bound));

  // Unknown layout: entries k+1..n-1 first, then one quotient block per edge.
  std::vector<std::size_t> entry_offset(n, 0);
  std::size_t unknowns = 0;
  for (std::size_t j = k + 1; j < n; ++j) {
    entry_offset[j] = unknowns;
    unknowns += entry_monos.size();
  }
  auto entry_degree = [&](std::size_t j) -> int {
    if (j < k) return -1;
    if (j == k) return lead.degree();
    return static_cast<int>(degree_bound);
  };

  struct Row {
    std::map<std::size_t, Rational> coeffs;
    Rational rhs = 0;
  };

  RationalSystem sys;
  for (std::size_t ei = 0; ei < g.edges().size(); ++ei) {
    const auto& e = g.edges()[ei];
    const int diff_degree = std::max(entry_degree(e.u), entry_degree(e.v));
    if (diff_degree < 0) continue;
    const bool u_unknown = e.u > k, v_unknown = e.v > k;
    if (!u_unknown && !v_unknown) {
      Polynomial fu = e.u == k ? lead : ring.zero();
      Polynomial fv = e.v == k ? lead : ring.zero();
      if (!ring.divides(e.label, fu - fv)) return std::nullopt;
      continue;
    }
    const int quotient_degree = diff_degree - e.label.degree();
    const auto quotient_monos = monomials_up_to(nv, quotient_degree);
    const std::size_t quotient_offset = unknowns;
    unknowns += quotient_monos.size();

    // Equation per monomial: f_u - f_v - a * t_e = 0.
    std::map<Exponents, Row, GrlexGreater> rows;
    for (const auto& m : monomials_up_to(nv, diff_degree)) rows[m];
    auto add_entry = [&](std::size_t j, int sign) {
      if (j < k) return;
      if (j == k) {
        for (const auto& [m, c] : lead.terms()) rows[m].rhs -= sign * c;
        return;
      }
      for (std::size_t idx = 0; idx < entry_monos.size(); ++idx)
        rows[entry_monos[idx]].coeffs[entry_offset[j] + idx] += sign;
    };
    add_entry(e.u, +1);
    add_entry(e.v, -1);
    Exponents prod(nv);
    for (const auto& [ea, ca] : e.label.terms()) {
      for (std::size_t idx = 0; idx < quotient_monos.size(); ++idx) {
        for (std::size_t v = 0; v < nv; ++v) prod[v] = ea[v] + quotient_monos[idx][v];
        rows[prod].coeffs[quotient_offset + idx] -= ca;
      }
    }
    for (auto& [m, row] : rows) {
      std::vector<std::pair<std::size_t, Rational>> sparse;
      for (auto& [col, c] : row.coeffs)
        if (sgn(c) != 0) sparse.emplace_back(col, c);
      sys.add_row(std::move(sparse), row.rhs);
    }
  }
  sys.unknowns = unknowns;
  if (systems_solved) ++*systems_solved;
  auto solution = solve_rational_system(sys);
  if (!solution) return std::nullopt;

  PolySpline column(n, ring.zero());
  column[k] = lead;
  for (std::size_t j = k + 1; j < n; ++j) {
    Polynomial f = ring.zero();
    for (std::size_t idx = 0; idx < entry_monos.size(); ++idx) f.add_term(entry_monos[idx], (*solution)[entry_offset[j] + idx]);
    column[j] = f;
  }
  return column;
}

/// All ways to write `total` as an ordered sum of `parts` nonnegative counts.
inline std::vector<std::vector<unsigned>> compositions(unsigned total, std::size_t parts) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cur(parts, 0);
  auto rec = [&](auto&& self, std::size_t i, unsigned remaining) -> void {
    if (i + 1 == parts) {
      cur[i] = remaining;
      out.push_back(cur);
      return;
    }
    for (unsigned c = remaining + 1; c-- > 0;) {
      cur[i] = c;
      self(self, i + 1, remaining - c);
    }
  };
  if (parts > 0) rec(rec, 0, total);
  return out;
}

}  // namespace detail

/// Searches for a flow-up class basis whose leading terms are products of the
/// given factors of Q and whose entries have total degree <= degree_bound.
inline FlowUpSearchResult flow_up_search_bounded(const LabeledGraph<PolynomialRing>& g,
                                                 const std::vector<Polynomial>& factors, unsigned degree_bound) {
  const auto& ring = g.ring();
  if (ring.coefficients() != Coefficients::Rational)
    throw DomainError("flow-up search needs a polynomial ring over QQ");
  if (!pairwise_coprime_labels(g)) throw DomainError("flow-up search needs pairwise coprime edge labels");
  for (const auto& f : factors) {
    f.check_compatible(ring.zero());
    if (f.is_zero()) throw DomainError("zero factor");
  }
  const Polynomial q = ring.normalize(product_of(ring, g.labels()));
  if (ring.normalize(product_of(ring, factors)) != q)
    throw DomainError("factor product is not Q = " + ring.format(q) + " up to a unit");
  for (const auto& e : g.edges())
    if (e.label.degree() > static_cast<int>(degree_bound))
      throw DomainError("degree bound " + std::to_string(degree_bound) + " is below a label degree");

  const std::size_t n = g.vertex_count();
  FlowUpSearchResult result;
  result.degree_bound = degree_bound;
  {
    std::uint64_t raw = 1;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (raw > std::numeric_limits<std::uint64_t>::max() / n) {
        raw = std::numeric_limits<std::uint64_t>::max();
        break;
      }
      raw *= n;
    }
    result.raw_assignments = raw;
  }

  // Group equal factors (up to units) so permutations of equal factors are
  // examined once.
  std::vector<Polynomial> distinct;
  std::vector<unsigned> multiplicity;
  for (const auto& f : factors) {
    Polynomial nf = ring.normalize(f);
    auto it = std::find(distinct.begin(), distinct.end(), nf);
    if (it == distinct.end()) {
      distinct.push_back(nf);
      multiplicity.push_back(1);
    } else {
      ++multiplicity[static_cast<std::size_t>(it - distinct.begin())];
    }
  }
  std::vector<std::vector<std::vector<unsigned>>> choices;
  for (unsigned m : multiplicity) choices.push_back(detail::compositions(m, n));

  std::map<std::pair<std::size_t, std::string>, std::optional<PolySpline>> cache;
  auto column_for = [&](std::size_t k, const Polynomial& lead) -> const std::optional<PolySpline>& {
    auto key = std::make_pair(k, lead.to_string());
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto col = detail::solve_flow_up_column(g, k, lead, degree_bound, &result.column_systems);
    return cache.emplace(key, std::move(col)).first->second;
  };

  std::vector<std::size_t> pick(choices.size(), 0);
  for (;;) {
    ++result.distinct_assignments;
    std::vector<Polynomial> leads(n, ring.one());
    for (std::size_t gi = 0; gi < distinct.size(); ++gi) {
      const auto& counts = choices[gi][pick[gi]];
      for (std::size_t k = 0; k < n; ++k)
        if (counts[k]) leads[k] *= distinct[gi].pow(counts[k]);
    }
    std::vector<PolySpline> columns;
    bool feasible = true;
    for (std::size_t k = 0; k < n && feasible; ++k) {
      const auto& col = column_for(k, ring.normalize(leads[k]));
      if (!col) feasible = false;
      else columns.push_back(*col);
    }
    if (feasible) {
      result.found = true;
      result.basis = columns;
      for (std::size_t k = 0; k < n; ++k) result.leading_terms.push_back(ring.normalize(leads[k]));
      SplineMatrix<PolynomialRing> m(g, std::move(columns));
      result.verdict = check_basis(m, compute_q(g));
      return result;
    }
    // Odometer over the factor groups.
    std::size_t gi = 0;
    while (gi < pick.size() && ++pick[gi] == choices[gi].size()) pick[gi++] = 0;
    if (gi == pick.size()) break;
  }
  return result;
}

inline nlohmann::json search_to_json(const PolynomialRing& ring, const FlowUpSearchResult& r) {
  nlohmann::json j = {{"result", r.summary()},
                      {"degree_bound", r.degree_bound},
                      {"raw_assignments", r.raw_assignments},
                      {"distinct_assignments", r.distinct_assignments},
                      {"column_systems", r.column_systems}};
  if (r.found) {
    nlohmann::json cols = nlohmann::json::array(), leads = nlohmann::json::array();
    for (const auto& c : r.basis) cols.push_back(spline_to_json(ring, c));
    for (const auto& l : r.leading_terms) leads.push_back(ring.format(l));
    j["basis"] = cols;
    j["leading_terms"] = leads;
    if (r.verdict) {
      j["verdict"] = verdict_name(r.verdict->verdict);
      j["determinant"] = ring.format(r.verdict->determinant);
    }
  }
  return j;
}

}  // namespace gspline

#endif  // GSPLINE_SEARCH_HPP
