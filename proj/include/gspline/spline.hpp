#ifndef GSPLINE_SPLINE_HPP
#define GSPLINE_SPLINE_HPP

// Splines as vertex labelings of an edge-labeled graph, and the flow-up
// classification. Flow-up classes partition the module: a spline is in class
// k when it has exactly k leading zeros (the zero spline is in class n).

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "gspline/errors.hpp"
#include "gspline/graph.hpp"
#include "gspline/ring.hpp"

namespace gspline {

template <Ring R>
using Spline = std::vector<typename R::element_type>;

struct EdgeViolation {
  std::size_t edge;
  std::size_t u;
  std::size_t v;
  std::string label;
  std::string difference;  // f_u - f_v
};

struct SplineCheck {
  bool ok = true;
  std::vector<EdgeViolation> violations;

  explicit operator bool() const { return ok; }
};

/// Checks every edge congruence and reports all of the violated ones.
template <Ring R>
SplineCheck is_spline(const LabeledGraph<R>& g, const Spline<R>& candidate) {
  if (candidate.size() != g.vertex_count())
    throw DimensionError("spline has " + std::to_string(candidate.size()) + " entries, graph has " +
                         std::to_string(g.vertex_count()) + " vertices");
  SplineCheck check;
  const R& ring = g.ring();
  for (std::size_t k = 0; k < g.edges().size(); ++k) {
    const auto& e = g.edges()[k];
    typename R::element_type diff = candidate[e.u] - candidate[e.v];
    if (!ring.divides(e.label, diff)) {
      check.ok = false;
      check.violations.push_back({k, e.u, e.v, ring.format(e.label), ring.format(diff)});
    }
  }
  return check;
}

/// Number of leading zeros; equals the length for the zero spline.
template <Ring R>
std::size_t flow_up_index(const R& ring, const Spline<R>& s) {
  std::size_t k = 0;
  while (k < s.size() && ring.is_zero(s[k])) ++k;
  return k;
}

template <Ring R>
typename R::element_type leading_term(const R& ring, const Spline<R>& s) {
  std::size_t k = flow_up_index(ring, s);
  if (k == s.size()) throw DomainError("the zero spline has no leading term");
  return s[k];
}

template <Ring R>
Spline<R> constant_spline(const LabeledGraph<R>& g, const typename R::element_type& value) {
  return Spline<R>(g.vertex_count(), value);
}

/// The spline that is zero except at vertex i (0-based), where it carries the
/// product of the labels incident to that vertex. It lies in flow-up class i.
template <Ring R>
Spline<R> flow_up_witness(const LabeledGraph<R>& g, std::size_t i) {
  const std::size_t n = g.vertex_count();
  if (i == 0 || i >= n) throw DomainError("flow-up witness index must satisfy 0 < i < n");
  const R& ring = g.ring();
  Spline<R> s(n, ring.zero());
  typename R::element_type product = ring.one();
  for (const auto& label : incident_labels(g, i)) product = product * label;
  s[i] = product;
  return s;
}

/// Componentwise sum of coefficients[k] * splines[k].
template <Ring R>
Spline<R> spline_combination(const R& ring, const std::vector<typename R::element_type>& coefficients,
                             const std::vector<Spline<R>>& splines) {
  if (coefficients.size() != splines.size()) throw DimensionError("coefficient and spline counts differ");
  if (splines.empty()) throw DimensionError("empty combination");
  const std::size_t n = splines.front().size();
  Spline<R> out(n, ring.zero());
  for (std::size_t k = 0; k < splines.size(); ++k) {
    if (splines[k].size() != n) throw DimensionError("splines have different lengths");
    if (ring.is_zero(coefficients[k])) continue;
    for (std::size_t i = 0; i < n; ++i) out[i] = out[i] + coefficients[k] * splines[k][i];
  }
  return out;
}

/// Parses "3,15,5" (entries in the ring's label grammar).
template <Ring R>
Spline<R> parse_spline(const R& ring, std::string_view text) {
  Spline<R> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t comma = text.find(',', start);
    std::string_view piece = text.substr(start, comma == std::string_view::npos ? text.size() - start : comma - start);
    try {
      out.push_back(ring.parse(piece));
    } catch (const ParseError& err) {
      throw ParseError("spline entry " + std::to_string(out.size() + 1) + ": " + err.detail(),
                       start + err.position());
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

template <Ring R>
std::string format_spline(const R& ring, const Spline<R>& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? ", " : "") + ring.format(s[i]);
  return out + ")";
}

template <Ring R>
nlohmann::json spline_to_json(const R& ring, const Spline<R>& s) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& f : s) arr.push_back(ring.format(f));
  return arr;
}

template <Ring R>
Spline<R> spline_from_json(const R& ring, const nlohmann::json& arr) {
  if (!arr.is_array()) throw DomainError("a spline must be a JSON array");
  Spline<R> out;
  for (const auto& v : arr) {
    if (!v.is_string()) throw DomainError("spline entries must be strings");
    out.push_back(ring.parse(v.get<std::string>()));
  }
  return out;
}

}  // namespace gspline

#endif  // GSPLINE_SPLINE_HPP
