#ifndef GSPLINE_GRAPH_HPP
#define GSPLINE_GRAPH_HPP

// Edge-labeled graphs (G, A). Vertices are ordered by declaration; every
// flow-up notion in the library refers to that order.

#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "gspline/errors.hpp"
#include "gspline/ring.hpp"

namespace gspline {

enum class GraphErrc {
  kEmpty,
  kDuplicateVertex,
  kBadIndex,
  kSelfLoop,
  kZeroLabel,
  kDisconnected,
  kParseFailure,
  kSchema,
};

inline const char* graph_errc_name(GraphErrc code) {
  switch (code) {
    case GraphErrc::kEmpty: return "EMPTY_GRAPH";
    case GraphErrc::kDuplicateVertex: return "DUPLICATE_VERTEX";
    case GraphErrc::kBadIndex: return "BAD_INDEX";
    case GraphErrc::kSelfLoop: return "SELF_LOOP";
    case GraphErrc::kZeroLabel: return "ZERO_LABEL";
    case GraphErrc::kDisconnected: return "DISCONNECTED";
    case GraphErrc::kParseFailure: return "PARSE_FAILURE";
    case GraphErrc::kSchema: return "SCHEMA";
  }
  return "UNKNOWN";
}

class GraphError : public Error {
 public:
  GraphError(GraphErrc code, const std::string& message)
      : Error(std::string(graph_errc_name(code)) + ": " + message), code_(code) {}
  GraphErrc code() const noexcept { return code_; }

 private:
  GraphErrc code_;
};

template <class T>
struct Edge {
  std::size_t u;
  std::size_t v;
  T label;
};

/// True iff vertices 0..n-1 are connected by `edges` (union-find).
template <class T>
bool is_connected(std::size_t n, const std::vector<Edge<T>>& edges) {
  if (n == 0) return false;
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = n;
  for (const auto& e : edges) {
    std::size_t a = find(e.u), b = find(e.v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

template <Ring R>
class LabeledGraph {
 public:
  using ring_type = R;
  using element_type = typename R::element_type;
  using edge_type = Edge<element_type>;

  /// Validates and builds the graph. Multi-edges are allowed; self-loops,
  /// zero labels, bad endpoints and disconnected graphs are not.
  LabeledGraph(R ring, std::vector<std::string> vertices, std::vector<edge_type> edges)
      : ring_(std::move(ring)), vertices_(std::move(vertices)), edges_(std::move(edges)) {
    if (vertices_.empty()) throw GraphError(GraphErrc::kEmpty, "graph has no vertices");
    for (std::size_t i = 0; i < vertices_.size(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (vertices_[i] == vertices_[j])
          throw GraphError(GraphErrc::kDuplicateVertex, "vertex '" + vertices_[i] + "' declared twice");
    for (std::size_t k = 0; k < edges_.size(); ++k) {
      const auto& e = edges_[k];
      if (e.u >= vertices_.size() || e.v >= vertices_.size())
        throw GraphError(GraphErrc::kBadIndex, "edge " + std::to_string(k) + " has an endpoint out of range");
      if (e.u == e.v)
        throw GraphError(GraphErrc::kSelfLoop, "edge " + std::to_string(k) + " is a self-loop at '" +
                                                   vertices_[e.u] + "'");
      if (ring_.is_zero(e.label))
        throw GraphError(GraphErrc::kZeroLabel, "edge " + std::to_string(k) + " has label 0");
    }
    if (!is_connected(vertices_.size(), edges_)) throw GraphError(GraphErrc::kDisconnected, "graph is not connected");
  }

  /// Vertices named v1..vn.
  LabeledGraph(R ring, std::size_t n, std::vector<edge_type> edges)
      : LabeledGraph(std::move(ring), default_names(n), std::move(edges)) {}

  const R& ring() const { return ring_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<edge_type>& edges() const { return edges_; }

  std::vector<element_type> labels() const {
    std::vector<element_type> out;
    out.reserve(edges_.size());
    for (const auto& e : edges_) out.push_back(e.label);
    return out;
  }

  static std::vector<std::string> default_names(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i + 1));
    return names;
  }

 private:
  R ring_;
  std::vector<std::string> vertices_;
  std::vector<edge_type> edges_;
};

/// Labels of every edge touching `vertex` (0-based), in edge-declaration order.
template <Ring R>
std::vector<typename R::element_type> incident_labels(const LabeledGraph<R>& g, std::size_t vertex) {
  if (vertex >= g.vertex_count()) throw DimensionError("vertex index out of range");
  std::vector<typename R::element_type> out;
  for (const auto& e : g.edges())
    if (e.u == vertex || e.v == vertex) out.push_back(e.label);
  return out;
}

/// True iff every pair of edge labels has a unit gcd.
template <Ring R>
bool pairwise_coprime_labels(const LabeledGraph<R>& g) {
  const auto& edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j)
      if (!g.ring().is_unit(g.ring().gcd(edges[i].label, edges[j].label))) return false;
  return true;
}

/// Reorders vertices: new vertex k is old vertex order[k].
template <Ring R>
LabeledGraph<R> permute_vertices(const LabeledGraph<R>& g, const std::vector<std::size_t>& order) {
  const std::size_t n = g.vertex_count();
  if (order.size() != n) throw DimensionError("permutation has the wrong length");
  std::vector<std::size_t> position(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    if (order[k] >= n || position[order[k]] != n) throw DomainError("not a permutation of the vertices");
    position[order[k]] = k;
  }
  std::vector<std::string> names;
  for (std::size_t k = 0; k < n; ++k) names.push_back(g.vertices()[order[k]]);
  std::vector<typename LabeledGraph<R>::edge_type> edges;
  for (const auto& e : g.edges()) edges.push_back({position[e.u], position[e.v], e.label});
  return LabeledGraph<R>(g.ring(), std::move(names), std::move(edges));
}

/// Cycle v1 - v2 - ... - vn - v1; labels[k] sits on the edge leaving v(k+1).
template <Ring R>
LabeledGraph<R> cycle_graph(const R& ring, const std::vector<typename R::element_type>& labels) {
  const std::size_t n = labels.size();
  if (n < 3) throw DomainError("a cycle needs at least 3 vertices");
  std::vector<typename LabeledGraph<R>::edge_type> edges;
  for (std::size_t k = 0; k < n; ++k) edges.push_back({k, (k + 1) % n, labels[k]});
  return LabeledGraph<R>(ring, n, std::move(edges));
}

/// Path v1 - v2 - ... - v(m+1) with m = labels.size().
template <Ring R>
LabeledGraph<R> path_graph(const R& ring, const std::vector<typename R::element_type>& labels) {
  std::vector<typename LabeledGraph<R>::edge_type> edges;
  for (std::size_t k = 0; k < labels.size(); ++k) edges.push_back({k, k + 1, labels[k]});
  return LabeledGraph<R>(ring, labels.size() + 1, std::move(edges));
}

/// Complete graph on n vertices; labels are consumed in (0,1), (0,2), ..., (1,2), ... order.
template <Ring R>
LabeledGraph<R> complete_graph(const R& ring, std::size_t n, const std::vector<typename R::element_type>& labels) {
  if (labels.size() != n * (n - 1) / 2) throw DimensionError("complete graph needs n(n-1)/2 labels");
  std::vector<typename LabeledGraph<R>::edge_type> edges;
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) edges.push_back({i, j, labels[k++]});
  return LabeledGraph<R>(ring, n, std::move(edges));
}

}  // namespace gspline

#endif  // GSPLINE_GRAPH_HPP
