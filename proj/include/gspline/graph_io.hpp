#ifndef GSPLINE_GRAPH_IO_HPP
#define GSPLINE_GRAPH_IO_HPP

// JSON ingestion and serialization of labeled graphs.
//
// {
//   "ring": {"kind": "int"} | {"kind": "poly", "coefficients": "int"|"rat", "variables": [...]},
//   "vertices": ["v1", ...],
//   "edges": [{"u": "v1", "v": "v2", "label": "x+y"}, ...]
// }
//
// Endpoints may also be given as 0-based integer indices.

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "gspline/graph.hpp"
#include "gspline/polynomial_ring.hpp"
#include "gspline/ring.hpp"

namespace gspline {

using IntegerGraph = LabeledGraph<IntegerRing>;
using PolynomialGraph = LabeledGraph<PolynomialRing>;
using AnyGraph = std::variant<IntegerGraph, PolynomialGraph>;

namespace detail {

inline std::size_t resolve_endpoint(const nlohmann::json& j, const std::vector<std::string>& names, std::size_t edge,
                                    const char* key) {
  const std::string where = "edge " + std::to_string(edge) + " field '" + key + "'";
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == s) return i;
    throw GraphError(GraphErrc::kBadIndex, where + ": unknown vertex '" + s + "'");
  }
  if (j.is_number_integer()) {
    auto v = j.get<long long>();
    if (v < 0 || static_cast<std::size_t>(v) >= names.size())
      throw GraphError(GraphErrc::kBadIndex, where + ": index " + std::to_string(v) + " out of range");
    return static_cast<std::size_t>(v);
  }
  throw GraphError(GraphErrc::kSchema, where + " must be a vertex name or index");
}

template <Ring R>
LabeledGraph<R> build_graph(const R& ring, const nlohmann::json& doc) {
  if (!doc.contains("vertices") || !doc["vertices"].is_array())
    throw GraphError(GraphErrc::kSchema, "missing 'vertices' array");
  if (!doc.contains("edges") || !doc["edges"].is_array()) throw GraphError(GraphErrc::kSchema, "missing 'edges' array");
  std::vector<std::string> names;
  for (const auto& v : doc["vertices"]) {
    if (!v.is_string()) throw GraphError(GraphErrc::kSchema, "vertex names must be strings");
    names.push_back(v.get<std::string>());
  }
  std::vector<typename LabeledGraph<R>::edge_type> edges;
  std::size_t k = 0;
  for (const auto& e : doc["edges"]) {
    if (!e.is_object() || !e.contains("u") || !e.contains("v") || !e.contains("label"))
      throw GraphError(GraphErrc::kSchema, "edge " + std::to_string(k) + " needs 'u', 'v' and 'label'");
    std::size_t u = resolve_endpoint(e["u"], names, k, "u");
    std::size_t v = resolve_endpoint(e["v"], names, k, "v");
    std::string text;
    if (e["label"].is_string()) text = e["label"].get<std::string>();
    else if (e["label"].is_number_integer()) text = std::to_string(e["label"].get<long long>());
    else throw GraphError(GraphErrc::kSchema, "edge " + std::to_string(k) + " label must be a string");
    try {
      edges.push_back({u, v, ring.parse(text)});
    } catch (const ParseError& err) {
      throw GraphError(GraphErrc::kParseFailure, "edge " + std::to_string(k) + " label \"" + text + "\": " +
                                                     err.detail() + " at position " +
                                                     std::to_string(err.position()));
    }
    ++k;
  }
  return LabeledGraph<R>(ring, std::move(names), std::move(edges));
}

}  // namespace detail

/// Parses and validates a graph document.
inline AnyGraph load_graph(std::string_view document) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(document);
  } catch (const nlohmann::json::parse_error& err) {
    throw GraphError(GraphErrc::kSchema, std::string("invalid JSON: ") + err.what());
  }
  if (!doc.is_object() || !doc.contains("ring") || !doc["ring"].is_object())
    throw GraphError(GraphErrc::kSchema, "missing 'ring' object");
  const auto& ring = doc["ring"];
  std::string kind = ring.value("kind", "");
  if (kind == "int") return detail::build_graph(IntegerRing{}, doc);
  if (kind == "poly") {
    std::string coeffs = ring.value("coefficients", "rat");
    if (coeffs != "int" && coeffs != "rat")
      throw GraphError(GraphErrc::kSchema, "ring.coefficients must be \"int\" or \"rat\"");
    if (!ring.contains("variables") || !ring["variables"].is_array())
      throw GraphError(GraphErrc::kSchema, "polynomial ring needs a 'variables' array");
    std::vector<std::string> vars;
    for (const auto& v : ring["variables"]) {
      if (!v.is_string()) throw GraphError(GraphErrc::kSchema, "variable names must be strings");
      vars.push_back(v.get<std::string>());
    }
    PolyContextPtr ctx;
    try {
      ctx = make_context(std::move(vars), coeffs == "int" ? Coefficients::Integer : Coefficients::Rational);
    } catch (const DomainError& err) {
      throw GraphError(GraphErrc::kSchema, err.what());
    }
    return detail::build_graph(PolynomialRing(ctx), doc);
  }
  throw GraphError(GraphErrc::kSchema, "ring.kind must be \"int\" or \"poly\"");
}

inline AnyGraph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open graph file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return load_graph(buffer.str());
}

inline nlohmann::json ring_to_json(const IntegerRing&) { return {{"kind", "int"}}; }

inline nlohmann::json ring_to_json(const PolynomialRing& ring) {
  return {{"kind", "poly"},
          {"coefficients", ring.coefficients() == Coefficients::Integer ? "int" : "rat"},
          {"variables", ring.variables()}};
}

template <Ring R>
nlohmann::json to_json(const LabeledGraph<R>& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : g.edges())
    edges.push_back({{"u", g.vertices()[e.u]}, {"v", g.vertices()[e.v]}, {"label", g.ring().format(e.label)}});
  return {{"ring", ring_to_json(g.ring())}, {"vertices", g.vertices()}, {"edges", edges}};
}

}  // namespace gspline

#endif  // GSPLINE_GRAPH_IO_HPP
