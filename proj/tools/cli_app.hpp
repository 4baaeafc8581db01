#ifndef GSPLINE_TOOLS_CLI_APP_HPP
#define GSPLINE_TOOLS_CLI_APP_HPP

// Command-line front end. Kept in a header so the test suite can drive it
// in-process with captured streams.
//
// Exit status: 0 affirmative (or informational), 1 negative verdict, 2 error.

#include <cstdint>
#include <iostream>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gspline/gspline.hpp"

namespace gspline::cli {

constexpr std::uint64_t kDefaultSeed = 20240229;

struct Options {
  std::string graph_path;
  std::string spline;
  std::string basis;
  std::string factors;
  std::string q;
  std::string ideal;
  std::string vertex_order;
  unsigned degree = 0;
  std::size_t trials = 500;
  std::uint64_t seed = kDefaultSeed;
  bool json = false;
};

namespace detail {

inline std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

inline std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\n");
  return s.substr(b, e - b + 1);
}

// "--vertex-order" takes comma-separated vertex names or 1-based indices.
template <Ring R>
LabeledGraph<R> apply_vertex_order(const LabeledGraph<R>& g, const std::string& spec) {
  if (spec.empty()) return g;
  std::vector<std::size_t> order;
  for (const auto& raw : split(spec, ',')) {
    std::string tok = trim(raw);
    std::size_t idx = g.vertex_count();
    for (std::size_t i = 0; i < g.vertex_count(); ++i)
      if (g.vertices()[i] == tok) idx = i;
    if (idx == g.vertex_count() && !tok.empty() && tok.find_first_not_of("0123456789") == std::string::npos) {
      std::size_t k = std::stoul(tok);
      if (k >= 1 && k <= g.vertex_count()) idx = k - 1;
    }
    if (idx == g.vertex_count()) throw DomainError("--vertex-order: unknown vertex '" + tok + "'");
    order.push_back(idx);
  }
  return permute_vertices(g, order);
}

template <Ring R>
std::vector<Spline<R>> parse_columns(const R& ring, const std::string& text) {
  std::vector<Spline<R>> cols;
  for (const auto& piece : split(text, ';')) cols.push_back(parse_spline(ring, piece));
  return cols;
}

template <Ring R>
void print_matrix_columns(std::ostream& out, const R& ring, const std::vector<Spline<R>>& cols) {
  for (std::size_t k = 0; k < cols.size(); ++k) out << "  B" << k + 1 << " = " << format_spline(ring, cols[k]) << "\n";
}

struct Report {
  int status = 0;
  nlohmann::json json;
  std::string text;
};

template <Ring R>
Report do_verify(const LabeledGraph<R>& g, const Options& opt) {
  if (opt.spline.empty()) throw DomainError("verify needs --spline");
  const R& ring = g.ring();
  auto s = parse_spline(ring, opt.spline);
  auto check = is_spline(g, s);
  Report rep;
  rep.status = check.ok ? 0 : 1;
  std::ostringstream out;
  out << "SPLINE: " << (check.ok ? "yes" : "no") << "\n";
  nlohmann::json violations = nlohmann::json::array();
  for (const auto& v : check.violations) {
    const std::string& a = g.vertices()[v.u];
    const std::string& b = g.vertices()[v.v];
    out << "  violated edge " << a << "-" << b << ": " << v.label << " does not divide " << v.difference << "\n";
    violations.push_back({{"edge", v.edge}, {"u", a}, {"v", b}, {"label", v.label}, {"difference", v.difference}});
  }
  if (check.ok) out << "  flow-up class: " << flow_up_index(ring, s) << "\n";
  rep.text = out.str();
  rep.json = {{"command", "verify"},
              {"spline", spline_to_json(ring, s)},
              {"is_spline", check.ok},
              {"violations", violations}};
  if (check.ok) rep.json["flow_up_index"] = flow_up_index(ring, s);
  return rep;
}

inline Report do_flowup(const IntegerGraph& g, const Options&) {
  auto basis = integer_flow_up_basis(g);
  Report rep;
  std::ostringstream out;
  out << "flow-up class basis over ZZ:\n";
  print_matrix_columns(out, g.ring(), basis.splines());
  out << "diagonal: (";
  for (std::size_t k = 0; k < basis.size(); ++k) out << (k ? ", " : "") << basis.diagonal[k];
  out << ")\ndet: " << basis.determinant() << "\n";
  rep.text = out.str();
  rep.json = basis.to_json();
  rep.json["command"] = "flowup";
  return rep;
}

inline Report do_flowup(const PolynomialGraph& g, const Options&) {
  const auto& ring = g.ring();
  Report rep;
  std::ostringstream out;
  out << "flow-up witnesses (no canonical basis outside ZZ; see `search`):\n";
  nlohmann::json rows = nlohmann::json::array();
  auto one = constant_spline(g, ring.one());
  out << "  class 0: " << format_spline(ring, one) << "\n";
  rows.push_back({{"class", 0}, {"spline", spline_to_json(ring, one)}});
  for (std::size_t i = 1; i < g.vertex_count(); ++i) {
    auto w = flow_up_witness(g, i);
    out << "  class " << i << ": " << format_spline(ring, w) << "\n";
    rows.push_back({{"class", i}, {"spline", spline_to_json(ring, w)}});
  }
  rep.text = out.str();
  rep.json = {{"command", "flowup"}, {"witnesses", rows}};
  return rep;
}

template <Ring R>
Report do_q(const LabeledGraph<R>& g, const Options&) {
  const R& ring = g.ring();
  auto q = compute_q(g);
  auto l = lcm_bound(g);
  Report rep;
  std::ostringstream out;
  out << "Q = " << ring.format(q.value) << " (" << provenance_name(q.provenance) << ")\n";
  out << "lcm(labels) = " << ring.format(l.value) << "\n";
  if (!q.is_exact()) out << "note: only an lcm lower bound is available; basis checks can return UNDECIDED\n";
  rep.text = out.str();
  rep.json = {{"command", "q"},
              {"q", ring.format(q.value)},
              {"provenance", provenance_name(q.provenance)},
              {"lcm", ring.format(l.value)},
              {"exact", q.is_exact()}};
  return rep;
}

template <Ring R>
Report do_check_basis(const LabeledGraph<R>& g, const Options& opt) {
  if (opt.basis.empty()) throw DomainError("check-basis needs --basis");
  const R& ring = g.ring();
  SplineMatrix<R> m(g, parse_columns(ring, opt.basis));
  auto q = compute_q(g);
  auto v = check_basis(m, q);
  Report rep;
  rep.status = v.verdict == Verdict::kRejected ? 1 : 0;
  std::ostringstream out;
  out << "BASIS: " << verdict_name(v.verdict) << "\n";
  out << "  det = " << ring.format(v.determinant) << ", Q = " << ring.format(q.value) << " ("
      << provenance_name(q.provenance) << ")\n";
  if (v.unit_factor) out << "  unit = " << ring.format(*v.unit_factor) << "\n";
  out << "  " << v.reason << "\n";
  rep.text = out.str();
  rep.json = verdict_to_json(ring, v, q);
  rep.json["command"] = "check-basis";
  return rep;
}

inline Report do_search(const IntegerGraph&, const Options&) {
  throw DomainError("search runs over QQ[vars]; integer graphs always have a flow-up basis (use `flowup`)");
}

inline Report do_search(const PolynomialGraph& g, const Options& opt) {
  if (opt.factors.empty()) throw DomainError("search needs --factors");
  const auto& ring = g.ring();
  std::vector<Polynomial> factors;
  for (const auto& f : split(opt.factors, ';')) factors.push_back(ring.parse(f));
  unsigned degree = opt.degree;
  if (degree == 0)
    for (const auto& e : g.edges()) degree = std::max(degree, static_cast<unsigned>(2 * e.label.degree() + 2));
  auto res = flow_up_search_bounded(g, factors, degree);
  Report rep;
  rep.status = res.found ? 0 : 1;
  std::ostringstream out;
  out << "SEARCH: " << res.summary() << "\n";
  out << "  degree bound " << res.degree_bound << "; " << res.distinct_assignments
      << " distinct factor assignments examined (" << res.raw_assignments << " raw), " << res.column_systems
      << " column systems solved\n";
  if (res.found) {
    print_matrix_columns(out, ring, res.basis);
    out << "  det = " << ring.format(res.verdict->determinant) << "\n";
    out << "  check-basis: " << verdict_name(res.verdict->verdict) << "\n";
  } else {
    out << "  no flow-up class basis with entries of total degree <= " << res.degree_bound << "\n";
    out << "  (exhaustive over splittings of the factor list as given; list irreducible factors with multiplicity)\n";
  }
  rep.text = out.str();
  rep.json = search_to_json(ring, res);
  rep.json["command"] = "search";
  return rep;
}

template <Ring R>
std::array<typename R::element_type, 3> cycle_labels(const LabeledGraph<R>& g) {
  if (g.vertex_count() != 3 || g.edges().size() != 3)
    throw DomainError("obstruct needs a 3-cycle (3 vertices, 3 edges)");
  std::array<std::optional<typename R::element_type>, 3> slot;
  for (const auto& e : g.edges()) {
    std::size_t lo = std::min(e.u, e.v), hi = std::max(e.u, e.v);
    std::size_t k = (lo == 0 && hi == 1) ? 0 : (lo == 1 && hi == 2) ? 1 : 2;
    if (slot[k]) throw DomainError("obstruct needs a simple 3-cycle");
    slot[k] = e.label;
  }
  return {*slot[0], *slot[1], *slot[2]};
}

inline Report obstruction_report(const ObstructionResult& r) {
  Report rep;
  rep.status = r.obstructed ? 0 : 1;
  rep.text = std::string("OBSTRUCTED: ") + (r.obstructed ? "yes" : "no") + "\n  " + r.reason + "\n";
  rep.json = {{"command", "obstruct"}, {"obstructed", r.obstructed}, {"reason", r.reason}};
  return rep;
}

inline Report do_obstruct(const IntegerGraph& g, const Options&) {
  const IntegerRing ring;
  auto [a, b, c] = cycle_labels(g);
  // <b, c> = <gcd(b, c)> in ZZ.
  Integer bc = ring.gcd(b, c);
  IdealMembership<IntegerRing> member = [&](const Integer& x) { return ring.divides(bc, x); };
  return obstruction_report(c3_flowup_obstruction(ring, a, b, c, member));
}

inline Report do_obstruct(const PolynomialGraph& g, const Options& opt) {
  auto [a, b, c] = cycle_labels(g);
  IdealMembership<PolynomialRing> member;
  if (opt.ideal == "even-constant") member = even_constant_term;
  else if (opt.ideal == "zero-constant") member = zero_constant_term;
  else if (opt.ideal == "whole-ring") member = whole_ring<Polynomial>;
  else throw DomainError("obstruct on a polynomial graph needs --ideal even-constant|zero-constant|whole-ring");
  return obstruction_report(c3_flowup_obstruction(g.ring(), a, b, c, member));
}

template <Ring R>
Report do_probe(const LabeledGraph<R>& g, const Options& opt) {
  const R& ring = g.ring();
  auto q = opt.q.empty() ? lcm_bound(g).value : ring.parse(opt.q);
  auto res = divides_all_dets_probe(g, q, opt.trials, opt.seed);
  Report rep;
  rep.status = res.holds ? 0 : 1;
  std::ostringstream out;
  out << "PROBE: q = " << ring.format(q) << " divides all sampled determinants: " << (res.holds ? "yes" : "no")
      << " (" << res.trials_run << " trials, seed " << opt.seed << ")\n";
  rep.json = {{"command", "probe"},
              {"q", ring.format(q)},
              {"holds", res.holds},
              {"trials", res.trials_run},
              {"seed", opt.seed}};
  if (!res.holds) {
    out << "  counterexample (det = " << ring.format(*res.counterexample_det) << "):\n";
    print_matrix_columns(out, ring, res.counterexample);
    nlohmann::json cols = nlohmann::json::array();
    for (const auto& col : res.counterexample) cols.push_back(spline_to_json(ring, col));
    rep.json["counterexample"] = cols;
    rep.json["counterexample_det"] = ring.format(*res.counterexample_det);
  }
  rep.text = out.str();
  return rep;
}

}  // namespace detail

/// Runs one subcommand. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized splines on edge-labeled graphs", "gspline"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("graph", opt.graph_path, "graph JSON file")->required();
    sub->add_flag("--json", opt.json, "machine-readable output");
    sub->add_option("--vertex-order", opt.vertex_order, "comma-separated vertex names or 1-based indices");
  };
  auto* verify = app.add_subcommand("verify", "check a candidate spline");
  add_common(verify);
  verify->add_option("--spline", opt.spline, "comma-separated entries")->required();
  auto* flowup = app.add_subcommand("flowup", "flow-up class basis (ZZ) or witness table");
  add_common(flowup);
  auto* q = app.add_subcommand("q", "basis invariant Q with provenance");
  add_common(q);
  auto* check = app.add_subcommand("check-basis", "decide basis-hood via det = u * Q");
  add_common(check);
  check->add_option("--basis", opt.basis, "semicolon-separated columns, each comma-separated")->required();
  auto* search = app.add_subcommand("search", "bounded flow-up basis search over QQ[vars]");
  add_common(search);
  search->add_option("--factors", opt.factors, "semicolon-separated factors of Q")->required();
  search->add_option("--degree", opt.degree, "total degree bound D (default 2 * max label degree + 2)");
  auto* obstruct = app.add_subcommand("obstruct", "3-cycle flow-up obstruction test");
  add_common(obstruct);
  obstruct->add_option("--ideal", opt.ideal, "membership predicate for <b, c>")
      ->check(CLI::IsMember({"even-constant", "zero-constant", "whole-ring"}));
  auto* probe = app.add_subcommand("probe", "randomized check that q divides all n-subset determinants");
  add_common(probe);
  probe->add_option("--q", opt.q, "candidate divisor (default lcm of labels)");
  probe->add_option("--trials", opt.trials, "number of sampled subsets")->check(CLI::PositiveNumber);
  probe->add_option("--seed", opt.seed, "random seed");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    AnyGraph any = load_graph_file(opt.graph_path);
    CLI::App* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    detail::Report rep = std::visit(
        [&](const auto& g0) -> detail::Report {
          auto g = detail::apply_vertex_order(g0, opt.vertex_order);
          if (name == "verify") return detail::do_verify(g, opt);
          if (name == "flowup") return detail::do_flowup(g, opt);
          if (name == "q") return detail::do_q(g, opt);
          if (name == "check-basis") return detail::do_check_basis(g, opt);
          if (name == "search") return detail::do_search(g, opt);
          if (name == "obstruct") return detail::do_obstruct(g, opt);
          return detail::do_probe(g, opt);
        },
        any);
    if (opt.json) out << rep.json.dump(2) << "\n";
    else out << rep.text;
    return rep.status;
  } catch (const std::exception& e) {
    if (opt.json) out << nlohmann::json{{"error", e.what()}}.dump(2) << "\n";
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace gspline::cli

#endif  // GSPLINE_TOOLS_CLI_APP_HPP
