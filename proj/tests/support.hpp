#ifndef GSPLINE_TESTS_SUPPORT_HPP
#define GSPLINE_TESTS_SUPPORT_HPP

// Seeded generators shared by the property tests and the acceptance driver.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gspline/gspline.hpp"

namespace gspline::testing {

inline std::string data_path(const std::string& name) { return std::string(GSPLINE_DATA_DIR) + "/" + name; }

inline IntegerGraph load_int_graph(const std::string& name) {
  return std::get<IntegerGraph>(load_graph_file(data_path(name)));
}

inline PolynomialGraph load_poly_graph(const std::string& name) {
  return std::get<PolynomialGraph>(load_graph_file(data_path(name)));
}

inline const std::vector<std::string>& int_corpus() {
  static const std::vector<std::string> names{"fig2.json", "fig2-text.json", "k4.json", "path4.json"};
  return names;
}

inline const std::vector<std::string>& poly_corpus() {
  static const std::vector<std::string> names{"xy.json", "squares.json", "zx-obstruction.json"};
  return names;
}

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  long nonzero(long lo, long hi) {
    for (;;) {
      long v = integer(lo, hi);
      if (v != 0) return v;
    }
  }

  bool coin(int one_in = 2) { return integer(0, one_in - 1) == 0; }

  Integer big(long lo, long hi) { return Integer(integer(lo, hi)); }

  // Random polynomial with total degree <= max_degree and at most `terms`
  // terms; coefficients in [-c, c]. May be zero.
  Polynomial poly(const PolyContextPtr& ctx, int max_degree, int terms = 4, long c = 5) {
    Polynomial p(ctx);
    const std::size_t nv = ctx->variables.size();
    int count = static_cast<int>(integer(1, terms));
    for (int t = 0; t < count; ++t) {
      Exponents e(nv, 0);
      int budget = static_cast<int>(integer(0, max_degree));
      for (int k = 0; k < budget; ++k) e[static_cast<std::size_t>(integer(0, static_cast<long>(nv) - 1))]++;
      p += Polynomial::monomial(ctx, e, Rational(integer(-c, c)));
    }
    return p;
  }

  Polynomial nonzero_poly(const PolyContextPtr& ctx, int max_degree, int terms = 4, long c = 5) {
    for (;;) {
      Polynomial p = poly(ctx, max_degree, terms, c);
      if (!p.is_zero()) return p;
    }
  }

  // Random unimodular n x n integer matrix: a product of elementary column
  // operations (adds, swaps, sign flips).
  IntegerMatrix unimodular(std::size_t n, int steps = 12, long spread = 3) {
    IntegerMatrix u = IntegerMatrix::identity(n, 0, 1);
    for (int s = 0; s < steps; ++s) {
      auto i = static_cast<std::size_t>(integer(0, static_cast<long>(n) - 1));
      auto j = static_cast<std::size_t>(integer(0, static_cast<long>(n) - 1));
      int kind = static_cast<int>(integer(0, 5));
      if (kind == 0 && i != j) {
        u.swap_columns(i, j);
      } else if (kind == 1) {
        for (std::size_t r = 0; r < n; ++r) u(r, i) = -u(r, i);
      } else if (i != j) {
        Integer f = integer(-spread, spread);
        for (std::size_t r = 0; r < n; ++r) u(r, i) += f * u(r, j);
      }
    }
    return u;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline PolyContextPtr qq_xy() { return make_context({"x", "y"}, Coefficients::Rational); }
inline PolyContextPtr zz_x() { return make_context({"x"}, Coefficients::Integer); }

}  // namespace gspline::testing

#endif  // GSPLINE_TESTS_SUPPORT_HPP
