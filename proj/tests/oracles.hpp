#ifndef GSPLINE_TESTS_ORACLES_HPP
#define GSPLINE_TESTS_ORACLES_HPP

// Reference computations that share no code with the library: plain machine
// integers, textbook Gaussian elimination over mpq, cofactor expansion,
// exhaustive enumeration. Slow on purpose.

#include <gmpxx.h>

#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

struct IntEdge {
  int u, v;
  long label;
};

inline long gcd(long a, long b) {
  a = std::labs(a);
  b = std::labs(b);
  while (b != 0) {
    long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline long lcm(long a, long b) { return std::labs(a / gcd(a, b) * b); }

/// Every spline with entries in [-bound, bound]. Depth-first over vertices,
/// pruning an assignment as soon as an edge between assigned vertices fails.
inline std::vector<std::vector<long>> enumerate_splines(int n, const std::vector<IntEdge>& edges, long bound) {
  std::vector<std::vector<long>> out;
  std::vector<long> f(static_cast<std::size_t>(n), 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      out.push_back(f);
      return;
    }
    for (long val = -bound; val <= bound; ++val) {
      f[static_cast<std::size_t>(i)] = val;
      bool ok = true;
      for (const auto& e : edges) {
        int hi = std::max(e.u, e.v), lo = std::min(e.u, e.v);
        if (hi != i) continue;
        if ((f[static_cast<std::size_t>(hi)] - f[static_cast<std::size_t>(lo)]) % e.label != 0) ok = false;
      }
      if (ok) rec(i + 1);
    }
  };
  rec(0);
  return out;
}

/// Smallest positive leading term among enumerated splines with exactly k
/// leading zeros; 0 if the class is empty in the box.
inline long minimal_leading_term(const std::vector<std::vector<long>>& splines, std::size_t k) {
  long best = 0;
  for (const auto& s : splines) {
    bool zeros = true;
    for (std::size_t j = 0; j < k; ++j) zeros = zeros && s[j] == 0;
    if (!zeros || s[k] <= 0) continue;
    if (best == 0 || s[k] < best) best = s[k];
  }
  return best;
}

/// A lower-triangular basis assembled from brute-force minimal elements: for
/// each k, a spline in the box with k leading zeros and minimal positive
/// k-th entry.
inline std::optional<std::vector<std::vector<long>>> brute_force_basis(const std::vector<std::vector<long>>& splines,
                                                                       std::size_t n) {
  std::vector<std::vector<long>> basis;
  for (std::size_t k = 0; k < n; ++k) {
    long m = minimal_leading_term(splines, k);
    if (m == 0) return std::nullopt;
    for (const auto& s : splines) {
      bool zeros = true;
      for (std::size_t j = 0; j < k; ++j) zeros = zeros && s[j] == 0;
      if (zeros && s[k] == m) {
        basis.push_back(s);
        break;
      }
    }
  }
  return basis;
}

/// Laplace expansion along the first row. `m` is row-major.
template <class T>
T cofactor_det(const std::vector<std::vector<T>>& m, const T& zero) {
  const std::size_t n = m.size();
  if (n == 0) return zero;
  if (n == 1) return m[0][0];
  T total = zero;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<T>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<T> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    T term = m[0][c] * cofactor_det(minor, zero);
    if (c % 2 == 0) total = total + term;
    else total = total - term;
  }
  return total;
}

/// Solves A x = b over QQ by Gauss-Jordan; A square and nonsingular, else
/// nullopt.
inline std::optional<std::vector<mpq_class>> solve(std::vector<std::vector<mpq_class>> a, std::vector<mpq_class> b) {
  const std::size_t n = a.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      mpq_class f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  for (std::size_t r = 0; r < n; ++r) b[r] /= a[r][r];
  return b;
}

/// Integer coordinates of v in the lattice spanned by `cols` (full rank), or
/// nullopt if v is outside it.
inline std::optional<std::vector<mpz_class>> integer_coordinates(const std::vector<std::vector<mpz_class>>& cols,
                                                                 const std::vector<mpz_class>& v) {
  const std::size_t n = v.size();
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a[r][c] = cols[c][r];
  std::vector<mpq_class> b(v.begin(), v.end());
  auto x = solve(a, b);
  if (!x) return std::nullopt;
  std::vector<mpz_class> out;
  for (auto& q : *x) {
    q.canonicalize();
    if (q.get_den() != 1) return std::nullopt;
    out.push_back(q.get_num());
  }
  return out;
}

/// Span oracle: `cols` generate the same lattice as `reference` (both full
/// rank) iff each reference column has integer coordinates in `cols`.
inline bool same_lattice(const std::vector<std::vector<mpz_class>>& cols,
                         const std::vector<std::vector<mpz_class>>& reference) {
  for (const auto& r : reference)
    if (!integer_coordinates(cols, r)) return false;
  for (const auto& c : cols)
    if (!integer_coordinates(reference, c)) return false;
  return true;
}

/// Breadth-first reachability on an adjacency list.
inline bool connected(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n == 0) return false;
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (auto [u, v] : edges) {
    adj[static_cast<std::size_t>(u)].push_back(v);
    adj[static_cast<std::size_t>(v)].push_back(u);
  }
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::queue<int> q;
  q.push(0);
  seen[0] = true;
  int count = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int w : adj[static_cast<std::size_t>(u)])
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        ++count;
        q.push(w);
      }
  }
  return count == n;
}

/// Exhaustive search over unimodular column operations on a 1x2 row (a, b)
/// with entries bounded by `bound`. Returns the smallest positive g such that
/// (g, 0) is reachable.
inline long reachable_row_gcd(long a, long b, long bound) {
  std::set<std::pair<long, long>> seen{{a, b}};
  std::queue<std::pair<long, long>> q;
  q.push({a, b});
  long best = 0;
  while (!q.empty()) {
    auto [x, y] = q.front();
    q.pop();
    if (y == 0 && x > 0 && (best == 0 || x < best)) best = x;
    const std::pair<long, long> next[] = {{y, x}, {-x, y}, {x, -y}, {x, y - x}, {x, y + x}, {x - y, y}, {x + y, y}};
    for (auto s : next) {
      if (std::labs(s.first) > bound || std::labs(s.second) > bound) continue;
      if (seen.insert(s).second) q.push(s);
    }
  }
  return best;
}

}  // namespace oracle

#endif  // GSPLINE_TESTS_ORACLES_HPP
