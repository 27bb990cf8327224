#ifndef BINET_TESTS_ORACLES_HPP
#define BINET_TESTS_ORACLES_HPP

// Brute-force reference computations. Deliberately naive and independent of
// the library's kernels: they work from a dense adjacency matrix built
// straight from the edge list.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "binet/graph.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<bool>>;

inline Matrix undirected_matrix(const binet::DirectedGraph& g) {
  const std::size_t n = g.node_count();
  Matrix a(n, std::vector<bool>(n, false));
  for (const auto& [u, v] : g.edges()) {
    if (u == v) continue;
    a[u][v] = true;
    a[v][u] = true;
  }
  return a;
}

inline std::vector<std::size_t> degrees(const Matrix& a) {
  std::vector<std::size_t> d(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) d[i] += a[i][j] ? 1 : 0;
  }
  return d;
}

/// Textbook two-sample Pearson correlation over the list of (deg u, deg v)
/// for every ordered adjacent pair.
inline std::optional<double> pearson_assortativity(const binet::DirectedGraph& g) {
  const Matrix a = undirected_matrix(g);
  const auto d = degrees(a);
  std::vector<double> xs;
  std::vector<double> ys;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (!a[i][j]) continue;
      xs.push_back(static_cast<double>(d[i]));
      ys.push_back(static_cast<double>(d[j]));
    }
  }
  if (xs.empty()) return std::nullopt;
  const double n = static_cast<double>(xs.size());
  double mx = 0;
  double my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0;
  double sxx = 0;
  double syy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  if (sxx == 0 || syy == 0) return std::nullopt;
  return sxy / std::sqrt(sxx * syy);
}

/// Counts k-subsets of nodes that are pairwise adjacent.
inline std::uint64_t k_cliques(const binet::DirectedGraph& g, std::size_t k) {
  const Matrix a = undirected_matrix(g);
  const std::size_t n = a.size();
  std::vector<std::size_t> pick;
  std::uint64_t count = 0;
  // Iterative enumeration of all k-combinations.
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (pick.size() == k) {
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
          if (!a[pick[i]][pick[j]]) return;
        }
      }
      ++count;
      return;
    }
    for (std::size_t v = start; v < n; ++v) {
      pick.push_back(v);
      self(self, v + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  return count;
}

/// Local clustering from explicit neighbor-pair checks.
inline std::vector<double> local_clustering(const binet::DirectedGraph& g) {
  const Matrix a = undirected_matrix(g);
  const std::size_t n = a.size();
  std::vector<double> c(n, 0.0);
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<std::size_t> nb;
    for (std::size_t u = 0; u < n; ++u) {
      if (a[v][u]) nb.push_back(u);
    }
    if (nb.size() < 2) continue;
    double links = 0;
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) links += a[nb[i]][nb[j]] ? 1 : 0;
    }
    c[v] = links / (static_cast<double>(nb.size()) * (nb.size() - 1) / 2.0);
  }
  return c;
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace oracle

#endif  // BINET_TESTS_ORACLES_HPP
