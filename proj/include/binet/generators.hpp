#ifndef BINET_GENERATORS_HPP
#define BINET_GENERATORS_HPP

// Seeded synthetic graphs and samples used by selftest and the test suites.
// All generators take an explicit engine so runs are reproducible.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "binet/graph.hpp"

namespace binet::gen {

using Rng = std::mt19937_64;

/// Undirected graphs are stored with each edge once, u < v.
inline DirectedGraph undirected(std::size_t n, const std::set<Edge>& edges) {
  return DirectedGraph(n, std::vector<Edge>(edges.begin(), edges.end()));
}

inline DirectedGraph complete(std::size_t n) {
  std::set<Edge> edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) edges.emplace(u, v);
  }
  return undirected(n, edges);
}

/// Hub 0 joined to leaves 1..leaves.
inline DirectedGraph star(std::size_t leaves) {
  std::set<Edge> edges;
  for (NodeId v = 1; v <= leaves; ++v) edges.emplace(0, v);
  return undirected(leaves + 1, edges);
}

inline DirectedGraph directed_cycle(std::size_t n) {
  std::vector<Edge> edges;
  for (NodeId v = 0; v < n; ++v) edges.emplace_back(v, static_cast<NodeId>((v + 1) % n));
  return DirectedGraph(n, std::move(edges));
}

/// Ring where each node links to its k nearest neighbors (k even).
inline DirectedGraph ring_lattice(std::size_t n, std::size_t k) {
  std::set<Edge> edges;
  for (NodeId u = 0; u < n; ++u) {
    for (std::size_t j = 1; j <= k / 2; ++j) {
      NodeId v = static_cast<NodeId>((u + j) % n);
      edges.emplace(std::min(u, v), std::max(u, v));
    }
  }
  return undirected(n, edges);
}

/// G(n, p), undirected.
inline DirectedGraph erdos_renyi(std::size_t n, double p, Rng& rng) {
  std::set<Edge> edges;
  if (p <= 0 || n < 2) return undirected(n, edges);
  // Geometric skipping over the n(n-1)/2 candidate pairs.
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double log_q = std::log1p(-std::min(p, 1.0 - 1e-12));
  long long v = 1;
  long long w = -1;
  const auto nn = static_cast<long long>(n);
  while (v < nn) {
    const double r = unit(rng);
    w += 1 + static_cast<long long>(std::floor(std::log1p(-r) / log_q));
    while (w >= v && v < nn) {
      w -= v;
      ++v;
    }
    if (v < nn) edges.emplace(static_cast<NodeId>(w), static_cast<NodeId>(v));
  }
  return undirected(n, edges);
}

/// Ring lattice with each edge's far end rewired uniformly with
/// probability p, avoiding self-loops and duplicates.
inline DirectedGraph watts_strogatz(std::size_t n, std::size_t k, double p, Rng& rng) {
  std::set<Edge> edges;
  auto key = [](NodeId a, NodeId b) { return Edge{std::min(a, b), std::max(a, b)}; };
  for (NodeId u = 0; u < n; ++u) {
    for (std::size_t j = 1; j <= k / 2; ++j) edges.insert(key(u, static_cast<NodeId>((u + j) % n)));
  }
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<NodeId> pick(0, static_cast<NodeId>(n - 1));
  for (std::size_t j = 1; j <= k / 2; ++j) {
    for (NodeId u = 0; u < n; ++u) {
      const NodeId v = static_cast<NodeId>((u + j) % n);
      if (unit(rng) >= p) continue;
      NodeId w = pick(rng);
      std::size_t tries = 0;
      while ((w == u || edges.count(key(u, w))) && ++tries < 4 * n) w = pick(rng);
      if (w == u || edges.count(key(u, w))) continue;
      edges.erase(key(u, v));
      edges.insert(key(u, w));
    }
  }
  return undirected(n, edges);
}

/// Random directed graph with each ordered pair (u != v) present w.p. p.
inline DirectedGraph random_directed(std::size_t n, double p, Rng& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = 0; v < n; ++v) {
      if (u != v && coin(rng)) edges.emplace_back(u, v);
    }
  }
  return DirectedGraph(n, std::move(edges));
}

/// Sparse undirected graph with exactly `m` distinct edges.
inline DirectedGraph random_sparse(std::size_t n, std::size_t m, Rng& rng) {
  std::set<Edge> edges;
  std::uniform_int_distribution<NodeId> pick(0, static_cast<NodeId>(n - 1));
  while (edges.size() < m) {
    NodeId a = pick(rng);
    NodeId b = pick(rng);
    if (a == b) continue;
    edges.emplace(std::min(a, b), std::max(a, b));
  }
  return undirected(n, edges);
}

/// Exact sampler for the discrete power law P(k) = k^-gamma / zeta(gamma)
/// on k >= 1 (Devroye's rejection method for the Zipf distribution).
class ZipfSampler {
 public:
  explicit ZipfSampler(double gamma) : a_(gamma), b_(std::pow(2.0, gamma - 1.0)) {}

  template <class Engine>
  std::uint64_t operator()(Engine& rng) const {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    while (true) {
      const double u = 1.0 - unit(rng);  // (0, 1]
      const double v = unit(rng);
      const double x = std::floor(std::pow(u, -1.0 / (a_ - 1.0)));
      if (x < 1.0 || x > 9.0e18) continue;
      const double t = std::pow(1.0 + 1.0 / x, a_ - 1.0);
      if (v * x * (t - 1.0) / (b_ - 1.0) <= t / b_) return static_cast<std::uint64_t>(x);
    }
  }

 private:
  double a_;
  double b_;
};

}  // namespace binet::gen

#endif  // BINET_GENERATORS_HPP
