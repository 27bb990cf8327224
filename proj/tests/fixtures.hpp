#ifndef BINET_TESTS_FIXTURES_HPP
#define BINET_TESTS_FIXTURES_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "binet/graph.hpp"

namespace fixtures {

/// Undirected graph (both orientations stored) with exactly `n` nodes, `l`
/// edges and maximum degree `k_max`: node 0 is a hub over 1..k_max, then a
/// path over 1..n-1, then skip-2 and skip-3 chords until `l` edges exist.
inline binet::DirectedGraph shaped_graph(std::size_t n, std::size_t l, std::size_t k_max) {
  if (k_max >= n || k_max > l || k_max < 7) throw std::invalid_argument("unsupported shape");
  std::vector<binet::Edge> edges;
  std::size_t count = 0;
  auto add = [&](std::size_t u, std::size_t v) {
    edges.emplace_back(static_cast<binet::NodeId>(u), static_cast<binet::NodeId>(v));
    edges.emplace_back(static_cast<binet::NodeId>(v), static_cast<binet::NodeId>(u));
    ++count;
  };
  for (std::size_t v = 1; v <= k_max; ++v) add(0, v);
  for (std::size_t skip = 1; skip <= 3 && count < l; ++skip) {
    for (std::size_t u = 1; u + skip < n && count < l; ++u) add(u, u + skip);
  }
  if (count < l) throw std::invalid_argument("too many edges for shape");
  return binet::DirectedGraph(n, std::move(edges));
}

}  // namespace fixtures

#endif  // BINET_TESTS_FIXTURES_HPP
