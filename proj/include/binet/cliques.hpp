#ifndef BINET_CLIQUES_HPP
#define BINET_CLIQUES_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "binet/error.hpp"
#include "binet/graph.hpp"

namespace binet {

/// Nodes in degeneracy order (repeatedly remove a minimum-degree node).
inline std::vector<NodeId> degeneracy_order(const UndirectedView& view) {
  const std::size_t n = view.node_count();
  std::vector<std::size_t> degree(n);
  std::size_t max_degree = 0;
  for (NodeId v = 0; v < n; ++v) {
    degree[v] = view.degree(v);
    max_degree = std::max(max_degree, degree[v]);
  }
  // Bucket queue keyed by current degree.
  std::vector<std::size_t> bucket_start(max_degree + 2, 0);
  for (NodeId v = 0; v < n; ++v) ++bucket_start[degree[v] + 1];
  for (std::size_t d = 0; d <= max_degree; ++d) bucket_start[d + 1] += bucket_start[d];
  std::vector<NodeId> order(n);
  std::vector<std::size_t> position(n);
  {
    auto next = bucket_start;
    for (NodeId v = 0; v < n; ++v) {
      position[v] = next[degree[v]]++;
      order[position[v]] = v;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const NodeId v = order[i];
    for (NodeId u : view.neighbors(v)) {
      if (position[u] <= i || degree[u] <= degree[v]) continue;
      // Swap u to the front of its bucket, then shrink its degree by one.
      const std::size_t du = degree[u];
      const std::size_t front = std::max(bucket_start[du], i + 1);
      const NodeId w = order[front];
      if (w != u) {
        std::swap(order[front], order[position[u]]);
        std::swap(position[u], position[w]);
      }
      bucket_start[du] = front + 1;
      --degree[u];
    }
  }
  return order;
}

namespace detail {

inline std::uint64_t extend_cliques(const std::vector<std::vector<NodeId>>& forward,
                                    const std::vector<NodeId>& candidates, std::size_t remaining,
                                    std::vector<std::vector<NodeId>>& scratch, std::size_t depth) {
  if (remaining == 1) return candidates.size();
  std::uint64_t count = 0;
  auto& next = scratch[depth];
  for (NodeId v : candidates) {
    const auto& fv = forward[v];
    if (fv.size() + 1 < remaining) continue;
    next.clear();
    std::set_intersection(candidates.begin(), candidates.end(), fv.begin(), fv.end(),
                          std::back_inserter(next));
    if (next.size() + 1 < remaining) continue;
    // Deeper calls only touch scratch[depth + 1] onward.
    count += extend_cliques(forward, next, remaining - 1, scratch, depth + 1);
  }
  return count;
}

}  // namespace detail

/// Number of complete subgraphs on k nodes in the undirected view (all of
/// them, not only maximal ones). Enumerates along a degeneracy orientation,
/// so cost is O(m * d^(k-2)) for degeneracy d.
inline std::uint64_t count_k_cliques(const DirectedGraph& g, std::size_t k) {
  if (k == 0) throw InvalidArgument("clique size must be positive");
  UndirectedView view(g);
  const std::size_t n = view.node_count();
  if (k == 1) return n;
  if (k == 2) return view.edge_count();

  const auto order = degeneracy_order(view);
  std::vector<std::size_t> rank(n);
  for (std::size_t i = 0; i < n; ++i) rank[order[i]] = i;
  // Forward neighbors (later in the order), sorted by node id.
  std::vector<std::vector<NodeId>> forward(n);
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v : view.neighbors(u)) {
      if (rank[v] > rank[u]) forward[u].push_back(v);
    }
  }
  std::vector<std::vector<NodeId>> scratch(k);
  std::uint64_t total = 0;
  for (NodeId u = 0; u < n; ++u) {
    if (forward[u].size() + 1 < k) continue;
    total += detail::extend_cliques(forward, forward[u], k - 1, scratch, 0);
  }
  return total;
}

}  // namespace binet

#endif  // BINET_CLIQUES_HPP
