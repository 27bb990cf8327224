#ifndef BINET_METRICS_HPP
#define BINET_METRICS_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "binet/error.hpp"
#include "binet/graph.hpp"
#include "binet/powerlaw.hpp"

namespace binet {

enum class MetricsMode { undirected, directed };

/// One record per graph. Optional fields are absent where the quantity is
/// undefined (tiny or edgeless graphs, zero-variance degree pairs, failed
/// power-law fits).
struct NetworkMetrics {
  std::size_t N = 0;
  std::size_t L = 0;
  std::size_t k_max = 0;
  double mean_degree = 0;
  std::optional<double> k1;
  std::optional<double> k2;
  std::optional<double> pearson_r;
  std::optional<double> gamma;
  GammaMethod gamma_method = GammaMethod::mle;
  std::optional<double> gamma_goodness;
  std::size_t k_min = 0;
  bool gamma_low_confidence = false;
  double clustering_global = 0;
  double clustering_avg_local = 0;
  std::size_t components = 0;
  std::size_t kin_max = 0;
  std::size_t kout_max = 0;

  friend bool operator==(const NetworkMetrics&, const NetworkMetrics&) = default;
};

/// Power-law fits on fewer samples than this are flagged low confidence.
constexpr std::size_t kLowConfidenceSampleSize = 50;

inline std::size_t count_components(const UndirectedView& view) {
  const std::size_t n = view.node_count();
  std::vector<NodeId> parent(n);
  std::iota(parent.begin(), parent.end(), NodeId{0});
  auto find = [&](NodeId x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  std::size_t components = n;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v : view.neighbors(u)) {
      if (v <= u) continue;
      NodeId a = find(u);
      NodeId b = find(v);
      if (a != b) {
        parent[a] = b;
        --components;
      }
    }
  }
  return components;
}

/// Fills N, L, k_max, mean degree 2L/N and the undirected component count.
/// Undirected mode counts merged undirected edges; directed mode counts
/// directed edges and total (in + out) degree. Self-loops never count.
inline NetworkMetrics basic_metrics(const DirectedGraph& g, MetricsMode mode = MetricsMode::undirected) {
  if (g.node_count() == 0) throw DegenerateSize("metrics need at least one node");
  NetworkMetrics m;
  UndirectedView view(g);
  m.N = g.node_count();
  if (mode == MetricsMode::undirected) {
    m.L = view.edge_count();
    for (NodeId v = 0; v < m.N; ++v) m.k_max = std::max(m.k_max, view.degree(v));
  } else {
    std::vector<std::size_t> total(m.N, 0);
    for (const auto& [u, v] : g.edges()) {
      if (u == v) continue;
      ++m.L;
      ++total[u];
      ++total[v];
    }
    m.k_max = *std::max_element(total.begin(), total.end());
  }
  m.mean_degree = 2.0 * static_cast<double>(m.L) / static_cast<double>(m.N);
  m.components = count_components(view);
  return m;
}

struct DiameterPredictors {
  double k1;                 // k_max / ln N
  std::optional<double> k2;  // ln N / ln(2L/N), absent unless 2L/N > 1
};

inline DiameterPredictors diameter_predictors(std::size_t n, std::size_t l, std::size_t k_max) {
  if (n < 2) throw DegenerateSize("diameter predictors need N >= 2, got " + std::to_string(n));
  const double ln_n = std::log(static_cast<double>(n));
  const double mean_degree = 2.0 * static_cast<double>(l) / static_cast<double>(n);
  DiameterPredictors p{static_cast<double>(k_max) / ln_n, std::nullopt};
  if (mean_degree > 1.0) p.k2 = ln_n / std::log(mean_degree);
  return p;
}

/// Degree assortativity: Pearson correlation of the undirected degrees at
/// the two ends of every edge, each edge listed in both orientations.
/// nullopt when the endpoint degrees have zero variance.
inline std::optional<double> assortativity(const DirectedGraph& g) {
  UndirectedView view(g);
  if (view.edge_count() == 0) throw EmptyGraph("assortativity of a graph without edges");
  // Exact integer moments so the zero-variance test is not a float compare.
  __int128 pairs = 0;
  __int128 sum = 0;
  __int128 sum_sq = 0;
  __int128 sum_prod = 0;
  for (NodeId u = 0; u < view.node_count(); ++u) {
    const __int128 du = static_cast<__int128>(view.degree(u));
    for (NodeId v : view.neighbors(u)) {
      const __int128 dv = static_cast<__int128>(view.degree(v));
      ++pairs;
      sum += du;
      sum_sq += du * du;
      sum_prod += du * dv;
    }
  }
  const __int128 variance = pairs * sum_sq - sum * sum;
  if (variance == 0) return std::nullopt;
  const __int128 covariance = pairs * sum_prod - sum * sum;
  const double r = static_cast<double>(static_cast<long double>(covariance) /
                                       static_cast<long double>(variance));
  return std::clamp(r, -1.0, 1.0);
}

struct Clustering {
  double global = 0;     // 3 * triangles / connected triples
  double avg_local = 0;  // mean local coefficient, degree < 2 counts as 0
};

/// Triangles through each node of the undirected view.
inline std::vector<std::uint64_t> triangles_per_node(const UndirectedView& view) {
  const std::size_t n = view.node_count();
  // Orient each edge toward the endpoint later in (degree, id) order; every
  // triangle is then found exactly once from its lowest-ranked corner.
  auto before = [&](NodeId a, NodeId b) {
    const auto da = view.degree(a);
    const auto db = view.degree(b);
    return da < db || (da == db && a < b);
  };
  std::vector<std::vector<NodeId>> forward(n);
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v : view.neighbors(u)) {
      if (before(u, v)) forward[u].push_back(v);
    }
  }
  std::vector<std::uint64_t> tri(n, 0);
  std::vector<char> mark(n, 0);
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v : forward[u]) mark[v] = 1;
    for (NodeId v : forward[u]) {
      for (NodeId w : forward[v]) {
        if (mark[w]) {
          ++tri[u];
          ++tri[v];
          ++tri[w];
        }
      }
    }
    for (NodeId v : forward[u]) mark[v] = 0;
  }
  return tri;
}

inline Clustering clustering(const DirectedGraph& g) {
  UndirectedView view(g);
  const std::size_t n = view.node_count();
  Clustering c;
  if (n == 0) return c;
  const auto tri = triangles_per_node(view);
  double closed = 0;
  double triples = 0;
  double local_sum = 0;
  for (NodeId v = 0; v < n; ++v) {
    const double d = static_cast<double>(view.degree(v));
    const double pairs = d * (d - 1) / 2;
    closed += static_cast<double>(tri[v]);
    triples += pairs;
    if (pairs > 0) local_sum += static_cast<double>(tri[v]) / pairs;
  }
  c.global = triples > 0 ? closed / triples : 0.0;
  c.avg_local = local_sum / static_cast<double>(n);
  return c;
}

/// Undirected degree -> number of nodes with that degree.
inline std::map<std::size_t, std::size_t> degree_histogram(const DirectedGraph& g) {
  std::map<std::size_t, std::size_t> hist;
  for (auto d : degree_sequence(g, DegreeMode::undirected)) ++hist[d];
  return hist;
}

/// (rank, degree) with degrees non-increasing and ranks starting at 1.
inline std::vector<std::pair<std::size_t, std::size_t>> degree_rank(const DirectedGraph& g) {
  auto deg = degree_sequence(g, DegreeMode::undirected);
  std::sort(deg.begin(), deg.end(), std::greater<>());
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(deg.size());
  for (std::size_t i = 0; i < deg.size(); ++i) out.emplace_back(i + 1, deg[i]);
  return out;
}

struct MetricsOptions {
  MetricsMode mode = MetricsMode::undirected;
  GammaMethod gamma_method = GammaMethod::mle;
  std::optional<std::uint64_t> gamma_k_min;
};

/// Every metric for one graph.
inline NetworkMetrics compute_metrics(const DirectedGraph& g, const MetricsOptions& options = {}) {
  NetworkMetrics m = basic_metrics(g, options.mode);
  if (m.N >= 2) {
    auto p = diameter_predictors(m.N, m.L, m.k_max);
    m.k1 = p.k1;
    m.k2 = p.k2;
  }
  if (UndirectedView(g).edge_count() > 0) m.pearson_r = assortativity(g);

  const Clustering c = clustering(g);
  m.clustering_global = c.global;
  m.clustering_avg_local = c.avg_local;

  m.gamma_method = options.gamma_method;
  std::vector<std::uint64_t> degrees;
  for (auto d : degree_sequence(g, DegreeMode::undirected)) degrees.push_back(d);
  try {
    const PowerLawFit fit = fit_power_law(degrees, options.gamma_method, options.gamma_k_min);
    m.gamma = fit.gamma;
    m.gamma_goodness = fit.goodness;
    m.k_min = fit.k_min;
    m.gamma_low_confidence = fit.sample_size < kLowConfidenceSampleSize;
  } catch (const InsufficientData&) {
  } catch (const AllDegreesEqual&) {
  }

  std::vector<std::size_t> in(m.N, 0);
  std::vector<std::size_t> out(m.N, 0);
  for (const auto& [u, v] : g.edges()) {
    if (u == v) continue;
    ++out[u];
    ++in[v];
  }
  m.kin_max = *std::max_element(in.begin(), in.end());
  m.kout_max = *std::max_element(out.begin(), out.end());
  return m;
}

}  // namespace binet

#endif  // BINET_METRICS_HPP
