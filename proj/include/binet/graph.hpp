#ifndef BINET_GRAPH_HPP
#define BINET_GRAPH_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <istream>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "binet/detail/strings.hpp"
#include "binet/error.hpp"

namespace binet {

using NodeId = std::uint32_t;
using Edge = std::pair<NodeId, NodeId>;

/// Immutable directed graph over dense ids [0, N). Duplicate edges collapse;
/// self-loops are kept and flagged. Optional labels live in a side table.
class DirectedGraph {
 public:
  DirectedGraph() = default;

  DirectedGraph(std::size_t node_count, std::vector<Edge> edges,
                std::vector<std::string> labels = {})
      : node_count_(node_count), edges_(std::move(edges)), labels_(std::move(labels)) {
    for (const auto& [u, v] : edges_) {
      if (u >= node_count_ || v >= node_count_) {
        throw EndpointOutOfRange("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                 ") outside [0, " + std::to_string(node_count_) + ")");
      }
    }
    if (!labels_.empty() && labels_.size() != node_count_) {
      throw InvalidArgument("label table size " + std::to_string(labels_.size()) +
                            " does not match node count " + std::to_string(node_count_));
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    self_loops_ = std::any_of(edges_.begin(), edges_.end(),
                              [](const Edge& e) { return e.first == e.second; });

    out_offsets_.assign(node_count_ + 1, 0);
    for (const auto& e : edges_) ++out_offsets_[e.first + 1];
    for (std::size_t i = 0; i < node_count_; ++i) out_offsets_[i + 1] += out_offsets_[i];
    out_targets_.reserve(edges_.size());
    for (const auto& e : edges_) out_targets_.push_back(e.second);
  }

  std::size_t node_count() const noexcept { return node_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  bool has_self_loops() const noexcept { return self_loops_; }

  bool has_labels() const noexcept { return !labels_.empty(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(NodeId v) const { return labels_.at(v); }

  std::span<const NodeId> successors(NodeId v) const {
    return {out_targets_.data() + out_offsets_[v], out_targets_.data() + out_offsets_[v + 1]};
  }

  bool has_edge(NodeId u, NodeId v) const {
    auto s = successors(u);
    return std::binary_search(s.begin(), s.end(), v);
  }

  /// Structural equality: same N, same edge set, same labels.
  friend bool operator==(const DirectedGraph& a, const DirectedGraph& b) {
    return a.node_count_ == b.node_count_ && a.edges_ == b.edges_ && a.labels_ == b.labels_;
  }

 private:
  std::size_t node_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::string> labels_;
  bool self_loops_ = false;
  std::vector<std::size_t> out_offsets_{0};
  std::vector<NodeId> out_targets_;
};

inline DirectedGraph build_graph(std::size_t n, std::vector<Edge> edge_list) {
  return DirectedGraph(n, std::move(edge_list));
}

/// Simple undirected graph derived from a DirectedGraph: reciprocal edges
/// merge, self-loops are dropped. Neighbor lists are sorted.
class UndirectedView {
 public:
  explicit UndirectedView(const DirectedGraph& g) : offsets_(g.node_count() + 1, 0) {
    std::vector<Edge> pairs;
    pairs.reserve(g.edge_count() * 2);
    for (const auto& [u, v] : g.edges()) {
      if (u == v) continue;
      pairs.emplace_back(u, v);
      pairs.emplace_back(v, u);
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    for (const auto& p : pairs) ++offsets_[p.first + 1];
    for (std::size_t i = 0; i < g.node_count(); ++i) offsets_[i + 1] += offsets_[i];
    neighbors_.reserve(pairs.size());
    for (const auto& p : pairs) neighbors_.push_back(p.second);
  }

  std::size_t node_count() const noexcept { return offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return neighbors_.size() / 2; }
  std::size_t degree(NodeId v) const { return offsets_[v + 1] - offsets_[v]; }

  std::span<const NodeId> neighbors(NodeId v) const {
    return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
  }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<NodeId> neighbors_;
};

enum class DegreeMode { in, out, total, undirected };

/// Directed modes count self-loops; undirected mode uses UndirectedView.
inline std::vector<std::size_t> degree_sequence(const DirectedGraph& g, DegreeMode mode) {
  std::vector<std::size_t> deg(g.node_count(), 0);
  if (mode == DegreeMode::undirected) {
    UndirectedView view(g);
    for (NodeId v = 0; v < deg.size(); ++v) deg[v] = view.degree(v);
    return deg;
  }
  for (const auto& [u, v] : g.edges()) {
    if (mode != DegreeMode::in) ++deg[u];
    if (mode != DegreeMode::out) ++deg[v];
  }
  return deg;
}

// ---------------------------------------------------------------------------
// Edge-list text format:
//
//   # comment
//   nodes <N>        (optional; must precede edges)
//   <u> <v>          (one directed edge per line)
//
// Without a header N is max id + 1. The canonical form written by
// write_edge_list is the header followed by edges in sorted order.
// ---------------------------------------------------------------------------

enum class GraphFormat { edges, matrix };

inline GraphFormat parse_graph_format(std::string_view name) {
  if (name == "edges") return GraphFormat::edges;
  if (name == "matrix") return GraphFormat::matrix;
  throw InvalidArgument("unknown graph format '" + std::string(name) + "'");
}

inline DirectedGraph parse_edge_list(std::istream& in) {
  std::optional<std::size_t> declared;
  std::vector<Edge> edges;
  std::size_t max_id_plus_one = 0;
  std::size_t line_no = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view body = line;
    if (auto hash = body.find('#'); hash != std::string_view::npos) body = body.substr(0, hash);
    auto tokens = detail::split_ws(body);
    if (tokens.empty()) continue;
    if (tokens[0] == "nodes") {
      if (tokens.size() != 2) throw ParseError("malformed nodes header", line_no);
      if (declared || !edges.empty()) throw ParseError("nodes header must come first", line_no);
      auto n = detail::parse_uint(tokens[1], 10);
      if (!n) throw ParseError("bad node count '" + std::string(tokens[1]) + "'", line_no);
      declared = *n;
      continue;
    }
    if (tokens.size() != 2) throw ParseError("expected '<u> <v>'", line_no);
    auto u = detail::parse_uint(tokens[0], 10);
    auto v = detail::parse_uint(tokens[1], 10);
    if (!u || !v || *u > UINT32_MAX - 1 || *v > UINT32_MAX - 1) {
      throw ParseError("bad edge '" + std::string(detail::trim(body)) + "'", line_no);
    }
    edges.emplace_back(static_cast<NodeId>(*u), static_cast<NodeId>(*v));
    max_id_plus_one = std::max<std::size_t>(max_id_plus_one, std::max(*u, *v) + 1);
    if (declared && max_id_plus_one > *declared) {
      throw InconsistentHeader("declared " + std::to_string(*declared) +
                                   " nodes but edge references id " +
                                   std::to_string(max_id_plus_one - 1),
                               line_no);
    }
  }
  return DirectedGraph(declared.value_or(max_id_plus_one), std::move(edges));
}

/// Square CSV adjacency matrix; any nonzero cell (i, j) is the edge i -> j.
inline DirectedGraph parse_adjacency_matrix(std::istream& in) {
  std::vector<Edge> edges;
  std::size_t rows = 0;
  std::optional<std::size_t> width;
  std::size_t line_no = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view body = detail::trim(line);
    if (body.empty() || body.front() == '#') continue;
    std::size_t col = 0;
    std::size_t start = 0;
    while (true) {
      auto comma = body.find(',', start);
      auto cell = detail::trim(body.substr(start, comma == std::string_view::npos
                                                      ? std::string_view::npos
                                                      : comma - start));
      double value = 0;
      std::istringstream cs{std::string(cell)};
      if (cell.empty() || !(cs >> value) || !cs.eof()) {
        throw ParseError("bad matrix cell '" + std::string(cell) + "'", line_no);
      }
      if (value != 0) edges.emplace_back(static_cast<NodeId>(rows), static_cast<NodeId>(col));
      ++col;
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (width && *width != col) throw ParseError("ragged matrix row", line_no);
    width = col;
    ++rows;
  }
  if (width && *width != rows) {
    throw ParseError("matrix is " + std::to_string(rows) + "x" + std::to_string(*width) +
                         ", expected square",
                     line_no);
  }
  return DirectedGraph(rows, std::move(edges));
}

inline DirectedGraph read_edge_list(const std::string& path, GraphFormat format = GraphFormat::edges) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  return format == GraphFormat::matrix ? parse_adjacency_matrix(in) : parse_edge_list(in);
}

inline std::string format_edge_list(const DirectedGraph& g) {
  std::string out = "nodes " + std::to_string(g.node_count()) + "\n";
  for (const auto& [u, v] : g.edges()) {
    out += std::to_string(u);
    out += ' ';
    out += std::to_string(v);
    out += '\n';
  }
  return out;
}

inline void write_edge_list(const DirectedGraph& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << format_edge_list(g);
  if (!out) throw IoError("write failed for '" + path + "'");
}

}  // namespace binet

#endif  // BINET_GRAPH_HPP
