#ifndef BINET_PDG_HPP
#define BINET_PDG_HPP

// Program dependence graph: the CFG together with one DDG per CFG node
// (a node-indexed tensor of DDG adjacencies), plus the block <-> operand
// incidence graph derived from it.

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <json.hpp>

#include "binet/error.hpp"
#include "binet/graph.hpp"

namespace binet {

class ProgramDependenceGraph {
 public:
  ProgramDependenceGraph(DirectedGraph cfg, std::vector<DirectedGraph> ddgs,
                         std::vector<std::string> operands)
      : cfg_(std::move(cfg)), ddgs_(std::move(ddgs)), operands_(std::move(operands)) {
    for (std::size_t i = 0; i < operands_.size(); ++i) {
      if (!operand_ids_.emplace(operands_[i], i).second) {
        throw InvalidArgument("duplicate operand '" + operands_[i] + "'");
      }
    }
  }

  const DirectedGraph& cfg() const noexcept { return cfg_; }
  const std::vector<DirectedGraph>& ddgs() const noexcept { return ddgs_; }
  const DirectedGraph& ddg(NodeId block) const { return ddgs_.at(block); }

  /// Global operand ids in first-appearance order; index = id.
  const std::vector<std::string>& operands() const noexcept { return operands_; }
  std::size_t operand_id(const std::string& operand) const { return operand_ids_.at(operand); }

  friend bool operator==(const ProgramDependenceGraph& a, const ProgramDependenceGraph& b) {
    return a.cfg_ == b.cfg_ && a.ddgs_ == b.ddgs_ && a.operands_ == b.operands_;
  }

 private:
  DirectedGraph cfg_;
  std::vector<DirectedGraph> ddgs_;
  std::vector<std::string> operands_;
  std::unordered_map<std::string, std::size_t> operand_ids_;
};

/// Missing blocks get the empty DDG. Every DDG must carry operand labels.
inline ProgramDependenceGraph build_pdg(DirectedGraph cfg, std::map<NodeId, DirectedGraph> ddgs) {
  const std::size_t n = cfg.node_count();
  for (const auto& [block, ddg] : ddgs) {
    if (block >= n) {
      throw UnknownCfgNode("DDG keyed by block " + std::to_string(block) + " but the CFG has " +
                           std::to_string(n) + " nodes");
    }
    if (ddg.node_count() > 0 && !ddg.has_labels()) {
      throw InvalidArgument("DDG for block " + std::to_string(block) + " has no operand labels");
    }
  }
  std::vector<DirectedGraph> cells(n);
  std::vector<std::string> operands;
  std::unordered_map<std::string, std::size_t> seen;
  for (auto& [block, ddg] : ddgs) {
    for (const auto& label : ddg.labels()) {
      if (seen.emplace(label, operands.size()).second) operands.push_back(label);
    }
    cells[block] = std::move(ddg);
  }
  return ProgramDependenceGraph(std::move(cfg), std::move(cells), std::move(operands));
}

inline ProgramDependenceGraph build_pdg(DirectedGraph cfg, std::vector<DirectedGraph> ddgs) {
  std::map<NodeId, DirectedGraph> keyed;
  for (std::size_t i = 0; i < ddgs.size(); ++i) keyed.emplace(static_cast<NodeId>(i), std::move(ddgs[i]));
  return build_pdg(std::move(cfg), std::move(keyed));
}

/// Blocks are nodes [0, N_cfg), operands follow at N_cfg + operand id.
/// Edge block -> operand iff the operand is a node of that block's DDG.
inline DirectedGraph project_bipartite(const ProgramDependenceGraph& pdg) {
  const std::size_t blocks = pdg.cfg().node_count();
  std::vector<Edge> edges;
  for (std::size_t b = 0; b < blocks; ++b) {
    for (const auto& label : pdg.ddg(static_cast<NodeId>(b)).labels()) {
      edges.emplace_back(static_cast<NodeId>(b), static_cast<NodeId>(blocks + pdg.operand_id(label)));
    }
  }
  return DirectedGraph(blocks + pdg.operands().size(), std::move(edges));
}

// Directory layout: cfg.edges, ddg_<i>.edges, bipartite.edges and
// operands.json. operands.json holds the operand -> global id map plus,
// per block, the global id of each DDG node so labels survive the trip.

inline void write_pdg(const ProgramDependenceGraph& pdg, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create '" + dir.string() + "': " + ec.message());

  write_edge_list(pdg.cfg(), (dir / "cfg.edges").string());
  nlohmann::json block_nodes = nlohmann::json::array();
  for (std::size_t b = 0; b < pdg.ddgs().size(); ++b) {
    const auto& ddg = pdg.ddgs()[b];
    write_edge_list(ddg, (dir / ("ddg_" + std::to_string(b) + ".edges")).string());
    nlohmann::json ids = nlohmann::json::array();
    for (const auto& label : ddg.labels()) ids.push_back(pdg.operand_id(label));
    block_nodes.push_back(std::move(ids));
  }
  write_edge_list(project_bipartite(pdg), (dir / "bipartite.edges").string());

  nlohmann::json operands = nlohmann::json::object();
  for (std::size_t i = 0; i < pdg.operands().size(); ++i) operands[pdg.operands()[i]] = i;
  nlohmann::json doc = {{"operands", operands}, {"block_nodes", block_nodes}};
  if (pdg.cfg().has_labels()) doc["cfg_labels"] = pdg.cfg().labels();

  std::ofstream out(dir / "operands.json");
  if (!out) throw IoError("cannot write '" + (dir / "operands.json").string() + "'");
  out << doc.dump(2) << '\n';
}

inline ProgramDependenceGraph read_pdg(const std::filesystem::path& dir) {
  std::ifstream in(dir / "operands.json");
  if (!in) throw IoError("cannot open '" + (dir / "operands.json").string() + "'");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("operands.json: ") + e.what(), 0);
  }

  std::vector<std::string> operands(doc.at("operands").size());
  for (const auto& [name, id] : doc.at("operands").items()) {
    const auto i = id.get<std::size_t>();
    if (i >= operands.size()) throw ParseError("operand id out of range in operands.json", 0);
    operands[i] = name;
  }

  DirectedGraph cfg_plain = read_edge_list((dir / "cfg.edges").string());
  std::vector<std::string> cfg_labels;
  if (doc.contains("cfg_labels")) doc.at("cfg_labels").get_to(cfg_labels);
  DirectedGraph cfg(cfg_plain.node_count(), cfg_plain.edges(), std::move(cfg_labels));

  const auto& block_nodes = doc.at("block_nodes");
  if (block_nodes.size() != cfg.node_count()) {
    throw ParseError("block_nodes has " + std::to_string(block_nodes.size()) + " entries, CFG has " +
                         std::to_string(cfg.node_count()) + " nodes",
                     0);
  }
  std::vector<DirectedGraph> ddgs;
  ddgs.reserve(cfg.node_count());
  for (std::size_t b = 0; b < cfg.node_count(); ++b) {
    DirectedGraph plain = read_edge_list((dir / ("ddg_" + std::to_string(b) + ".edges")).string());
    std::vector<std::string> labels;
    for (const auto& id : block_nodes[b]) labels.push_back(operands.at(id.get<std::size_t>()));
    ddgs.emplace_back(plain.node_count(), plain.edges(), std::move(labels));
  }
  return ProgramDependenceGraph(std::move(cfg), std::move(ddgs), std::move(operands));
}

}  // namespace binet

#endif  // BINET_PDG_HPP
