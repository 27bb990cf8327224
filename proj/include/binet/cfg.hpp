#ifndef BINET_CFG_HPP
#define BINET_CFG_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "binet/asm_ingest.hpp"
#include "binet/graph.hpp"

namespace binet {

enum class EdgePolicy { jumps_only, with_fallthrough };

inline EdgePolicy parse_edge_policy(std::string_view name) {
  if (name == "jumps-only" || name == "jumps_only") return EdgePolicy::jumps_only;
  if (name == "with-fallthrough" || name == "with_fallthrough") return EdgePolicy::with_fallthrough;
  throw InvalidArgument("unknown edge policy '" + std::string(name) + "'");
}

/// Block start address -> block index.
using AddressIndex = std::unordered_map<std::uint64_t, std::size_t>;

struct CfgConfig {
  EdgePolicy edge_policy = EdgePolicy::jumps_only;
  bool call_edges = true;
  /// Radix of jump targets written without a `0x` prefix. objdump prints
  /// them as bare hex; the canonical syntax treats them as decimal.
  int bare_target_radix = 10;
};

struct CfgDiagnostics {
  std::size_t unresolved_jumps = 0;
};

struct ControlFlowGraph {
  DirectedGraph graph;
  std::vector<std::uint64_t> block_addresses;
  CfgDiagnostics diagnostics;
};

inline AddressIndex make_address_index(const std::vector<BasicBlock>& blocks) {
  AddressIndex index;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (!blocks[i].instructions.empty()) index.emplace(blocks[i].start_address(), i);
  }
  return index;
}

inline bool is_conditional_jump(std::string_view opcode) {
  return (opcode.size() > 1 && opcode.front() == 'j' && opcode != "jmp") ||
         opcode.starts_with("loop");
}

inline bool is_return(std::string_view opcode) {
  return opcode == "ret" || opcode == "retn" || opcode == "retf" || opcode == "iret" ||
         opcode == "iretq";
}

inline bool is_call(std::string_view opcode) { return opcode == "call"; }

/// Block index targeted by a direct jump, or nullopt for indirect and
/// out-of-listing targets.
inline std::optional<std::size_t> resolve_jump_target(const Instruction& instr,
                                                      const AddressIndex& index,
                                                      int bare_radix = 10) {
  if (instr.operands.empty()) return std::nullopt;
  std::string_view target = detail::trim(instr.operands.front());
  for (std::string_view qualifier : {"short ", "near ", "far "}) {
    if (detail::starts_with_ci(target, qualifier)) target = detail::trim(target.substr(qualifier.size()));
  }
  auto address = detail::parse_number(target, bare_radix);
  if (!address) return std::nullopt;
  auto it = index.find(*address);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

/// Blocks become nodes; each resolvable jump terminator becomes an edge.
/// Under with_fallthrough a block also links to its successor when it ends
/// in a conditional jump, a call, or no jump at all.
inline ControlFlowGraph build_cfg(const std::vector<BasicBlock>& blocks, const CfgConfig& config = {}) {
  const AddressIndex index = make_address_index(blocks);
  ControlFlowGraph cfg;
  std::vector<Edge> edges;
  cfg.block_addresses.reserve(blocks.size());
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const BasicBlock& block = blocks[i];
    cfg.block_addresses.push_back(block.start_address());
    const Instruction* term = block.terminator();

    if (term && !is_return(term->opcode) && (config.call_edges || !is_call(term->opcode))) {
      if (auto target = resolve_jump_target(*term, index, config.bare_target_radix)) {
        edges.emplace_back(static_cast<NodeId>(i), static_cast<NodeId>(*target));
      } else {
        ++cfg.diagnostics.unresolved_jumps;
      }
    }

    if (config.edge_policy == EdgePolicy::with_fallthrough && i + 1 < blocks.size()) {
      const bool falls_through =
          !term || is_conditional_jump(term->opcode) || is_call(term->opcode);
      if (falls_through) edges.emplace_back(static_cast<NodeId>(i), static_cast<NodeId>(i + 1));
    }
  }
  cfg.graph = DirectedGraph(blocks.size(), std::move(edges));
  return cfg;
}

/// JSON sidecar for a CFG edge list: node id -> block start address.
inline nlohmann::json cfg_sidecar_json(const ControlFlowGraph& cfg) {
  nlohmann::json nodes = nlohmann::json::array();
  for (std::size_t i = 0; i < cfg.block_addresses.size(); ++i) {
    nodes.push_back({{"id", i}, {"address", cfg.block_addresses[i]}});
  }
  return {{"nodes", nodes},
          {"diagnostics", {{"unresolved_jumps", cfg.diagnostics.unresolved_jumps}}}};
}

}  // namespace binet

#endif  // BINET_CFG_HPP
