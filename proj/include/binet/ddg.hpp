#ifndef BINET_DDG_HPP
#define BINET_DDG_HPP

// Per-block data dependency graphs. Nodes are normalized data operands;
// each data-movement instruction `op dst, src` contributes the edge
// src -> dst (dataflow direction). Immediates never become nodes.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "binet/asm_ingest.hpp"
#include "binet/detail/strings.hpp"
#include "binet/graph.hpp"

namespace binet {

enum class OperandKind { register_, memory, immediate };

inline std::string_view to_string(OperandKind kind) {
  switch (kind) {
    case OperandKind::register_: return "register";
    case OperandKind::memory: return "memory";
    case OperandKind::immediate: return "immediate";
  }
  return "memory";
}

struct OperandKey {
  std::string normalized;
  OperandKind kind = OperandKind::memory;

  friend bool operator==(const OperandKey&, const OperandKey&) = default;
};

enum class RegisterAliasing { none, full_width };

inline RegisterAliasing parse_register_aliasing(std::string_view name) {
  if (name == "none") return RegisterAliasing::none;
  if (name == "full-width" || name == "full_width") return RegisterAliasing::full_width;
  throw InvalidArgument("unknown register aliasing '" + std::string(name) + "'");
}

struct DdgConfig {
  /// Exact opcodes, or prefixes when the entry ends in `*`.
  std::vector<std::string> move_opcodes = {"mov", "movzx", "movsx", "movsd", "movss", "cmov*"};
  RegisterAliasing register_aliasing = RegisterAliasing::none;
  bool reverse_edges = false;
};

namespace detail {

/// x86/x86-64 register name -> full-width parent.
inline const std::unordered_map<std::string, std::string>& register_table() {
  static const std::unordered_map<std::string, std::string> table = [] {
    std::unordered_map<std::string, std::string> t;
    const char* legacy[][5] = {
        {"rax", "eax", "ax", "al", "ah"}, {"rbx", "ebx", "bx", "bl", "bh"},
        {"rcx", "ecx", "cx", "cl", "ch"}, {"rdx", "edx", "dx", "dl", "dh"},
    };
    for (auto& row : legacy) {
      for (auto* name : row) t[name] = row[0];
    }
    const char* indexed[][4] = {
        {"rsi", "esi", "si", "sil"}, {"rdi", "edi", "di", "dil"},
        {"rbp", "ebp", "bp", "bpl"}, {"rsp", "esp", "sp", "spl"},
    };
    for (auto& row : indexed) {
      for (auto* name : row) t[name] = row[0];
    }
    for (int i = 8; i <= 15; ++i) {
      const std::string base = "r" + std::to_string(i);
      for (const char* suffix : {"", "d", "w", "b", "l"}) t[base + suffix] = base;
    }
    t["rip"] = "rip";
    t["eip"] = "rip";
    t["ip"] = "rip";
    for (int i = 0; i < 32; ++i) {
      const std::string n = std::to_string(i);
      t["zmm" + n] = "zmm" + n;
      t["ymm" + n] = "zmm" + n;
      t["xmm" + n] = "zmm" + n;
    }
    for (int i = 0; i < 8; ++i) {
      const std::string n = std::to_string(i);
      t["mm" + n] = "mm" + n;
      t["st" + n] = "st" + n;
      t["k" + n] = "k" + n;
      t["cr" + n] = "cr" + n;
      t["dr" + n] = "dr" + n;
    }
    t["st"] = "st0";
    for (const char* seg : {"cs", "ds", "es", "fs", "gs", "ss"}) t[seg] = seg;
    return t;
  }();
  return table;
}

inline bool is_register(std::string_view name) {
  return register_table().count(std::string(name)) != 0;
}

inline std::string register_name(std::string_view name, RegisterAliasing aliasing) {
  if (aliasing == RegisterAliasing::full_width) {
    auto it = register_table().find(std::string(name));
    if (it != register_table().end()) return it->second;
  }
  return std::string(name);
}

/// Signed integer literal: decimal or 0x-prefixed hex.
inline std::optional<std::int64_t> parse_signed_literal(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  auto value = parse_number(s, 10);
  if (!value || *value > static_cast<std::uint64_t>(INT64_MAX)) return std::nullopt;
  const auto v = static_cast<std::int64_t>(*value);
  return negative ? -v : v;
}

inline std::string strip_size_qualifier(std::string_view s) {
  static constexpr std::string_view sizes[] = {
      "byte", "word", "dword", "qword", "tbyte", "fword", "oword", "xmmword", "ymmword", "zmmword"};
  std::string_view rest = trim(s);
  for (auto size : sizes) {
    if (rest.size() > size.size() && rest.substr(0, size.size()) == size &&
        is_space(rest[size.size()])) {
      auto after = trim(rest.substr(size.size()));
      if (after.substr(0, 3) == "ptr" && (after.size() == 3 || !std::isalnum(static_cast<unsigned char>(after[3])))) {
        return std::string(trim(after.substr(3)));
      }
    }
  }
  return std::string(rest);
}

/// Canonical spelling of an address expression: non-numeric terms in source
/// order joined with '+', numeric terms folded into one decimal displacement.
/// Returns nullopt when a term is neither a register, a scaled register, nor
/// a literal.
inline std::optional<std::string> canonical_address(std::string_view expr, RegisterAliasing aliasing,
                                                    bool* all_numeric) {
  std::string compact;
  for (char c : expr) {
    if (!is_space(c)) compact.push_back(c);
  }
  if (compact.empty()) return std::nullopt;

  std::vector<std::string> terms;
  std::int64_t displacement = 0;
  std::size_t i = 0;
  while (i < compact.size()) {
    char sign = '+';
    if (compact[i] == '+' || compact[i] == '-') {
      sign = compact[i];
      ++i;
    }
    std::size_t j = i;
    while (j < compact.size() && compact[j] != '+' && compact[j] != '-') ++j;
    std::string_view term(compact.data() + i, j - i);
    if (term.empty()) return std::nullopt;
    if (auto lit = parse_signed_literal(term)) {
      displacement += sign == '-' ? -*lit : *lit;
    } else {
      std::string name;
      auto star = term.find('*');
      if (star != std::string_view::npos) {
        auto reg = term.substr(0, star);
        auto scale = term.substr(star + 1);
        if (!is_register(reg) || !parse_signed_literal(scale)) return std::nullopt;
        name = register_name(reg, aliasing) + "*" + std::to_string(*parse_signed_literal(scale));
      } else {
        if (!is_register(term)) return std::nullopt;
        name = register_name(term, aliasing);
      }
      terms.push_back(sign == '-' ? "-" + name : name);
    }
    i = j;
  }

  *all_numeric = terms.empty();
  std::string out;
  for (const auto& t : terms) {
    if (!out.empty() && t.front() != '-') out.push_back('+');
    out += t;
  }
  if (terms.empty()) {
    out = std::to_string(displacement);
  } else if (displacement != 0) {
    if (displacement > 0) out.push_back('+');
    out += std::to_string(displacement);
  }
  return out;
}

inline std::string collapse_whitespace(std::string_view s) {
  std::string out;
  for (auto token : split_ws(s)) {
    if (!out.empty()) out.push_back(' ');
    out.append(token);
  }
  return out;
}

}  // namespace detail

/// Canonical node identity for an operand string.
///
/// Lowercases, drops `<size> ptr` qualifiers and brackets, and rewrites
/// address expressions as `base[+index*scale]±disp` with a decimal
/// displacement (`rbp - 0x2c` -> `rbp-44`). Bare or bracketed absolute
/// addresses keep their brackets (`[4096]`) so they never read back as
/// immediates. Unrecognized spellings are kept verbatim as memory.
inline OperandKey normalize_operand(std::string_view raw,
                                    RegisterAliasing aliasing = RegisterAliasing::none) {
  const std::string lowered = detail::to_lower(detail::trim(raw));
  std::string body = detail::strip_size_qualifier(lowered);

  if (auto v = detail::parse_signed_literal(body)) {
    return {std::to_string(*v), OperandKind::immediate};
  }
  if (detail::is_register(body)) {
    return {detail::register_name(body, aliasing), OperandKind::register_};
  }

  std::string segment;
  std::string_view expr = body;
  if (auto colon = expr.find(':'); colon != std::string_view::npos) {
    auto seg = detail::trim(expr.substr(0, colon));
    if (seg.size() == 2 && detail::is_register(seg)) {
      segment = std::string(seg) + ":";
      expr = detail::trim(expr.substr(colon + 1));
    }
  }
  if (expr.size() >= 2 && expr.front() == '[' && expr.back() == ']') {
    expr = detail::trim(expr.substr(1, expr.size() - 2));
  }

  bool all_numeric = false;
  if (auto canon = detail::canonical_address(expr, aliasing, &all_numeric)) {
    if (all_numeric) return {segment + "[" + *canon + "]", OperandKind::memory};
    if (canon->find_first_of("+-*") != std::string::npos) return {segment + *canon, OperandKind::memory};
    // A lone dereferenced register keeps its brackets.
    return {segment + "[" + *canon + "]", OperandKind::memory};
  }
  return {detail::collapse_whitespace(lowered), OperandKind::memory};
}

inline bool is_move_opcode(std::string_view opcode, const DdgConfig& config) {
  for (const auto& pattern : config.move_opcodes) {
    if (!pattern.empty() && pattern.back() == '*') {
      if (opcode.starts_with(std::string_view(pattern).substr(0, pattern.size() - 1))) return true;
    } else if (opcode == pattern) {
      return true;
    }
  }
  return false;
}

struct DataMove {
  OperandKey src;
  OperandKey dst;

  friend bool operator==(const DataMove&, const DataMove&) = default;
};

/// (source -> destination) for each data-movement instruction in the block,
/// in instruction order. Pairs touching an immediate are dropped.
inline std::vector<DataMove> extract_data_moves(const BasicBlock& block, const DdgConfig& config = {}) {
  std::vector<DataMove> moves;
  for (const auto& instr : block.instructions) {
    if (instr.operands.size() < 2 || !is_move_opcode(instr.opcode, config)) continue;
    OperandKey dst = normalize_operand(instr.operands[0], config.register_aliasing);
    OperandKey src = normalize_operand(instr.operands[1], config.register_aliasing);
    if (dst.kind == OperandKind::immediate || src.kind == OperandKind::immediate) continue;
    moves.push_back({std::move(src), std::move(dst)});
  }
  return moves;
}

/// Nodes are the distinct operands of the extracted moves, numbered by first
/// appearance (source before destination); labels carry the normalized
/// spelling. Self-loops are dropped.
inline DirectedGraph build_ddg(const BasicBlock& block, const DdgConfig& config = {}) {
  std::unordered_map<std::string, NodeId> ids;
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  auto intern = [&](const OperandKey& key) {
    auto [it, inserted] = ids.try_emplace(key.normalized, static_cast<NodeId>(labels.size()));
    if (inserted) labels.push_back(key.normalized);
    return it->second;
  };
  for (const auto& move : extract_data_moves(block, config)) {
    NodeId s = intern(move.src);
    NodeId d = intern(move.dst);
    if (s == d) continue;
    if (config.reverse_edges) std::swap(s, d);
    edges.emplace_back(s, d);
  }
  const std::size_t n = labels.size();
  return DirectedGraph(n, std::move(edges), std::move(labels));
}

}  // namespace binet

#endif  // BINET_DDG_HPP
