#ifndef BINET_ASM_INGEST_HPP
#define BINET_ASM_INGEST_HPP

// Disassembly listing ingestion: line parsing and basic-block segmentation.
//
// Two listing syntaxes are accepted:
//   intel      output of `objdump -d -M intel`; the raw byte column is
//              dropped, jump targets print as bare hex.
//   canonical  one instruction per line, `<hexaddr>: <opcode> <operands>`.
// AT&T syntax is not supported.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include <json.hpp>

#include "binet/detail/strings.hpp"
#include "binet/error.hpp"

namespace binet {

enum class Syntax { intel, canonical };

inline Syntax parse_syntax(std::string_view name) {
  if (name == "intel") return Syntax::intel;
  if (name == "canonical") return Syntax::canonical;
  throw InvalidArgument("unsupported disassembly syntax '" + std::string(name) +
                        "' (expected intel or canonical)");
}

struct Instruction {
  std::uint64_t address = 0;
  std::string opcode;
  std::vector<std::string> operands;
  std::string raw_line;

  /// Equality ignores `raw_line`.
  friend bool operator==(const Instruction& a, const Instruction& b) {
    return a.address == b.address && a.opcode == b.opcode && a.operands == b.operands;
  }
};

/// A maximal run of instructions containing at most one jump-family
/// instruction, which is then its last instruction.
struct BasicBlock {
  std::size_t index = 0;
  std::vector<Instruction> instructions;
  std::optional<std::size_t> terminator_index;

  const Instruction* terminator() const {
    return terminator_index ? &instructions[*terminator_index] : nullptr;
  }
  std::uint64_t start_address() const {
    return instructions.empty() ? 0 : instructions.front().address;
  }

  friend bool operator==(const BasicBlock&, const BasicBlock&) = default;
};

using OpcodeSet = std::unordered_set<std::string>;

/// Control-transfer opcodes that end a block, `call` and `ret` included.
inline const OpcodeSet& default_jump_opcodes() {
  static const OpcodeSet set = {"jmp", "je",  "jne", "jz",  "jnz", "jg",  "jge",
                                "jl",  "jle", "ja",  "jae", "jb",  "jbe", "js",
                                "jns", "jo",  "jno", "jp",  "jnp", "call", "ret"};
  return set;
}

/// The j* family only.
inline const OpcodeSet& strict_jump_opcodes() {
  static const OpcodeSet set = [] {
    OpcodeSet s = default_jump_opcodes();
    s.erase("call");
    s.erase("ret");
    return s;
  }();
  return set;
}

namespace detail {

inline bool is_hex_pair_column(std::string_view field) {
  auto tokens = split_ws(field);
  if (tokens.empty()) return false;
  for (auto t : tokens) {
    if (t.size() != 2 || !std::isxdigit(static_cast<unsigned char>(t[0])) ||
        !std::isxdigit(static_cast<unsigned char>(t[1])))
      return false;
  }
  return true;
}

inline bool is_instruction_prefix(std::string_view token) {
  static const std::unordered_set<std::string_view> prefixes = {
      "bnd", "notrack", "lock", "rep",    "repe", "repz", "repne", "repnz",
      "data16", "addr32", "cs", "ds", "es", "fs", "gs", "ss"};
  return prefixes.count(token) != 0;
}

/// Removes objdump symbol annotations such as ` <puts@plt>`.
inline std::string strip_symbol_annotations(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '<') {
      auto close = s.find('>', i);
      if (close != std::string_view::npos) {
        i = close;
        continue;
      }
    }
    out.push_back(s[i]);
  }
  return out;
}

/// Leading field of a line that looks like an instruction address. Returns
/// nullopt when the line is not instruction-shaped at all.
inline std::optional<std::string_view> address_field(std::string_view line) {
  auto body = trim(line);
  auto colon = body.find(':');
  if (colon == std::string_view::npos || colon == 0) return std::nullopt;
  auto field = body.substr(0, colon);
  for (char c : field) {
    if (!std::isalnum(static_cast<unsigned char>(c))) return std::nullopt;
  }
  if (colon + 1 < body.size() && !is_space(body[colon + 1])) return std::nullopt;
  bool all_hex = true;
  for (char c : field) all_hex = all_hex && std::isxdigit(static_cast<unsigned char>(c));
  const bool digit_led = std::isdigit(static_cast<unsigned char>(field.front())) != 0;
  if (!all_hex && !digit_led) return std::nullopt;
  return field;
}

inline Instruction parse_mnemonic(std::uint64_t address, std::string_view text,
                                  Syntax syntax, std::string raw, std::size_t line_no) {
  auto comment = text.find_first_of("#;");
  if (comment != std::string_view::npos) text = text.substr(0, comment);
  std::string cleaned = strip_symbol_annotations(text);
  std::string_view rest = trim(cleaned);

  std::string opcode;
  while (!rest.empty()) {
    std::size_t end = 0;
    while (end < rest.size() && !is_space(rest[end])) ++end;
    opcode = to_lower(rest.substr(0, end));
    rest = trim(rest.substr(end));
    if (!(is_instruction_prefix(opcode) && !rest.empty())) break;
  }
  if (opcode.empty()) throw MalformedLine("empty opcode", line_no);

  if (syntax == Syntax::intel) {
    // Older binutils keep the q suffix on these even in Intel mode.
    if (opcode == "callq") opcode = "call";
    else if (opcode == "retq") opcode = "ret";
    else if (opcode == "jmpq") opcode = "jmp";
  }

  Instruction instr;
  instr.address = address;
  instr.opcode = std::move(opcode);
  instr.operands = split_top_level_commas(rest);
  instr.raw_line = std::move(raw);
  return instr;
}

}  // namespace detail

/// Parses a listing into instructions in listing order. Lines that are not
/// instruction-shaped (section headers, symbol labels, blank lines, objdump
/// byte-only continuation lines) are skipped.
inline std::vector<Instruction> parse_disassembly(std::string_view text, Syntax syntax) {
  std::vector<Instruction> out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto nl = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() : nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    auto field = detail::address_field(line);
    if (!field) continue;
    auto address = detail::parse_number(*field, 16);
    if (!address) throw MalformedLine("unparseable address '" + std::string(*field) + "'", line_no);

    std::string_view after = line.substr(line.find(':') + 1);
    std::string mnemonic_text;
    if (syntax == Syntax::intel) {
      std::vector<std::string_view> columns;
      std::size_t start = 0;
      while (start <= after.size()) {
        auto tab = after.find('\t', start);
        auto col = detail::trim(after.substr(start, tab == std::string_view::npos
                                                        ? std::string_view::npos
                                                        : tab - start));
        if (!col.empty()) columns.push_back(col);
        if (tab == std::string_view::npos) break;
        start = tab + 1;
      }
      std::size_t first = 0;
      if (!columns.empty() && detail::is_hex_pair_column(columns.front())) first = 1;
      for (std::size_t i = first; i < columns.size(); ++i) {
        if (!mnemonic_text.empty()) mnemonic_text.push_back(' ');
        mnemonic_text.append(columns[i]);
      }
      if (detail::trim(mnemonic_text).empty()) continue;
    } else {
      mnemonic_text = std::string(detail::trim(after));
    }
    out.push_back(detail::parse_mnemonic(*address, mnemonic_text, syntax, std::string(line),
                                         line_no));
  }
  return out;
}

/// Renders an instruction in canonical syntax.
inline std::string render_instruction(const Instruction& instr) {
  std::ostringstream os;
  os << std::hex << instr.address << std::dec << ": " << instr.opcode;
  for (std::size_t i = 0; i < instr.operands.size(); ++i) {
    os << (i == 0 ? " " : ", ") << instr.operands[i];
  }
  return os.str();
}

/// Splits after every jump-family instruction. Block indices run from 0.
inline std::vector<BasicBlock> segment_blocks(const std::vector<Instruction>& instrs,
                                              const OpcodeSet& jump_opcodes = default_jump_opcodes()) {
  std::vector<BasicBlock> blocks;
  BasicBlock current;
  for (const auto& instr : instrs) {
    current.instructions.push_back(instr);
    if (jump_opcodes.count(instr.opcode)) {
      current.terminator_index = current.instructions.size() - 1;
      current.index = blocks.size();
      blocks.push_back(std::move(current));
      current = BasicBlock{};
    }
  }
  if (!current.instructions.empty()) {
    current.index = blocks.size();
    blocks.push_back(std::move(current));
  }
  return blocks;
}

inline void to_json(nlohmann::json& j, const Instruction& instr) {
  j = nlohmann::json{{"address", instr.address},
                     {"opcode", instr.opcode},
                     {"operands", instr.operands}};
}

inline void from_json(const nlohmann::json& j, Instruction& instr) {
  j.at("address").get_to(instr.address);
  j.at("opcode").get_to(instr.opcode);
  j.at("operands").get_to(instr.operands);
}

inline void to_json(nlohmann::json& j, const BasicBlock& block) {
  j = nlohmann::json{{"index", block.index}, {"instructions", block.instructions}};
  if (block.terminator_index) {
    j["terminator_index"] = *block.terminator_index;
  } else {
    j["terminator_index"] = nullptr;
  }
}

inline void from_json(const nlohmann::json& j, BasicBlock& block) {
  j.at("index").get_to(block.index);
  j.at("instructions").get_to(block.instructions);
  const auto& t = j.at("terminator_index");
  block.terminator_index =
      t.is_null() ? std::nullopt : std::optional<std::size_t>(t.get<std::size_t>());
}

inline nlohmann::json blocks_to_json(const std::vector<BasicBlock>& blocks) {
  return nlohmann::json{{"blocks", blocks}};
}

inline std::vector<BasicBlock> blocks_from_json(const nlohmann::json& j) {
  return j.at("blocks").get<std::vector<BasicBlock>>();
}

}  // namespace binet

#endif  // BINET_ASM_INGEST_HPP
