#ifndef BINET_PIPELINE_HPP
#define BINET_PIPELINE_HPP

// Listing -> blocks -> CFG + per-block DDGs -> PDG, and the corpus runner
// that applies it to a directory of listings.

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <filesystem>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "binet/asm_ingest.hpp"
#include "binet/cfg.hpp"
#include "binet/classify.hpp"
#include "binet/ddg.hpp"
#include "binet/metrics.hpp"
#include "binet/pdg.hpp"
#include "binet/report.hpp"

namespace binet {

struct PipelineOptions {
  Syntax syntax = Syntax::intel;
  bool strict_jumps = false;  // only the j* family ends a block
  CfgConfig cfg;              // bare_target_radix is derived from `syntax`
  DdgConfig ddg;
  MetricsOptions metrics;
  Thresholds thresholds;
};

struct ProgramAnalysis {
  std::vector<BasicBlock> blocks;
  ControlFlowGraph cfg;
  std::vector<DirectedGraph> ddgs;  // one per block
};

inline std::vector<BasicBlock> ingest(std::string_view text, const PipelineOptions& options) {
  return segment_blocks(parse_disassembly(text, options.syntax),
                        options.strict_jumps ? strict_jump_opcodes() : default_jump_opcodes());
}

inline CfgConfig effective_cfg_config(const PipelineOptions& options) {
  CfgConfig c = options.cfg;
  c.bare_target_radix = options.syntax == Syntax::intel ? 16 : 10;
  return c;
}

inline ProgramAnalysis analyze_program(std::string_view text, const PipelineOptions& options = {}) {
  ProgramAnalysis a;
  a.blocks = ingest(text, options);
  a.cfg = build_cfg(a.blocks, effective_cfg_config(options));
  a.ddgs.reserve(a.blocks.size());
  for (const auto& block : a.blocks) a.ddgs.push_back(build_ddg(block, options.ddg));
  return a;
}

inline std::string hex_address(std::uint64_t address) {
  std::ostringstream os;
  os << "0x" << std::hex << address;
  return os.str();
}

/// PDG whose CFG nodes are labeled with block start addresses.
inline ProgramDependenceGraph program_pdg(const ProgramAnalysis& a) {
  std::vector<std::string> labels;
  labels.reserve(a.cfg.block_addresses.size());
  for (auto address : a.cfg.block_addresses) labels.push_back(hex_address(address));
  DirectedGraph cfg(a.cfg.graph.node_count(), a.cfg.graph.edges(), std::move(labels));
  return build_pdg(std::move(cfg), a.ddgs);
}

struct SampleFailure {
  std::string sample;
  std::string message;
};

struct CorpusResult {
  std::vector<CorpusRow> rows;  // sorted by sample name
  std::vector<SampleFailure> failures;
  std::size_t samples = 0;
};

inline std::string sample_name(const std::filesystem::path& file) { return file.stem().string(); }

/// Regular, non-hidden files directly inside `dir`, sorted by name.
inline std::vector<std::filesystem::path> corpus_files(const std::filesystem::path& dir) {
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec)) throw IoError("'" + dir.string() + "' is not a directory");
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir, ec)) {
    if (!entry.is_regular_file()) continue;
    if (entry.path().filename().string().starts_with(".")) continue;
    files.push_back(entry.path());
  }
  if (ec) throw IoError("cannot list '" + dir.string() + "': " + ec.message());
  std::sort(files.begin(), files.end());
  return files;
}

/// Builds every sample's CFG metrics on up to `jobs` threads. A failing
/// sample is recorded and skipped. With `reports_dir`, each sample whose
/// metrics classify also gets `<reports_dir>/<sample>.json`.
inline CorpusResult run_corpus(const std::filesystem::path& dir, const PipelineOptions& options,
                               std::size_t jobs = 0,
                               std::optional<std::filesystem::path> reports_dir = std::nullopt) {
  const auto files = corpus_files(dir);
  if (reports_dir) std::filesystem::create_directories(*reports_dir);
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min(jobs, std::max<std::size_t>(files.size(), 1));

  struct Slot {
    std::optional<CorpusRow> row;
    std::optional<std::string> error;
  };
  std::vector<Slot> slots(files.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < files.size(); i = next++) {
      const std::string name = sample_name(files[i]);
      try {
        const std::string text = detail::read_text(files[i]);
        const ProgramAnalysis a = analyze_program(text, options);
        const NetworkMetrics m = compute_metrics(a.cfg.graph, options.metrics);
        slots[i].row = corpus_row(name, m);
        if (reports_dir && m.N >= 2) {
          render_report_json(m, classify(m, options.thresholds), *reports_dir / (name + ".json"), name);
        }
      } catch (const std::exception& e) {
        slots[i].error = e.what();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
  }

  CorpusResult result;
  result.samples = files.size();
  for (std::size_t i = 0; i < files.size(); ++i) {
    if (slots[i].row) result.rows.push_back(std::move(*slots[i].row));
    if (slots[i].error) result.failures.push_back({sample_name(files[i]), *slots[i].error});
  }
  std::stable_sort(result.rows.begin(), result.rows.end(),
                   [](const CorpusRow& a, const CorpusRow& b) { return a.sample < b.sample; });
  return result;
}

}  // namespace binet

#endif  // BINET_PIPELINE_HPP
