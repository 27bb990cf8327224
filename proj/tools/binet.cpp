// binet: reconstruct and measure the networks of a disassembled program.
//
//   binet ingest   <listing>   -o blocks.json
//   binet cfg      <listing>   -o cfg.edges        (+ cfg.edges.json sidecar)
//   binet ddg      <listing>   -o ddg_dir/
//   binet pdg      <listing>   -o pdg_dir/
//   binet metrics  <graph>     [-o metrics.json]
//   binet classify <metrics.json> [-o report.json]
//   binet corpus   <dir>       -o report.csv
//   binet plotdata <input>     -o prefix
//   binet selftest
//
// Exit codes: 0 success, 1 usage error, 2 input parse error, 3 I/O error.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "binet/asm_ingest.hpp"
#include "binet/cfg.hpp"
#include "binet/classify.hpp"
#include "binet/ddg.hpp"
#include "binet/error.hpp"
#include "binet/graph.hpp"
#include "binet/metrics.hpp"
#include "binet/pdg.hpp"
#include "binet/pipeline.hpp"
#include "binet/report.hpp"
#include "binet/selftest.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitIo = 3;

struct PipelineFlags {
  std::string syntax = "intel";
  bool strict_jumps = false;
  std::string edges = "jumps-only";
  bool no_call_edges = false;
  std::string move_opcodes;
  std::string register_aliasing = "none";
  bool reverse_edges = false;
  std::string gamma = "mle";
  std::optional<std::uint64_t> k_min;
  std::string thresholds;
};

void add_listing_flags(CLI::App* cmd, PipelineFlags& f) {
  cmd->add_option("--syntax", f.syntax, "Listing syntax: intel (objdump -M intel) or canonical")
      ->check(CLI::IsMember({"intel", "canonical"}))
      ->capture_default_str();
  cmd->add_flag("--strict-jumps", f.strict_jumps, "Only j* opcodes end a basic block (call/ret do not)");
}

void add_cfg_flags(CLI::App* cmd, PipelineFlags& f) {
  cmd->add_option("--edges", f.edges, "CFG edge policy")
      ->check(CLI::IsMember({"jumps-only", "with-fallthrough"}))
      ->capture_default_str();
  cmd->add_flag("--no-call-edges", f.no_call_edges, "Do not add edges for resolvable call targets");
}

void add_ddg_flags(CLI::App* cmd, PipelineFlags& f) {
  cmd->add_option("--move-opcodes", f.move_opcodes,
                  "Comma-separated data-movement opcodes; trailing * matches a prefix "
                  "(default mov,movzx,movsx,movsd,movss,cmov*)");
  cmd->add_option("--register-aliasing", f.register_aliasing, "Map sub-registers to their 64-bit parent")
      ->check(CLI::IsMember({"none", "full-width"}))
      ->capture_default_str();
  cmd->add_flag("--reverse-edges", f.reverse_edges, "DDG edges point destination -> source");
}

void add_metric_flags(CLI::App* cmd, PipelineFlags& f) {
  cmd->add_option("--gamma", f.gamma, "Power-law fit method")
      ->check(CLI::IsMember({"mle", "ccdf-ls"}))
      ->capture_default_str();
  cmd->add_option("--k-min", f.k_min, "Fix the power-law lower cutoff instead of selecting it");
}

void add_threshold_flag(CLI::App* cmd, PipelineFlags& f) {
  cmd->add_option("--thresholds", f.thresholds,
                  "Classification threshold overrides: inline JSON object or path to a JSON file "
                  "(keys max_ks, min_r_squared, min_gamma, max_k1, clustering_factor, "
                  "assortativity_band)");
}

binet::Thresholds load_thresholds(const std::string& source) {
  binet::Thresholds t;
  if (source.empty()) return t;
  const std::string text = source.front() == '{' ? source : binet::detail::read_text(source);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw binet::InvalidArgument(std::string("--thresholds: ") + e.what());
  }
  binet::from_json(j, t);
  return t;
}

binet::PipelineOptions pipeline_options(const PipelineFlags& f) {
  binet::PipelineOptions o;
  o.syntax = binet::parse_syntax(f.syntax);
  o.strict_jumps = f.strict_jumps;
  o.cfg.edge_policy = binet::parse_edge_policy(f.edges);
  o.cfg.call_edges = !f.no_call_edges;
  if (!f.move_opcodes.empty()) {
    o.ddg.move_opcodes.clear();
    for (const auto& op : binet::detail::split_top_level_commas(f.move_opcodes)) {
      if (!op.empty()) o.ddg.move_opcodes.push_back(binet::detail::to_lower(op));
    }
    if (o.ddg.move_opcodes.empty()) throw binet::InvalidArgument("--move-opcodes must not be empty");
  }
  o.ddg.register_aliasing = binet::parse_register_aliasing(f.register_aliasing);
  o.ddg.reverse_edges = f.reverse_edges;
  o.metrics.gamma_method = binet::parse_gamma_method(f.gamma);
  o.metrics.gamma_k_min = f.k_min;
  o.thresholds = load_thresholds(f.thresholds);
  return o;
}

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw binet::IoError("cannot create '" + dir.string() + "': " + ec.message());
}

void ensure_parent(const fs::path& file) {
  if (file.has_parent_path()) ensure_dir(file.parent_path());
}

void write_or_print(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    ensure_parent(path);
    binet::detail::write_text(path, text);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"binet: control flow, data dependency and program dependence networks from "
               "disassembly listings, with scale-free / small-world / assortativity metrics"};
  app.require_subcommand(1);
  app.fallthrough();

  PipelineFlags flags;
  std::string input;
  std::string output;
  std::uint64_t seed = 1;
  std::size_t jobs = 0;
  std::string format = "edges";
  std::string mode = "undirected";
  std::string input_kind = "asm";
  std::string reports_dir;
  std::string sample;

  app.add_option("--seed", seed, "Seed for subcommands that generate random graphs")->capture_default_str();

  auto* ingest = app.add_subcommand("ingest", "Parse a listing and write its basic blocks as JSON");
  ingest->add_option("input", input, "Disassembly listing")->required();
  ingest->add_option("-o", output, "Output JSON (default stdout)");
  add_listing_flags(ingest, flags);

  auto* cfg = app.add_subcommand("cfg", "Build the control flow graph (edge list + JSON sidecar)");
  cfg->add_option("input", input, "Disassembly listing")->required();
  cfg->add_option("-o", output, "Output edge list; the sidecar goes to <output>.json")->required();
  add_listing_flags(cfg, flags);
  add_cfg_flags(cfg, flags);

  auto* ddg = app.add_subcommand("ddg", "Build one data dependency graph per basic block");
  ddg->add_option("input", input, "Disassembly listing")->required();
  ddg->add_option("-o", output, "Output directory (ddg_<i>.edges + index.json)")->required();
  add_listing_flags(ddg, flags);
  add_ddg_flags(ddg, flags);

  auto* pdg = app.add_subcommand("pdg", "Build the program dependence graph");
  pdg->add_option("input", input, "Disassembly listing")->required();
  pdg->add_option("-o", output, "Output directory")->required();
  add_listing_flags(pdg, flags);
  add_cfg_flags(pdg, flags);
  add_ddg_flags(pdg, flags);

  auto* metrics = app.add_subcommand("metrics", "Compute network metrics for a graph file");
  metrics->add_option("input", input, "Graph file")->required();
  metrics->add_option("-o", output, "Output JSON (default stdout)");
  metrics->add_option("--format", format, "Input format")
      ->check(CLI::IsMember({"edges", "matrix"}))
      ->capture_default_str();
  metrics->add_option("--mode", mode, "Count L and k_max on the undirected view or directed edges")
      ->check(CLI::IsMember({"undirected", "directed"}))
      ->capture_default_str();
  add_metric_flags(metrics, flags);

  auto* classify = app.add_subcommand("classify", "Classify a metrics JSON record");
  classify->add_option("input", input, "Metrics JSON (from `binet metrics`) or a report JSON")->required();
  classify->add_option("-o", output, "Output report JSON (default stdout)");
  classify->add_option("--sample", sample, "Sample name recorded in the report");
  add_threshold_flag(classify, flags);

  auto* corpus = app.add_subcommand("corpus", "CFG metrics for every listing in a directory, as CSV");
  corpus->add_option("input", input, "Directory with one listing per sample")->required();
  corpus->add_option("-o", output, "Output CSV")->required();
  corpus->add_option("--jobs", jobs, "Worker threads (default: available CPUs)");
  corpus->add_option("--reports", reports_dir, "Also write <dir>/<sample>.json reports");
  add_listing_flags(corpus, flags);
  add_cfg_flags(corpus, flags);
  add_metric_flags(corpus, flags);
  add_threshold_flag(corpus, flags);

  auto* plot = app.add_subcommand("plotdata", "Write plot-ready TSV files");
  plot->add_option("input", input, "Disassembly listing or graph file")->required();
  plot->add_option("-o", output, "Output path prefix")->required();
  plot->add_option("--input-kind", input_kind, "asm: CFG degree plots plus DDG size plots; graph: degree plots")
      ->check(CLI::IsMember({"asm", "graph"}))
      ->capture_default_str();
  plot->add_option("--format", format, "Graph file format when --input-kind graph")
      ->check(CLI::IsMember({"edges", "matrix"}))
      ->capture_default_str();
  add_listing_flags(plot, flags);
  add_cfg_flags(plot, flags);
  add_ddg_flags(plot, flags);

  auto* selftest = app.add_subcommand("selftest", "Check reference-table arithmetic and core invariants");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    const binet::PipelineOptions options = pipeline_options(flags);

    if (*ingest) {
      const auto blocks = binet::ingest(binet::detail::read_text(input), options);
      write_or_print(output, binet::blocks_to_json(blocks).dump(2) + "\n");
    } else if (*cfg) {
      const auto a = binet::analyze_program(binet::detail::read_text(input), options);
      ensure_parent(output);
      binet::write_edge_list(a.cfg.graph, output);
      binet::detail::write_text(output + ".json", binet::cfg_sidecar_json(a.cfg).dump(2) + "\n");
      if (a.cfg.diagnostics.unresolved_jumps > 0) {
        std::cerr << "binet: " << a.cfg.diagnostics.unresolved_jumps << " jump(s) without a block target\n";
      }
    } else if (*ddg) {
      const auto a = binet::analyze_program(binet::detail::read_text(input), options);
      ensure_dir(output);
      nlohmann::json index = nlohmann::json::array();
      for (std::size_t i = 0; i < a.ddgs.size(); ++i) {
        const auto& g = a.ddgs[i];
        binet::write_edge_list(g, (fs::path(output) / ("ddg_" + std::to_string(i) + ".edges")).string());
        index.push_back({{"index", i}, {"N", g.node_count()}, {"L", g.edge_count()}, {"labels", g.labels()}});
      }
      binet::detail::write_text(fs::path(output) / "index.json",
                                nlohmann::json{{"blocks", index}}.dump(2) + "\n");
    } else if (*pdg) {
      const auto a = binet::analyze_program(binet::detail::read_text(input), options);
      binet::write_pdg(binet::program_pdg(a), output);
    } else if (*metrics) {
      binet::MetricsOptions mo = options.metrics;
      mo.mode = mode == "directed" ? binet::MetricsMode::directed : binet::MetricsMode::undirected;
      const auto g = binet::read_edge_list(input, binet::parse_graph_format(format));
      nlohmann::json j = binet::compute_metrics(g, mo);
      write_or_print(output, j.dump(2) + "\n");
    } else if (*classify) {
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(binet::detail::read_text(input));
      } catch (const nlohmann::json::exception& e) {
        throw binet::ParseError(input + ": " + e.what(), 0);
      }
      if (j.contains("metrics")) {
        if (sample.empty()) sample = j.value("sample", "");
        j = j.at("metrics");
      }
      const auto m = j.get<binet::NetworkMetrics>();
      const auto c = binet::classify(m, options.thresholds);
      write_or_print(output, binet::report_json({sample, m, c}).dump(2) + "\n");
    } else if (*corpus) {
      std::optional<fs::path> reports;
      if (!reports_dir.empty()) reports = reports_dir;
      const auto result = binet::run_corpus(input, options, jobs, reports);
      for (const auto& f : result.failures) std::cerr << "binet: skipped " << f.sample << ": " << f.message << '\n';
      ensure_parent(output);
      binet::render_corpus_csv(result.rows, output);
      if (result.samples > 0 && result.rows.empty()) {
        std::cerr << "binet: every sample failed\n";
        return kExitParse;
      }
    } else if (*plot) {
      std::vector<fs::path> written;
      ensure_parent(output);
      if (input_kind == "graph") {
        written = binet::emit_plot_data(binet::read_edge_list(input, binet::parse_graph_format(format)), output);
      } else {
        const auto a = binet::analyze_program(binet::detail::read_text(input), options);
        written = binet::emit_plot_data(a.cfg.graph, output, &a.ddgs);
      }
      for (const auto& p : written) std::cerr << "wrote " << p.string() << '\n';
    } else if (*selftest) {
      return binet::run_selftest(seed, std::cout) ? 0 : 1;
    }
  } catch (const binet::InvalidArgument& e) {
    std::cerr << "binet: " << e.what() << '\n';
    return kExitUsage;
  } catch (const binet::IoError& e) {
    std::cerr << "binet: " << e.what() << '\n';
    return kExitIo;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "binet: " << e.what() << '\n';
    return kExitIo;
  } catch (const binet::Error& e) {
    std::cerr << "binet: " << e.what() << '\n';
    return kExitParse;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "binet: malformed JSON input: " << e.what() << '\n';
    return kExitParse;
  }
  return 0;
}
