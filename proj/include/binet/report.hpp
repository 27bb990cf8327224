#ifndef BINET_REPORT_HPP
#define BINET_REPORT_HPP

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "binet/classify.hpp"
#include "binet/detail/strings.hpp"
#include "binet/error.hpp"
#include "binet/graph.hpp"
#include "binet/metrics.hpp"

namespace binet {

namespace detail {

template <class T>
nlohmann::json optional_json(const std::optional<T>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

template <class T>
std::optional<T> json_optional(const nlohmann::json& j, std::string_view key) {
  const auto& v = j.at(std::string(key));
  if (v.is_null()) return std::nullopt;
  return v.get<T>();
}

inline void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

inline std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// `%.3f`, except values that round to zero never carry a minus sign.
inline std::string fixed3(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  if (std::string_view(buf) == "-0.000") return "0.000";
  return buf;
}

inline std::string fixed6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

}  // namespace detail

// --- JSON ------------------------------------------------------------------

inline void to_json(nlohmann::json& j, const NetworkMetrics& m) {
  using detail::optional_json;
  j = nlohmann::json{
      {"N", m.N},
      {"L", m.L},
      {"k_max", m.k_max},
      {"mean_degree", m.mean_degree},
      {"k1", optional_json(m.k1)},
      {"k2", optional_json(m.k2)},
      {"pearson_r", optional_json(m.pearson_r)},
      {"gamma", optional_json(m.gamma)},
      {"gamma_method", to_string(m.gamma_method)},
      {"gamma_goodness", optional_json(m.gamma_goodness)},
      {"gamma_low_confidence", m.gamma_low_confidence},
      {"k_min", m.k_min},
      {"clustering_global", m.clustering_global},
      {"clustering_avg_local", m.clustering_avg_local},
      {"components", m.components},
      {"directed", {{"kin_max", m.kin_max}, {"kout_max", m.kout_max}}},
  };
}

inline void from_json(const nlohmann::json& j, NetworkMetrics& m) {
  using detail::json_optional;
  j.at("N").get_to(m.N);
  j.at("L").get_to(m.L);
  j.at("k_max").get_to(m.k_max);
  j.at("mean_degree").get_to(m.mean_degree);
  m.k1 = json_optional<double>(j, "k1");
  m.k2 = json_optional<double>(j, "k2");
  m.pearson_r = json_optional<double>(j, "pearson_r");
  m.gamma = json_optional<double>(j, "gamma");
  m.gamma_method = parse_gamma_method(j.at("gamma_method").get<std::string>());
  m.gamma_goodness = json_optional<double>(j, "gamma_goodness");
  m.gamma_low_confidence = j.value("gamma_low_confidence", false);
  j.at("k_min").get_to(m.k_min);
  j.at("clustering_global").get_to(m.clustering_global);
  j.at("clustering_avg_local").get_to(m.clustering_avg_local);
  j.at("components").get_to(m.components);
  j.at("directed").at("kin_max").get_to(m.kin_max);
  j.at("directed").at("kout_max").get_to(m.kout_max);
}

inline void to_json(nlohmann::json& j, const Thresholds& t) {
  j = nlohmann::json{{"max_ks", t.max_ks},
                     {"min_r_squared", t.min_r_squared},
                     {"min_gamma", t.min_gamma},
                     {"max_k1", t.max_k1},
                     {"clustering_factor", t.clustering_factor},
                     {"assortativity_band", t.assortativity_band}};
}

/// Missing keys keep their defaults; unknown keys are rejected.
inline void from_json(const nlohmann::json& j, Thresholds& t) {
  if (!j.is_object()) throw InvalidArgument("thresholds must be a JSON object");
  const std::map<std::string, double*> fields = {
      {"max_ks", &t.max_ks},
      {"min_r_squared", &t.min_r_squared},
      {"min_gamma", &t.min_gamma},
      {"max_k1", &t.max_k1},
      {"clustering_factor", &t.clustering_factor},
      {"assortativity_band", &t.assortativity_band}};
  for (const auto& [key, value] : j.items()) {
    auto it = fields.find(key);
    if (it == fields.end()) throw InvalidArgument("unknown threshold '" + key + "'");
    if (!value.is_number()) throw InvalidArgument("threshold '" + key + "' must be a number");
    *it->second = value.get<double>();
  }
}

inline void to_json(nlohmann::json& j, const Verdict& v) {
  j = nlohmann::json{{"value", v.value}, {"reason", v.reason}};
}

inline void from_json(const nlohmann::json& j, Verdict& v) {
  j.at("value").get_to(v.value);
  j.at("reason").get_to(v.reason);
}

inline void to_json(nlohmann::json& j, const ClassificationEvidence& e) {
  using detail::optional_json;
  j = nlohmann::json{{"gamma", optional_json(e.gamma)},
                     {"gamma_goodness", optional_json(e.gamma_goodness)},
                     {"gamma_method", to_string(e.gamma_method)},
                     {"k1", e.k1},
                     {"clustering_avg_local", e.clustering_avg_local},
                     {"clustering_baseline", e.clustering_baseline},
                     {"pearson_r", optional_json(e.pearson_r)}};
}

inline void from_json(const nlohmann::json& j, ClassificationEvidence& e) {
  using detail::json_optional;
  e.gamma = json_optional<double>(j, "gamma");
  e.gamma_goodness = json_optional<double>(j, "gamma_goodness");
  e.gamma_method = parse_gamma_method(j.at("gamma_method").get<std::string>());
  j.at("k1").get_to(e.k1);
  j.at("clustering_avg_local").get_to(e.clustering_avg_local);
  j.at("clustering_baseline").get_to(e.clustering_baseline);
  e.pearson_r = json_optional<double>(j, "pearson_r");
}

inline void to_json(nlohmann::json& j, const NetworkClassification& c) {
  j = nlohmann::json{{"scale_free", c.scale_free},
                     {"small_world", c.small_world},
                     {"assortativity_class", to_string(c.assortativity_class)},
                     {"assortativity_reason", c.assortativity_reason},
                     {"evidence", c.evidence},
                     {"thresholds_used", c.thresholds_used}};
}

inline void from_json(const nlohmann::json& j, NetworkClassification& c) {
  j.at("scale_free").get_to(c.scale_free);
  j.at("small_world").get_to(c.small_world);
  c.assortativity_class = parse_assortativity_class(j.at("assortativity_class").get<std::string>());
  j.at("assortativity_reason").get_to(c.assortativity_reason);
  j.at("evidence").get_to(c.evidence);
  c.thresholds_used = Thresholds{};
  from_json(j.at("thresholds_used"), c.thresholds_used);
}

struct Report {
  std::string sample;
  NetworkMetrics metrics;
  NetworkClassification classification;

  friend bool operator==(const Report&, const Report&) = default;
};

inline nlohmann::json report_json(const Report& r) {
  return nlohmann::json{
      {"sample", r.sample}, {"metrics", r.metrics}, {"classification", r.classification}};
}

inline Report parse_report_json(const nlohmann::json& j) {
  Report r;
  j.at("sample").get_to(r.sample);
  j.at("metrics").get_to(r.metrics);
  j.at("classification").get_to(r.classification);
  return r;
}

inline void render_report_json(const NetworkMetrics& m, const NetworkClassification& c,
                               const std::filesystem::path& path, std::string sample = {}) {
  detail::write_text(path, report_json({std::move(sample), m, c}).dump(2) + "\n");
}

// --- Corpus CSV --------------------------------------------------------------
//
// Header `sample,N,L,k_max,k1,k2,pearson,gamma`. Reals carry three decimals;
// undefined values are empty fields.

struct CorpusRow {
  std::string sample;
  std::size_t N = 0;
  std::size_t L = 0;
  std::size_t k_max = 0;
  std::optional<double> k1;
  std::optional<double> k2;
  std::optional<double> pearson;
  std::optional<double> gamma;

  friend bool operator==(const CorpusRow&, const CorpusRow&) = default;
};

inline constexpr std::string_view kCorpusCsvHeader = "sample,N,L,k_max,k1,k2,pearson,gamma";

inline CorpusRow corpus_row(std::string sample, const NetworkMetrics& m) {
  return {std::move(sample), m.N, m.L, m.k_max, m.k1, m.k2, m.pearson_r, m.gamma};
}

namespace detail {

inline std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

inline std::vector<std::string> split_csv_line(std::string_view line, std::size_t line_no) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur.push_back('"');
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur.push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (quoted) throw ParseError("unterminated quote", line_no);
  fields.push_back(std::move(cur));
  return fields;
}

inline std::string optional_fixed3(const std::optional<double>& v) {
  return v ? fixed3(*v) : std::string();
}

}  // namespace detail

inline std::string format_corpus_csv(const std::vector<CorpusRow>& rows) {
  std::string out(kCorpusCsvHeader);
  out += '\n';
  for (const auto& r : rows) {
    out += detail::csv_field(r.sample) + ',' + std::to_string(r.N) + ',' + std::to_string(r.L) +
           ',' + std::to_string(r.k_max) + ',' + detail::optional_fixed3(r.k1) + ',' +
           detail::optional_fixed3(r.k2) + ',' + detail::optional_fixed3(r.pearson) + ',' +
           detail::optional_fixed3(r.gamma) + '\n';
  }
  return out;
}

inline void render_corpus_csv(const std::vector<CorpusRow>& rows, const std::filesystem::path& path) {
  detail::write_text(path, format_corpus_csv(rows));
}

inline std::vector<CorpusRow> parse_corpus_csv(std::string_view text) {
  std::vector<CorpusRow> rows;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  bool header_seen = false;
  while (pos < text.size()) {
    auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() : nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (!header_seen) {
      if (line != kCorpusCsvHeader) throw ParseError("unexpected CSV header", line_no);
      header_seen = true;
      continue;
    }
    auto f = detail::split_csv_line(line, line_no);
    if (f.size() != 8) throw ParseError("expected 8 columns, got " + std::to_string(f.size()), line_no);
    auto integer = [&](const std::string& s) {
      auto v = detail::parse_uint(s, 10);
      if (!v) throw ParseError("bad integer '" + s + "'", line_no);
      return static_cast<std::size_t>(*v);
    };
    auto real = [&](const std::string& s) -> std::optional<double> {
      if (s.empty()) return std::nullopt;
      std::size_t used = 0;
      double v = 0;
      try {
        v = std::stod(s, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != s.size()) throw ParseError("bad number '" + s + "'", line_no);
      return v;
    };
    rows.push_back({f[0], integer(f[1]), integer(f[2]), integer(f[3]), real(f[4]), real(f[5]),
                    real(f[6]), real(f[7])});
  }
  if (!header_seen) throw ParseError("missing CSV header", 0);
  return rows;
}

/// Rounds every real to three decimals, matching what the CSV stores.
inline CorpusRow quantized(CorpusRow r) {
  auto q = [](std::optional<double>& v) {
    if (v) v = std::stod(detail::fixed3(*v));
  };
  q(r.k1);
  q(r.k2);
  q(r.pearson);
  q(r.gamma);
  return r;
}

// --- Plot data ---------------------------------------------------------------

inline std::string format_degree_histogram(const DirectedGraph& g) {
  std::string out;
  for (const auto& [degree, count] : degree_histogram(g)) {
    out += std::to_string(degree) + '\t' + std::to_string(count) + '\n';
  }
  return out;
}

inline std::string format_degree_rank(const DirectedGraph& g) {
  std::string out;
  for (const auto& [rank, degree] : degree_rank(g)) {
    out += std::to_string(rank) + '\t' + std::to_string(degree) + '\n';
  }
  return out;
}

/// Per-DDG summaries for the corpus-level plots. Empty DDGs are skipped.
struct DdgPlotData {
  std::map<std::size_t, std::size_t> size_histogram;          // N -> count
  std::vector<std::pair<std::size_t, double>> size_vs_k1;      // N >= 2
  std::vector<std::pair<std::size_t, double>> size_vs_pearson; // r defined
};

inline DdgPlotData ddg_plot_data(const std::vector<DirectedGraph>& ddgs) {
  DdgPlotData d;
  for (const auto& g : ddgs) {
    if (g.node_count() == 0) continue;
    const NetworkMetrics m = basic_metrics(g);
    ++d.size_histogram[m.N];
    if (m.N >= 2) d.size_vs_k1.emplace_back(m.N, diameter_predictors(m.N, m.L, m.k_max).k1);
    if (m.L > 0) {
      if (auto r = assortativity(g)) d.size_vs_pearson.emplace_back(m.N, *r);
    }
  }
  return d;
}

/// Writes `<prefix>.degree_hist.tsv` and `<prefix>.degree_rank.tsv` for `g`;
/// with DDGs also `<prefix>.size_hist.tsv`, `<prefix>.size_vs_k1.tsv` and
/// `<prefix>.size_vs_pearson.tsv`. Returns the paths written.
inline std::vector<std::filesystem::path> emit_plot_data(const DirectedGraph& g, const std::string& prefix,
                                                         const std::vector<DirectedGraph>* ddgs = nullptr) {
  std::vector<std::filesystem::path> written;
  auto emit = [&](const std::string& suffix, const std::string& text) {
    std::filesystem::path p = prefix + suffix;
    detail::write_text(p, text);
    written.push_back(p);
  };
  emit(".degree_hist.tsv", format_degree_histogram(g));
  emit(".degree_rank.tsv", format_degree_rank(g));
  if (ddgs) {
    const DdgPlotData d = ddg_plot_data(*ddgs);
    std::string hist;
    for (const auto& [n, count] : d.size_histogram) hist += std::to_string(n) + '\t' + std::to_string(count) + '\n';
    emit(".size_hist.tsv", hist);
    std::string k1;
    for (const auto& [n, v] : d.size_vs_k1) k1 += std::to_string(n) + '\t' + detail::fixed6(v) + '\n';
    emit(".size_vs_k1.tsv", k1);
    std::string pearson;
    for (const auto& [n, v] : d.size_vs_pearson) pearson += std::to_string(n) + '\t' + detail::fixed6(v) + '\n';
    emit(".size_vs_pearson.tsv", pearson);
  }
  return written;
}

}  // namespace binet

#endif  // BINET_REPORT_HPP
