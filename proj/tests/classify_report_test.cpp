#include "binet/classify.hpp"
#include "binet/report.hpp"

#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "binet/generators.hpp"
#include "binet/pipeline.hpp"
#include "fixtures.hpp"
#include "test_paths.hpp"

namespace binet {
namespace {

NetworkMetrics ddg_row_like() {
  NetworkMetrics m;
  m.N = 29;
  m.L = 26;
  m.k_max = 4;
  m.mean_degree = 2.0 * 26 / 29;
  m.k1 = 1.187;
  m.k2 = 1.878;
  m.pearson_r = 0.105;
  m.gamma = 3.281;
  m.gamma_goodness = 0.05;
  return m;
}

TEST(Classify, SmallDdgRow) {
  auto c = classify(ddg_row_like());
  EXPECT_TRUE(c.scale_free.value) << c.scale_free.reason;
  EXPECT_EQ(c.assortativity_class, AssortativityClass::assortative);
  EXPECT_FALSE(c.assortativity_reason.empty());
  Thresholds wide;
  wide.assortativity_band = 0.11;
  EXPECT_EQ(classify(ddg_row_like(), wide).assortativity_class, AssortativityClass::neutral);
}

TEST(Classify, PoorFitIsNotScaleFree) {
  auto m = ddg_row_like();
  m.gamma_goodness = 0.4;
  EXPECT_FALSE(classify(m).scale_free.value);
  m.gamma_method = GammaMethod::ccdf_ls;
  m.gamma_goodness = 0.95;
  EXPECT_TRUE(classify(m).scale_free.value);
  m.gamma.reset();
  EXPECT_FALSE(classify(m).scale_free.value);
}

TEST(Classify, StarIsDisassortative) {
  auto c = classify(compute_metrics(gen::star(50)));
  EXPECT_EQ(c.assortativity_class, AssortativityClass::disassortative);
  EXPECT_EQ(c.evidence.pearson_r, -1.0);
}

TEST(Classify, RegularGraphUndefined) {
  EXPECT_EQ(classify(compute_metrics(gen::complete(5))).assortativity_class, AssortativityClass::undefined);
}

TEST(Classify, ErdosRenyiNeutralNotSmallWorld) {
  gen::Rng rng(2000);
  auto m = compute_metrics(gen::erdos_renyi(2000, 0.005, rng));
  auto c = classify(m);
  EXPECT_EQ(c.assortativity_class, AssortativityClass::neutral);
  EXPECT_FALSE(c.small_world.value) << c.small_world.reason;
  EXPECT_NEAR(m.clustering_avg_local, 0.005, 0.003);
}

TEST(Classify, WattsStrogatzIsSmallWorld) {
  gen::Rng rng(42);
  auto c = classify(compute_metrics(gen::watts_strogatz(1000, 10, 0.1, rng)));
  EXPECT_TRUE(c.small_world.value) << c.small_world.reason;
}

TEST(Classify, IncompleteMetrics) {
  NetworkMetrics m;
  m.N = 1;
  EXPECT_THROW(classify(m), IncompleteMetrics);
  m.N = 5;
  EXPECT_THROW(classify(m), IncompleteMetrics);
}

TEST(Classify, PureFunction) {
  EXPECT_EQ(classify(ddg_row_like()), classify(ddg_row_like()));
}

CorpusRow cridex_row() {
  return {"Win32_Cridex", 1155, 1386, 58, 8.2243, 8.0549, -0.0401, 6.7131};
}

TEST(CorpusCsv, CridexLine) {
  auto csv = format_corpus_csv({cridex_row()});
  EXPECT_EQ(csv, "sample,N,L,k_max,k1,k2,pearson,gamma\nWin32_Cridex,1155,1386,58,8.224,8.055,-0.040,6.713\n");
}

TEST(CorpusCsv, EmptyCorpusIsHeaderOnly) {
  EXPECT_EQ(format_corpus_csv({}), "sample,N,L,k_max,k1,k2,pearson,gamma\n");
}

TEST(CorpusCsv, AbsentValuesAreEmptyAndNamesQuoted) {
  CorpusRow r{"odd,name", 1, 0, 0, std::nullopt, std::nullopt, std::nullopt, std::nullopt};
  EXPECT_EQ(format_corpus_csv({r}), std::string(kCorpusCsvHeader) + "\n\"odd,name\",1,0,0,,,,\n");
  EXPECT_EQ(parse_corpus_csv(format_corpus_csv({r})), std::vector<CorpusRow>{r});
}

TEST(CorpusCsv, GoldenFile) {
  std::vector<CorpusRow> rows = {
      cridex_row(),
      {"Win32_Avatar", 928, 1669, 23, 3.36578, 5.33767, -0.0123, 5.999},
      {"tiny", 1, 0, 0, std::nullopt, std::nullopt, std::nullopt, std::nullopt},
      {"negative_zero_edge", 48, 32, 3, 0.77495, std::nullopt, -0.0004, 18.2644},
  };
  EXPECT_EQ(format_corpus_csv(rows), testing_paths::read_file(testing_paths::data_dir() / "golden_corpus.csv"));
}

TEST(CorpusCsv, ReparseIsQuantizedIdentity) {
  gen::Rng rng(9);
  std::vector<CorpusRow> rows;
  for (int i = 0; i < 50; ++i) {
    auto g = gen::erdos_renyi(50 + rng() % 200, 0.03, rng);
    rows.push_back(corpus_row("s" + std::to_string(i), compute_metrics(g)));
  }
  auto back = parse_corpus_csv(format_corpus_csv(rows));
  ASSERT_EQ(back.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) EXPECT_EQ(back[i], quantized(rows[i]));
  EXPECT_EQ(format_corpus_csv(back), format_corpus_csv(rows));
}

TEST(CorpusCsv, RejectsBadInput) {
  EXPECT_THROW(parse_corpus_csv("a,b\n"), ParseError);
  EXPECT_THROW(parse_corpus_csv(std::string(kCorpusCsvHeader) + "\nx,1,2\n"), ParseError);
  EXPECT_THROW(parse_corpus_csv(std::string(kCorpusCsvHeader) + "\nx,1,2,3,abc,,,\n"), ParseError);
}

TEST(ReportJson, ReparseIdentity) {
  gen::Rng rng(6);
  for (int t = 0; t < 10; ++t) {
    auto m = compute_metrics(gen::watts_strogatz(200, 6, 0.2, rng));
    Report r{"sample" + std::to_string(t), m, classify(m)};
    auto text = report_json(r).dump(2);
    EXPECT_EQ(parse_report_json(nlohmann::json::parse(text)), r);
  }
}

TEST(ReportJson, AbsentFieldsAreNull) {
  auto m = compute_metrics(gen::complete(4));
  auto j = nlohmann::json(m);
  EXPECT_TRUE(j.at("pearson_r").is_null());
  EXPECT_TRUE(j.at("gamma").is_null());
  EXPECT_EQ(j.at("directed").at("kin_max"), 3);
  EXPECT_EQ(j.get<NetworkMetrics>(), m);
}

TEST(ThresholdsJson, PartialOverride) {
  auto t = nlohmann::json::parse(R"({"max_k1": 4.5, "assortativity_band": 0.2})").get<Thresholds>();
  EXPECT_EQ(t.max_k1, 4.5);
  EXPECT_EQ(t.assortativity_band, 0.2);
  EXPECT_EQ(t.min_gamma, Thresholds{}.min_gamma);
  EXPECT_THROW(nlohmann::json::parse(R"({"max_kl": 4})").get<Thresholds>(), InvalidArgument);
}

TEST(PlotData, StarHistogramHasTwoLines) {
  const auto dir = testing_paths::scratch("plot_star");
  auto written = emit_plot_data(gen::star(5), (dir / "star").string());
  ASSERT_EQ(written.size(), 2u);
  EXPECT_EQ(testing_paths::read_file(dir / "star.degree_hist.tsv"), "1\t5\n5\t1\n");
  EXPECT_EQ(testing_paths::read_file(dir / "star.degree_rank.tsv"), "1\t5\n2\t1\n3\t1\n4\t1\n5\t1\n6\t1\n");
}

TEST(PlotData, SampleProgramHasOneSizeBucket) {
  PipelineOptions options;
  options.syntax = Syntax::canonical;
  auto a = analyze_program(testing_paths::read_sample("moves.asm"), options);
  const auto dir = testing_paths::scratch("plot_sample");
  auto written = emit_plot_data(a.cfg.graph, (dir / "moves").string(), &a.ddgs);
  EXPECT_EQ(written.size(), 5u);
  EXPECT_EQ(testing_paths::read_file(dir / "moves.size_hist.tsv"), "3\t1\n");
}

TEST(PlotData, PowerLawSizedDdgsAreRightSkewed) {
  gen::Rng rng(100);
  gen::ZipfSampler zipf(2.3);
  std::vector<DirectedGraph> ddgs;
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 1 + std::min<std::uint64_t>(zipf(rng), 400);
    std::vector<Edge> path;
    for (NodeId v = 0; v + 1 < n; ++v) path.emplace_back(v, v + 1);
    ddgs.emplace_back(n, path);
  }
  auto d = ddg_plot_data(ddgs);
  std::vector<std::size_t> sizes;
  for (const auto& [n, count] : d.size_histogram) sizes.insert(sizes.end(), count, n);
  ASSERT_EQ(sizes.size(), 100u);
  const double mean = std::accumulate(sizes.begin(), sizes.end(), 0.0) / 100.0;
  const double median = (sizes[49] + sizes[50]) / 2.0;
  EXPECT_LT(median, mean);
}

TEST(PlotData, WriteFailureIsIoError) {
  EXPECT_THROW(emit_plot_data(gen::star(2), "/nonexistent/dir/x"), IoError);
}

}  // namespace
}  // namespace binet
