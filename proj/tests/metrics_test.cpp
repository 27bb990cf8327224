#include "binet/metrics.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "binet/generators.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

namespace binet {
namespace {

TEST(BasicMetrics, CridexShape) {
  auto m = basic_metrics(fixtures::shaped_graph(1155, 1386, 58));
  EXPECT_EQ(m.N, 1155u);
  EXPECT_EQ(m.L, 1386u);
  EXPECT_EQ(m.k_max, 58u);
  EXPECT_NEAR(m.mean_degree, 2.4, 1e-12);
}

TEST(BasicMetrics, SingleNode) {
  auto m = basic_metrics(build_graph(1, {}));
  EXPECT_EQ(m.N, 1u);
  EXPECT_EQ(m.L, 0u);
  EXPECT_EQ(m.k_max, 0u);
  EXPECT_EQ(m.components, 1u);
}

TEST(BasicMetrics, K4) {
  auto m = basic_metrics(gen::complete(4));
  EXPECT_EQ(m.N, 4u);
  EXPECT_EQ(m.L, 6u);
  EXPECT_EQ(m.k_max, 3u);
  EXPECT_DOUBLE_EQ(m.mean_degree, 3.0);
}

TEST(BasicMetrics, DirectedModeCountsArcs) {
  auto g = build_graph(3, {{0, 1}, {1, 0}, {1, 2}, {2, 2}});
  EXPECT_EQ(basic_metrics(g, MetricsMode::undirected).L, 2u);
  auto m = basic_metrics(g, MetricsMode::directed);
  EXPECT_EQ(m.L, 3u);
  EXPECT_EQ(m.k_max, 3u);
}

TEST(BasicMetrics, EmptyGraphIsDegenerate) {
  EXPECT_THROW(basic_metrics(DirectedGraph{}), DegenerateSize);
}

TEST(DiameterPredictors, ReferenceRows) {
  auto cridex = diameter_predictors(1155, 1386, 58);
  EXPECT_NEAR(cridex.k1, 8.224, 0.001);
  ASSERT_TRUE(cridex.k2);
  EXPECT_NEAR(*cridex.k2, 8.055, 0.001);
  auto avatar = diameter_predictors(928, 1669, 23);
  EXPECT_NEAR(avatar.k1, 3.366, 0.001);
  EXPECT_NEAR(*avatar.k2, 5.338, 0.001);
  EXPECT_NEAR(diameter_predictors(48, 32, 3).k1, 0.775, 0.001);
}

TEST(DiameterPredictors, K2AbsentForSparseGraphs) {
  EXPECT_FALSE(diameter_predictors(48, 24, 3).k2.has_value());
  EXPECT_FALSE(diameter_predictors(10, 0, 0).k2.has_value());
}

TEST(DiameterPredictors, Degenerate) {
  EXPECT_THROW(diameter_predictors(1, 0, 0), DegenerateSize);
  EXPECT_THROW(diameter_predictors(0, 0, 0), DegenerateSize);
}

TEST(Assortativity, StarIsMinusOne) {
  for (std::size_t leaves : {2, 5, 50}) {
    auto r = assortativity(gen::star(leaves));
    ASSERT_TRUE(r);
    EXPECT_EQ(*r, -1.0);
  }
}

TEST(Assortativity, RegularGraphsUndefined) {
  EXPECT_FALSE(assortativity(gen::complete(4)).has_value());
  EXPECT_FALSE(assortativity(gen::ring_lattice(30, 4)).has_value());
  EXPECT_FALSE(assortativity(gen::directed_cycle(7)).has_value());
}

TEST(Assortativity, EdgelessThrows) {
  EXPECT_THROW(assortativity(build_graph(5, {})), EmptyGraph);
  EXPECT_THROW(assortativity(build_graph(2, {{1, 1}})), EmptyGraph);
}

TEST(Assortativity, MatchesOracle) {
  gen::Rng rng(1234);
  int compared = 0;
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 2 + rng() % 49;
    auto g = gen::random_directed(n, 0.02 + 0.2 * std::uniform_real_distribution<>(0, 1)(rng), rng);
    if (UndirectedView(g).edge_count() == 0) continue;
    auto got = assortativity(g);
    auto want = oracle::pearson_assortativity(g);
    ASSERT_EQ(got.has_value(), want.has_value()) << "trial " << t;
    if (got) {
      EXPECT_NEAR(*got, *want, 1e-9) << "trial " << t;
      ++compared;
    }
  }
  EXPECT_GT(compared, 80);
}

TEST(Assortativity, RelabelInvariant) {
  gen::Rng rng(77);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 40;
    auto g = gen::random_directed(n, 0.08, rng);
    std::vector<NodeId> perm(n);
    std::iota(perm.begin(), perm.end(), NodeId{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Edge> relabeled;
    for (auto [u, v] : g.edges()) relabeled.emplace_back(perm[u], perm[v]);
    auto a = assortativity(g);
    auto b = assortativity(build_graph(n, relabeled));
    ASSERT_EQ(a.has_value(), b.has_value());
    if (a) {
      EXPECT_NEAR(*a, *b, 1e-12);
    }
  }
}

TEST(Clustering, K4) {
  auto c = clustering(gen::complete(4));
  EXPECT_DOUBLE_EQ(c.global, 1.0);
  EXPECT_DOUBLE_EQ(c.avg_local, 1.0);
}

TEST(Clustering, Star) {
  auto c = clustering(gen::star(5));
  EXPECT_EQ(c.global, 0.0);
  EXPECT_EQ(c.avg_local, 0.0);
}

TEST(Clustering, RingLattice) {
  EXPECT_NEAR(clustering(gen::ring_lattice(20, 4)).avg_local, 0.5, 1e-12);
}

TEST(Clustering, MatchesOracle) {
  gen::Rng rng(8);
  for (int t = 0; t < 40; ++t) {
    auto g = gen::random_directed(1 + rng() % 40, 0.15, rng);
    auto local = oracle::local_clustering(g);
    double mean = 0;
    for (double c : local) mean += c;
    mean /= static_cast<double>(local.size());
    EXPECT_NEAR(clustering(g).avg_local, mean, 1e-12);
  }
}

TEST(DegreeHistogram, StarAndK4) {
  EXPECT_EQ(degree_histogram(gen::star(5)), (std::map<std::size_t, std::size_t>{{1, 5}, {5, 1}}));
  EXPECT_EQ(degree_histogram(gen::complete(4)), (std::map<std::size_t, std::size_t>{{3, 4}}));
}

TEST(DegreeRank, Star) {
  auto rank = degree_rank(gen::star(5));
  ASSERT_EQ(rank.size(), 6u);
  EXPECT_EQ(rank[0], (std::pair<std::size_t, std::size_t>{1, 5}));
  EXPECT_EQ(rank[1], (std::pair<std::size_t, std::size_t>{2, 1}));
  EXPECT_EQ(rank[5], (std::pair<std::size_t, std::size_t>{6, 1}));
}

TEST(ComputeMetrics, CridexShapeEndToEnd) {
  auto m = compute_metrics(fixtures::shaped_graph(1155, 1386, 58));
  ASSERT_TRUE(m.k1);
  EXPECT_NEAR(*m.k1, 8.224, 0.001);
  EXPECT_NEAR(*m.k2, 8.055, 0.001);
  EXPECT_TRUE(m.pearson_r.has_value());
  EXPECT_EQ(m.components, 1u);
  EXPECT_EQ(m.kin_max, 58u);
  EXPECT_EQ(m.kout_max, 58u);
}

TEST(ComputeMetrics, TinyGraphsLeaveFieldsAbsent) {
  auto single = compute_metrics(build_graph(1, {}));
  EXPECT_FALSE(single.k1);
  EXPECT_FALSE(single.pearson_r);
  EXPECT_FALSE(single.gamma);
  auto k4 = compute_metrics(gen::complete(4));
  EXPECT_TRUE(k4.k1);
  EXPECT_FALSE(k4.pearson_r);
  EXPECT_FALSE(k4.gamma);
}

TEST(ComputeMetrics, Deterministic) {
  gen::Rng rng(3);
  auto g = gen::erdos_renyi(500, 0.01, rng);
  EXPECT_EQ(compute_metrics(g), compute_metrics(g));
}

TEST(CountComponents, IsolatedNodesCount) {
  auto g = build_graph(6, {{0, 1}, {2, 3}, {3, 4}});
  EXPECT_EQ(count_components(UndirectedView(g)), 3u);
}

}  // namespace
}  // namespace binet
