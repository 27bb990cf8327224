#include "binet/cliques.hpp"

#include <random>

#include <gtest/gtest.h>

#include "binet/generators.hpp"
#include "oracles.hpp"

namespace binet {
namespace {

TEST(CountKCliques, CompleteGraphs) {
  for (std::size_t n = 1; n <= 10; ++n) {
    const auto g = gen::complete(n);
    for (std::size_t k = 1; k <= n + 1; ++k) {
      EXPECT_EQ(count_k_cliques(g, k), oracle::binomial(n, k)) << "n=" << n << " k=" << k;
    }
  }
}

TEST(CountKCliques, SmallCases) {
  EXPECT_EQ(count_k_cliques(gen::complete(4), 3), 4u);
  EXPECT_EQ(count_k_cliques(gen::complete(4), 4), 1u);
  EXPECT_EQ(count_k_cliques(gen::complete(6), 3), 20u);
  EXPECT_EQ(count_k_cliques(gen::star(8), 3), 0u);
  EXPECT_EQ(count_k_cliques(build_graph(0, {}), 3), 0u);
}

TEST(CountKCliques, DirectionAndLoopsIgnored) {
  auto g = build_graph(3, {{0, 1}, {1, 2}, {2, 0}, {0, 0}});
  EXPECT_EQ(count_k_cliques(g, 2), 3u);
  EXPECT_EQ(count_k_cliques(g, 3), 1u);
}

TEST(CountKCliques, ZeroIsInvalid) {
  EXPECT_THROW(count_k_cliques(gen::complete(3), 0), InvalidArgument);
}

TEST(CountKCliques, MatchesExhaustiveOracle) {
  gen::Rng rng(31337);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 5 + rng() % 26;
    const double p = 0.1 + 0.4 * std::uniform_real_distribution<>(0, 1)(rng);
    auto g = gen::erdos_renyi(n, p, rng);
    for (std::size_t k : {3, 4, 5, 6}) {
      ASSERT_EQ(count_k_cliques(g, k), oracle::k_cliques(g, k)) << "trial " << t << " k=" << k;
    }
  }
}

TEST(DegeneracyOrder, IsPermutation) {
  gen::Rng rng(4);
  auto g = gen::erdos_renyi(200, 0.05, rng);
  auto order = degeneracy_order(UndirectedView(g));
  std::sort(order.begin(), order.end());
  for (NodeId v = 0; v < 200; ++v) EXPECT_EQ(order[v], v);
}

}  // namespace
}  // namespace binet
