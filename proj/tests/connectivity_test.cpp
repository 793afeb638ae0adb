#include <gtest/gtest.h>

#include <random>

#include "support/fixtures.hpp"

namespace {

using namespace surfclass;

UndirectedGraph path3() {
  UndirectedGraph g = UndirectedGraph::with_vertices(3);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  return g;
}

UndirectedGraph cycle(std::uint64_t n, std::uint64_t offset = 0, std::uint64_t total = 0) {
  UndirectedGraph g = UndirectedGraph::with_vertices(total == 0 ? n : total);
  for (std::uint64_t i = 1; i <= n; ++i) g.add_edge(offset + i, offset + i % n + 1);
  return g;
}

UndirectedGraph random_graph(std::uint64_t n, double p, std::mt19937_64& rng) {
  UndirectedGraph g = UndirectedGraph::with_vertices(n);
  std::bernoulli_distribution coin(p);
  for (VertexId a = 1; a <= n; ++a)
    for (VertexId b = a + 1; b <= n; ++b)
      if (coin(rng)) g.add_edge(a, b);
  return g;
}

TEST(Graph, SimpleGraphInvariants) {
  UndirectedGraph g = UndirectedGraph::with_vertices(4);
  EXPECT_TRUE(g.add_edge(2, 1));
  EXPECT_FALSE(g.add_edge(1, 2));
  EXPECT_FALSE(g.add_edge(3, 3));
  EXPECT_EQ(g.edges().front(), (std::pair<VertexId, VertexId>{1, 2}));
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_EQ(g.degree(4), 0u);
  EXPECT_THROW(g.add_edge(1, 9), UnknownVertex);
  EXPECT_THROW(UndirectedGraph({1, 1}), std::invalid_argument);
}

TEST(Connected, SmallCases) {
  for (bool savitch : {false, true}) {
    auto ask = [&](const UndirectedGraph& g, VertexId s, VertexId t) {
      return savitch ? connected(SavitchOracle{}, g, s, t) : connected(UnionFindOracle{}, g, s, t);
    };
    EXPECT_TRUE(ask(path3(), 1, 3));
    EXPECT_FALSE(ask(UndirectedGraph::with_vertices(2), 1, 2));
    EXPECT_TRUE(ask(UndirectedGraph::with_vertices(2), 2, 2));
    EXPECT_TRUE(ask(face_dual(fixtures::punctured_klein()), 1, 3));
  }
}

TEST(Connected, UnknownVertex) {
  EXPECT_THROW(connected(UnionFindOracle{}, path3(), 1, 4), UnknownVertex);
  EXPECT_THROW(connected(SavitchOracle{}, path3(), 0, 1), UnknownVertex);
}

TEST(Connected, ArbitraryVertexIds) {
  UndirectedGraph g({10, 20, 30});
  g.add_edge(10, 30);
  EXPECT_TRUE(connected(SavitchOracle{}, g, 10, 30));
  EXPECT_FALSE(connected(SavitchOracle{}, g, 10, 20));
}

TEST(Savitch, AntipodalPairOnEightCycle) {
  Workspace ws;
  EXPECT_TRUE(connected(SavitchOracle{}, cycle(8), 1, 5, ws));
  EXPECT_LE(ws.peak_bits(), 64u * 3u * 3u);
  EXPECT_EQ(ws.current_bits(), 0u);
}

TEST(Savitch, TwoFourCyclesAreSeparate) {
  UndirectedGraph g = cycle(4, 0, 8);
  for (VertexId i = 1; i <= 4; ++i) g.add_edge(4 + i, 4 + i % 4 + 1);
  EXPECT_FALSE(connected(SavitchOracle{}, g, 1, 5));
  EXPECT_TRUE(connected(SavitchOracle{}, g, 5, 7));
}

// A false query recurses through every level, so its peak is exactly
// (levels + 1) frames.
TEST(Savitch, PeakIsOneFramePerLevel) {
  for (std::uint64_t n : {3u, 5u, 8u, 9u, 12u}) {
    Workspace ws;
    EXPECT_FALSE(connected(SavitchOracle{}, UndirectedGraph::with_vertices(n), 1, 2, ws));
    const std::uint64_t frame = 3 * counter_bits(n) + counter_bits(ceil_log2(n));
    EXPECT_EQ(ws.peak_bits(), (ceil_log2(n) + 1) * frame) << n;
  }
}

TEST(Savitch, RespectsBudget) {
  Workspace ws(20);
  EXPECT_THROW(connected(SavitchOracle{}, cycle(8), 1, 5, ws), BudgetExceeded);
}

TEST(Oracles, AgreeOnAllPairsOfSparseRandomGraphs) {
  std::mt19937_64 rng(64);
  for (int trial = 0; trial < 30; ++trial) {
    const std::uint64_t n = std::uniform_int_distribution<std::uint64_t>(1, 10)(rng);
    const UndirectedGraph g = random_graph(n, 0.1 + 0.05 * (trial % 5), rng);
    for (VertexId s = 1; s <= n; ++s)
      for (VertexId t = 1; t <= n; ++t)
        ASSERT_EQ(connected(SavitchOracle{}, g, s, t), connected(UnionFindOracle{}, g, s, t));
  }
}

TEST(Oracles, AgreeOnAllPairsOfAConnectedSixtyFourVertexGraph) {
  std::mt19937_64 rng(65);
  UndirectedGraph g = random_graph(64, 0.1, rng);
  ASSERT_EQ(count_components(g), 1u);
  for (VertexId s = 1; s <= 64; ++s)
    for (VertexId t = s; t <= 64; t += 7) ASSERT_TRUE(connected(SavitchOracle{}, g, s, t));
}

TEST(Oracles, ConnectivityIsAnEquivalence) {
  std::mt19937_64 rng(9);
  const UndirectedGraph g = random_graph(9, 0.15, rng);
  auto c = [&](VertexId a, VertexId b) { return connected(SavitchOracle{}, g, a, b); };
  for (VertexId a = 1; a <= 9; ++a) {
    EXPECT_TRUE(c(a, a));
    for (VertexId b = 1; b <= 9; ++b) {
      EXPECT_EQ(c(a, b), c(b, a));
      for (VertexId d = 1; d <= 9; ++d)
        if (c(a, b) && c(b, d)) EXPECT_TRUE(c(a, d));
    }
  }
}

TEST(CountComponents, Examples) {
  EXPECT_EQ(count_components(face_dual(fixtures::punctured_klein())), 1u);
  EXPECT_EQ(count_components(vertex_identification_graph(fixtures::punctured_klein())), 1u);
  EXPECT_EQ(count_components(UndirectedGraph::with_vertices(7)), 7u);
  EXPECT_EQ(count_components(UndirectedGraph{}), 0u);
  Workspace ws;
  EXPECT_EQ(count_components(SavitchOracle{}, vertex_identification_graph(fixtures::punctured_klein()), ws), 1u);
  EXPECT_EQ(count_components(SavitchOracle{}, UndirectedGraph::with_vertices(5), ws), 5u);
  EXPECT_EQ(count_components(SavitchOracle{}, UndirectedGraph{}, ws), 0u);
}

TEST(CountComponents, ScanMatchesUnionFindOnRandomGraphs) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const std::uint64_t n = std::uniform_int_distribution<std::uint64_t>(1, 9)(rng);
    const UndirectedGraph g = random_graph(n, 0.2, rng);
    Workspace ws;
    EXPECT_EQ(count_components(SavitchOracle{}, g, ws), count_components(g));
    EXPECT_EQ(count_components(UnionFindOracle{}, g, ws), count_components(g));
  }
}

TEST(CountComponents, SpanningForestIdentity) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    const UndirectedGraph g = random_graph(40, 0.04, rng);
    DisjointSets sets(g.vertex_count());
    std::size_t forest = 0;
    for (const auto& [a, b] : g.edges())
      if (sets.unite(g.position(a), g.position(b))) ++forest;
    EXPECT_EQ(count_components(g) + forest, g.vertex_count());
  }
}

TEST(CountComponents, MakesExactlyHalfNSquaredMinusNCalls) {
  for (std::uint64_t n : {1u, 2u, 3u, 8u, 20u}) {
    const CountingOracle<UnionFindOracle> oracle;
    Workspace ws;
    (void)count_components(oracle, UndirectedGraph::with_vertices(n), ws);
    EXPECT_EQ(oracle.calls(), n * (n - 1) / 2);
  }
}

TEST(CountComponents, UnionFindOracleChargesItsForest) {
  Workspace ws;
  (void)connected(UnionFindOracle{}, cycle(8), 1, 5, ws);
  EXPECT_EQ(ws.peak_bits(), 8u * counter_bits(8));
}

TEST(ComponentRepresentatives, LowestVertexPerComponent) {
  UndirectedGraph g = UndirectedGraph::with_vertices(6);
  g.add_edge(2, 5);
  g.add_edge(5, 6);
  g.add_edge(1, 3);
  EXPECT_EQ(component_representatives(StoredGraphStream(g)),
            (std::vector<VertexId>{1, 2, 1, 4, 2, 2}));
}

}  // namespace
