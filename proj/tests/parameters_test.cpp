#include <gtest/gtest.h>

#include <random>

#include "mcut/parameters.hpp"
#include "test_support.hpp"

namespace mcut {
namespace {

using testing::complete_graph;
using testing::cycle_graph;
using testing::from_edges;
using testing::path_graph;
using testing::star_graph;

TEST(VcApprox, Examples) {
  EXPECT_EQ(vc_2approx(path_graph(2)), (VertexSet{0, 1}));
  EXPECT_EQ(vc_2approx(star_graph(5)), (VertexSet{0, 1}));
  EXPECT_TRUE(vc_2approx(edgeless_graph(4)).empty());
}

TEST(VcApprox, IsCoverOfAtMostTwiceMatchingSize) {
  std::mt19937_64 rng(1);
  for (int iter = 0; iter < 300; ++iter) {
    Graph g = testing::random_graph(1 + static_cast<int>(rng() % 12), 0.3, rng);
    VertexSet x = vc_2approx(g);
    EXPECT_TRUE(is_vertex_cover(g, x));
    EXPECT_TRUE(is_matching(g, [&] {
      // The cover comes in pairs of a matching; rebuild it greedily.
      std::vector<char> used(static_cast<std::size_t>(g.n()), 0);
      std::vector<Edge> m;
      for (const Edge& e : g.edges())
        if (!used[e.u] && !used[e.v]) {
          used[e.u] = used[e.v] = 1;
          m.push_back(e);
        }
      EXPECT_EQ(2 * m.size(), x.size());
      return Cut(m);
    }()));
  }
}

TEST(TwinClasses, Examples) {
  auto k4 = twin_classes(complete_graph(4), TwinMode::TrueTwin);
  EXPECT_EQ(k4.blocks, (std::vector<VertexSet>{{0, 1, 2, 3}}));

  auto star = twin_classes(star_graph(3), TwinMode::Neighborhood);
  ASSERT_EQ(star.blocks, (std::vector<VertexSet>{{0}, {1, 2, 3}}));
  EXPECT_EQ(star.kinds[0], ModuleKind::Clique);
  EXPECT_EQ(star.kinds[1], ModuleKind::Independent);

  auto p4 = twin_classes(path_graph(4), TwinMode::TrueTwin);
  EXPECT_EQ(p4.blocks, (std::vector<VertexSet>{{0}, {1}, {2}, {3}}));
}

TEST(TwinClasses, BlocksAreTaggedModules) {
  std::mt19937_64 rng(2);
  for (int iter = 0; iter < 300; ++iter) {
    Graph g = testing::random_graph(1 + static_cast<int>(rng() % 10), 0.4, rng);
    for (TwinMode mode : {TwinMode::TrueTwin, TwinMode::Neighborhood}) {
      auto p = twin_classes(g, mode);
      EXPECT_NO_THROW(block_index(g.n(), p));
      for (std::size_t b = 0; b < p.size(); ++b) {
        const auto& s = p.blocks[b];
        EXPECT_TRUE(is_module(g, s));
        for (std::size_t i = 0; i < s.size(); ++i)
          for (std::size_t j = i + 1; j < s.size(); ++j)
            EXPECT_EQ(g.has_edge(s[i], s[j]), p.kind(b) == ModuleKind::Clique);
      }
      // Vertices in different blocks are never twins of the mode's kind.
      auto idx = block_index(g.n(), p);
      for (Vertex u = 0; u < g.n(); ++u)
        for (Vertex v = u + 1; v < g.n(); ++v) {
          bool closed = closed_neighborhood(g, u) == closed_neighborhood(g, v);
          bool open = g.neighbors(u) == g.neighbors(v);
          bool twins = mode == TwinMode::TrueTwin ? closed : (closed || open);
          EXPECT_EQ(twins, idx[u] == idx[v]);
        }
    }
  }
}

TEST(Quotient, Examples) {
  auto star = twin_classes(star_graph(3), TwinMode::Neighborhood);
  auto q = quotient_graph(star_graph(3), star);
  EXPECT_EQ(q.graph, path_graph(2));
  EXPECT_EQ(q.block_of, (std::vector<int>{0, 1, 1, 1}));

  Graph two_k2 = from_edges(4, {{0, 1}, {2, 3}});
  VertexClassPartition singles{{{0}, {1}, {2}, {3}}, {}};
  EXPECT_EQ(quotient_graph(two_k2, singles).graph, two_k2);

  VertexClassPartition one{{{0, 1, 2, 3, 4, 5}}, {}};
  EXPECT_EQ(quotient_graph(complete_graph(6), one).graph, edgeless_graph(1));

  VertexClassPartition bad{{{0, 1}, {1, 2, 3}}, {}};
  EXPECT_THROW(quotient_graph(two_k2, bad), std::invalid_argument);
  VertexClassPartition missing{{{0, 1}}, {}};
  EXPECT_THROW(quotient_graph(two_k2, missing), std::invalid_argument);
}

TEST(FeedbackEdgeSet, Examples) {
  EXPECT_EQ(feedback_edge_set(cycle_graph(5)).size(), 1u);
  EXPECT_TRUE(feedback_edge_set(path_graph(6)).empty());
  EXPECT_EQ(feedback_edge_set(complete_graph(4)).size(), 3u);
}

TEST(FeedbackEdgeSet, LeavesForestOfRightSize) {
  std::mt19937_64 rng(4);
  for (int iter = 0; iter < 200; ++iter) {
    Graph g = testing::random_graph(1 + static_cast<int>(rng() % 12), 0.3, rng);
    Cut s = feedback_edge_set(g);
    EXPECT_TRUE(is_forest(remove_edges(g, s)));
    EXPECT_EQ(s.size() + static_cast<std::size_t>(g.n()), g.m() + static_cast<std::size_t>(component_count(g)));
  }
}

TEST(ModularPartition, PrimeCycle) {
  auto p = modular_partition(cycle_graph(5));
  EXPECT_EQ(p.blocks, (std::vector<VertexSet>{{0}, {1}, {2}, {3}, {4}}));
}

TEST(ModularPartition, JoinOfTwoEdgesAndVertex) {
  // 2K2 joined with K1: the complement is disconnected, so the top level is a
  // series node whose children are {0,1,2,3} and {4}.
  Graph g = from_edges(5, {{0, 1}, {2, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 4}});
  auto p = modular_partition(g);
  EXPECT_EQ(p.blocks, (std::vector<VertexSet>{{0, 1, 2, 3}, {4}}));
  // The finer split into the two edges and the centre is also a modular partition.
  VertexClassPartition finer{{{0, 1}, {2, 3}, {4}}, {}};
  EXPECT_EQ(modular_partition(g, finer).blocks, finer.blocks);
}

TEST(ModularPartition, RejectsNonModule) {
  VertexClassPartition bad{{{0, 1}, {2, 3, 4}}, {}};
  EXPECT_THROW(modular_partition(cycle_graph(5), bad), std::invalid_argument);
}

// Every proper module of a connected, co-connected graph lies inside a block.
TEST(ModularPartition, MatchesModuleScan) {
  std::mt19937_64 rng(9);
  int prime_cases = 0;
  for (int iter = 0; iter < 300; ++iter) {
    int n = 2 + static_cast<int>(rng() % 7);
    Graph g = testing::random_graph(n, 0.5, rng);
    if (!is_connected(g)) continue;
    auto p = modular_partition(g);
    auto idx = block_index(n, p);
    EXPECT_GE(p.size(), 2u);
    for (const auto& b : p.blocks) EXPECT_TRUE(is_module(g, b));
    if (detail::complement_components(g).size() > 1) continue;
    ++prime_cases;
    for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
      VertexSet s;
      for (int v = 0; v < n; ++v)
        if (mask >> v & 1u) s.push_back(v);
      if (!is_module(g, s)) continue;
      for (Vertex v : s) EXPECT_EQ(idx[v], idx[s[0]]);
    }
  }
  EXPECT_GT(prime_cases, 20);
}

}  // namespace
}  // namespace mcut
