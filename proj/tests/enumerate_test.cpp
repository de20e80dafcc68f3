#include <gtest/gtest.h>

#include <random>
#include <set>

#include "mcut/enumerate.hpp"
#include "test_support.hpp"

namespace mcut {
namespace {

using testing::as_set;
using testing::brute_cuts;
using testing::cycle_graph;
using testing::from_edges;
using testing::path_graph;

Graph labeled_graph(int n, std::uint32_t mask) {
  std::vector<Edge> e;
  int bit = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++bit)
      if (mask >> bit & 1u) e.push_back({i, j});
  return build_graph(n, e);
}

TEST(Fib, Values) {
  EXPECT_EQ(fib(1), 1u);
  EXPECT_EQ(fib(2), 1u);
  EXPECT_EQ(fib(7), 13u);
  EXPECT_EQ(fib(10), 55u);
  EXPECT_EQ(fib(90), 2880067194370816120ull);
  EXPECT_THROW(fib(0), std::invalid_argument);
  EXPECT_THROW(fib(94), std::overflow_error);
}

TEST(Fib, ProductInequality) {
  for (int p = 2; p <= 20; ++p)
    for (int q = 2; q <= 20; ++q) {
      std::uint64_t lhs = fib(p) * fib(q), rhs = fib(p + q - 1) - 1;
      EXPECT_LE(lhs, rhs) << p << "," << q;
      if (p >= 4 || q >= 4) {
        EXPECT_LT(lhs, rhs) << p << "," << q;
      }
    }
}

TEST(Oracle, PathOfFour) {
  auto cuts = oracle_enum(path_graph(4), Kind::All);
  EXPECT_EQ(cuts, (std::vector<Cut>{Cut{{0, 1}}, Cut{{0, 1}, {2, 3}}, Cut{{1, 2}}, Cut{{2, 3}}}));
}

TEST(Oracle, TriangleHasNone) { EXPECT_TRUE(oracle_enum(testing::complete_graph(3), Kind::All).empty()); }

TEST(Oracle, TwoSmallStars) {
  Graph g = from_edges(6, {{0, 1}, {0, 2}, {3, 4}, {3, 5}});
  auto cuts = oracle_enum(g, Kind::All);
  EXPECT_EQ(cuts.size(), 9u);
  EXPECT_EQ(cuts.front(), Cut{});
}

TEST(Oracle, GuardRejectsLargeComponents) {
  EXPECT_THROW(oracle_enum(path_graph(23), Kind::All), std::length_error);
  EXPECT_NO_THROW(oracle_enum(path_graph(6), Kind::All, OracleOptions{6}));
}

TEST(FilterExtreme, Examples) {
  std::vector<Cut> in{Cut{{0, 1}}, Cut{{0, 1}, {2, 3}}};
  EXPECT_EQ(filter_extreme(in, Kind::Minimal), (std::vector<Cut>{Cut{{0, 1}}}));
  EXPECT_EQ(filter_extreme(in, Kind::Maximal), (std::vector<Cut>{Cut{{0, 1}, {2, 3}}}));
  EXPECT_EQ(filter_extreme(in, Kind::All), in);
  Graph g = from_edges(5, {{0, 1}, {1, 2}, {3, 4}});
  EXPECT_EQ(filter_extreme(oracle_enum(g, Kind::All), Kind::Minimal), (std::vector<Cut>{Cut{}}));
}

TEST(Oracle, MatchesBipartitionScanOnRandomGraphs) {
  std::mt19937_64 rng(5);
  for (int iter = 0; iter < 300; ++iter) {
    Graph g = testing::random_graph(1 + static_cast<int>(rng() % 10), 0.3, rng);
    for (Kind k : {Kind::All, Kind::Minimal, Kind::Maximal})
      ASSERT_EQ(as_set(oracle_enum(g, k)), brute_cuts(g, k));
  }
}

TEST(ForestMatchings, PathOfFour) {
  MatchingConstraints c;
  c.require_nonempty = true;
  auto got = as_set(enum_forest_matchings(path_graph(4), c).collect());
  EXPECT_EQ(got, (std::set<Cut>{Cut{{0, 1}}, Cut{{1, 2}}, Cut{{2, 3}}, Cut{{0, 1}, {2, 3}}}));
}

TEST(ForestMatchings, ForcedWithEvenParity) {
  MatchingConstraints c;
  c.forced = Cut{{0, 1}};
  c.parity = 0;
  c.require_nonempty = true;
  auto got = as_set(enum_forest_matchings(path_graph(5), c).collect());
  EXPECT_EQ(got, (std::set<Cut>{Cut{{0, 1}, {2, 3}}, Cut{{0, 1}, {3, 4}}}));
}

TEST(ForestMatchings, AllForbidden) {
  Graph f = from_edges(6, {{0, 1}, {1, 2}, {3, 4}});
  MatchingConstraints c;
  c.forbidden = Cut(f.edges());
  EXPECT_EQ(enum_forest_matchings(f, c).collect(), (std::vector<Cut>{Cut{}}));
  c.require_nonempty = true;
  EXPECT_TRUE(enum_forest_matchings(f, c).collect().empty());
}

TEST(ForestMatchings, RejectsBadInput) {
  MatchingConstraints c;
  EXPECT_THROW(enum_forest_matchings(cycle_graph(3), c), std::invalid_argument);
  c.forced = Cut{{0, 1}};
  c.forbidden = Cut{{0, 1}};
  EXPECT_THROW(enum_forest_matchings(path_graph(3), c), std::invalid_argument);
  MatchingConstraints d;
  d.forced = Cut{{0, 1}, {1, 2}};
  EXPECT_THROW(enum_forest_matchings(path_graph(3), d), std::invalid_argument);
  MatchingConstraints e;
  e.coupled = Cut{{0, 2}};
  EXPECT_THROW(enum_forest_matchings(path_graph(3), e), std::invalid_argument);
}

// Constraint semantics checked against a scan over all edge subsets.
TEST(ForestMatchings, MatchesSubsetScan) {
  std::mt19937_64 rng(17);
  for (int iter = 0; iter < 400; ++iter) {
    int n = 1 + static_cast<int>(rng() % 10);
    Graph t = testing::random_tree(n, rng);
    // Drop some edges to get a forest.
    std::vector<Edge> keep;
    for (const Edge& e : t.edges())
      if (rng() % 4) keep.push_back(e);
    Graph f = build_graph(n, keep);
    const auto& e = f.edges();
    MatchingConstraints c;
    std::vector<Edge> forced, forbidden, coupled;
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    for (const Edge& x : e) {
      switch (rng() % 6) {
        case 0:
          if (!used[x.u] && !used[x.v]) {
            forced.push_back(x);
            used[x.u] = used[x.v] = 1;
          }
          break;
        case 1: forbidden.push_back(x); break;
        case 2: coupled.push_back(x); break;
        default: break;
      }
    }
    c.forced = Cut(forced);
    c.forbidden = Cut(forbidden);
    c.coupled = Cut(coupled);
    if (rng() % 2) c.parity = static_cast<int>(rng() % 2);
    c.require_nonempty = rng() % 2;

    std::set<Cut> expected;
    for (std::uint32_t mask = 0; mask < (1u << e.size()); ++mask) {
      std::vector<Edge> s;
      for (std::size_t i = 0; i < e.size(); ++i)
        if (mask >> i & 1u) s.push_back(e[i]);
      Cut m(s);
      if (!is_matching(f, m)) continue;
      if (!c.forced.subset_of(m)) continue;
      bool bad = false;
      for (const Edge& x : c.forbidden) bad = bad || m.contains(x);
      int in_c = 0;
      for (const Edge& x : c.coupled) in_c += m.contains(x) ? 1 : 0;
      bad = bad || (in_c != 0 && in_c != static_cast<int>(c.coupled.size()));
      if (c.parity && static_cast<int>(m.size() % 2) != *c.parity) bad = true;
      if (c.require_nonempty && m.empty()) bad = true;
      if (!bad) expected.insert(m);
    }
    auto got = enum_forest_matchings(f, c).collect();
    ASSERT_EQ(got.size(), as_set(got).size()) << "duplicates";
    ASSERT_EQ(as_set(got), expected);
  }
}

TEST(SpanningTree, Examples) {
  EXPECT_EQ(spanning_tree_enum(path_graph(6), Kind::All).collect().size(), 12u);
  auto c5 = as_set(spanning_tree_enum(cycle_graph(5), Kind::All).collect());
  EXPECT_EQ(c5, (std::set<Cut>{Cut{{0, 1}, {2, 3}}, Cut{{0, 1}, {3, 4}}, Cut{{1, 2}, {3, 4}},
                               Cut{{1, 2}, {0, 4}}, Cut{{2, 3}, {0, 4}}}));
  auto c6 = as_set(spanning_tree_enum(cycle_graph(6), Kind::All).collect());
  EXPECT_EQ(c6.size(), 9u);
  for (const Cut& c : c6) EXPECT_EQ(c.size(), 2u);
  EXPECT_EQ(c6, brute_cuts(cycle_graph(6)));
}

TEST(SpanningTree, EqualsOracleOnAllGraphsUpToSix) {
  for (int n = 1; n <= 6; ++n) {
    const std::uint32_t pairs = static_cast<std::uint32_t>(n * (n - 1) / 2);
    for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
      Graph g = labeled_graph(n, mask);
      for (Kind k : {Kind::All, Kind::Minimal, Kind::Maximal}) {
        auto st = spanning_tree_enum(g, k).collect();
        auto oracle = oracle_enum(g, k);
        ASSERT_EQ(st.size(), as_set(st).size());
        ASSERT_EQ(as_set(st), as_set(oracle)) << "n=" << n << " mask=" << mask;
      }
    }
  }
}

TEST(CountMc, Paths) {
  for (int n = 2; n <= 10; ++n) EXPECT_EQ(count_mc(path_graph(n), Kind::All), fib(n + 1) - 1);
}

TEST(CountMc, SmallExamples) {
  EXPECT_EQ(count_mc(from_edges(3, {{1, 2}}), Kind::All), 2u);
  EXPECT_EQ(count_mc(cycle_graph(7), Kind::Maximal), 14u);
}

TEST(CountMc, TreesCountNonemptyMatchings) {
  std::mt19937_64 rng(23);
  for (int iter = 0; iter < 200; ++iter) {
    Graph t = testing::random_tree(2 + static_cast<int>(rng() % 11), rng);
    EXPECT_EQ(count_mc(t, Kind::All), testing::count_nonempty_matchings(t));
  }
}

TEST(CountMc, ExtremalBoundUpToSix) {
  for (int n = 1; n <= 6; ++n) {
    const std::uint32_t pairs = static_cast<std::uint32_t>(n * (n - 1) / 2);
    for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
      Graph g = labeled_graph(n, mask);
      auto count = oracle_enum(g, Kind::All).size();
      ASSERT_LE(count, fib(n + 1) - 1);
      if (n >= 5 && count == fib(n + 1) - 1) {
        EXPECT_TRUE(is_connected(g) && g.m() == static_cast<std::size_t>(n - 1));
        for (Vertex v = 0; v < n; ++v) EXPECT_LE(g.degree(v), 2);
      }
    }
  }
}

}  // namespace
}  // namespace mcut
