#include <gtest/gtest.h>

#include "mcut/generators.hpp"
#include "mcut/parameters.hpp"
#include "test_support.hpp"

namespace mcut {
namespace {

using testing::brute_cuts;

Graph make(Family f, int n, int k, int l = 0, int p = 0, std::uint64_t seed = 0) {
  return generate({f, n, k, l, p, seed}).graph;
}

std::uint64_t pow_u(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

TEST(Generate, NamedFamilies) {
  EXPECT_EQ(make(Family::Path, 6, 0), testing::path_graph(6));
  EXPECT_EQ(make(Family::Cycle, 5, 0), testing::cycle_graph(5));
  EXPECT_EQ(make(Family::Complete, 4, 0), testing::complete_graph(4));
  EXPECT_EQ(make(Family::HkMin, 0, 1), testing::path_graph(5));
  Graph kc = make(Family::Kc7, 0, 2);
  EXPECT_EQ(kc.n(), 14);
  EXPECT_EQ(kc.m(), 14u);
  EXPECT_EQ(component_count(kc), 2);
  Graph sf = make(Family::StarForest, 0, 2, 0, 3);
  EXPECT_EQ(sf.n(), 8);
  EXPECT_EQ(sf.m(), 6u);
  Graph p3 = make(Family::P3Gadget, 0, 3);
  EXPECT_EQ(p3.n(), 11);
  EXPECT_EQ(p3.m(), 12u);
  Graph hkl = make(Family::HklFen, 0, 2, 4);
  EXPECT_EQ(hkl.n(), 10);
  EXPECT_EQ(hkl.m(), 10u);
}

TEST(Generate, RejectsMalformedSpecs) {
  EXPECT_THROW(make(Family::Path, 0, 0), std::invalid_argument);
  EXPECT_THROW(make(Family::Cycle, 2, 0), std::invalid_argument);
  EXPECT_THROW(make(Family::StarForest, 0, 2, 0, 0), std::invalid_argument);
  EXPECT_THROW(make(Family::HklFen, 0, 2, 0), std::invalid_argument);
  EXPECT_THROW(make(Family::RandomCp, 10, 0), std::invalid_argument);
}

TEST(Generate, SeededDeterminism) {
  for (Family f : {Family::RandomVc, Family::RandomFen, Family::RandomCp, Family::RandomNd}) {
    EXPECT_EQ(make(f, 12, 3, 0, 0, 77), make(f, 12, 3, 0, 0, 77));
  }
}

TEST(Generate, CertificatesAreValid) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    auto cp = generate({Family::RandomCp, 12, 3, 0, 0, seed});
    ASSERT_TRUE(cp.clique_partition.has_value());
    EXPECT_LE(cp.clique_partition->size(), 3u);
    block_index(cp.graph.n(), *cp.clique_partition);
    for (const VertexSet& b : cp.clique_partition->blocks)
      for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = i + 1; j < b.size(); ++j) EXPECT_TRUE(cp.graph.has_edge(b[i], b[j]));

    auto fen = generate({Family::RandomFen, 12, 3, 0, 0, seed});
    ASSERT_TRUE(fen.feedback_edges.has_value());
    EXPECT_TRUE(is_forest(remove_edges(fen.graph, *fen.feedback_edges)));
    EXPECT_LE(fen.feedback_edges->size(), 3u);

    auto nd = generate({Family::RandomNd, 12, 4, 0, 0, seed});
    if (nd.modular_partition) {
      for (const VertexSet& b : nd.modular_partition->blocks) EXPECT_TRUE(is_module(nd.graph, b));
    }

    auto vc = generate({Family::RandomVc, 12, 3, 0, 0, seed});
    EXPECT_LE(vc_2approx(vc.graph).size(), 6u);
  }
}

TEST(FamilyCounts, CyclesOfSeven) {
  EXPECT_EQ(brute_cuts(make(Family::Kc7, 0, 1), Kind::Maximal).size(), 14u);
  EXPECT_EQ(brute_cuts(make(Family::Kc7, 0, 2), Kind::Maximal).size(), 196u);
}

TEST(FamilyCounts, HkMinimal) {
  for (int k = 1; k <= 2; ++k) EXPECT_GE(brute_cuts(make(Family::HkMin, 0, k), Kind::Minimal).size(), pow_u(4, k));
}

TEST(FamilyCounts, StarForest) {
  // A single star is connected, so the empty set is not a cut: only its p edges.
  Graph one = make(Family::StarForest, 0, 1, 0, 3);
  EXPECT_EQ(brute_cuts(one, Kind::All).size(), 3u);
  EXPECT_EQ(brute_cuts(one, Kind::Maximal).size(), 3u);
  for (auto [k, p] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 2}}) {
    Graph g = make(Family::StarForest, 0, k, 0, p);
    EXPECT_EQ(brute_cuts(g, Kind::All).size(), pow_u(static_cast<std::uint64_t>(p + 1), k));
    EXPECT_EQ(brute_cuts(g, Kind::Maximal).size(), pow_u(static_cast<std::uint64_t>(p), k));
  }
}

TEST(FamilyCounts, P3Gadget) {
  for (int k = 1; k <= 3; ++k) EXPECT_GE(brute_cuts(make(Family::P3Gadget, 0, k), Kind::Minimal).size(), pow_u(2, k));
}

TEST(FamilyCounts, HklFen) {
  for (int l : {3, 4}) EXPECT_GE(brute_cuts(make(Family::HklFen, 0, 2, l), Kind::Minimal).size(), pow_u(static_cast<std::uint64_t>(l), 2));
}

}  // namespace
}  // namespace mcut
