#include <gtest/gtest.h>

#include "mcut/verify.hpp"
#include "test_support.hpp"

namespace mcut {
namespace {

using testing::cycle_graph;
using testing::from_edges;
using testing::path_graph;
using testing::star_graph;

TEST(VerifyMethod, StarWithVertexCover) {
  auto r = verify_method(star_graph(5), Method::Vc, Kind::All);
  EXPECT_TRUE(r.pass()) << report_line(r);
  EXPECT_EQ(r.oracle_count, 5u);
  EXPECT_EQ(r.lifted_count, 5u);
}

TEST(VerifyMethod, SixCycleWithFeedbackEdges) {
  auto r = verify_method(cycle_graph(6), Method::Fen, Kind::Minimal);
  EXPECT_TRUE(r.pass()) << report_line(r);
  EXPECT_EQ(r.oracle_count, 9u);
}

TEST(VerifyMethod, TwoFiveCliquesWithCliquePartition) {
  std::vector<Edge> e;
  for (int base : {0, 5})
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j) e.push_back({base + i, base + j});
  e.push_back({4, 5});
  Certificates certs;
  certs.clique_partition = VertexClassPartition{{{0, 1, 2, 3, 4}, {5, 6, 7, 8, 9}}, {}};
  auto r = verify_method(build_graph(10, e), Method::Cp, Kind::All, certs);
  EXPECT_TRUE(r.pass()) << report_line(r);
  EXPECT_EQ(r.oracle_count, 1u);
  EXPECT_EQ(r.lifted_count, 1u);
}

TEST(VerifyMethod, RejectsInapplicableCombinations) {
  EXPECT_THROW(verify_method(path_graph(4), Method::Mw, Kind::All), std::invalid_argument);
  EXPECT_THROW(verify_method(path_graph(4), Method::Fen, Kind::Maximal), std::invalid_argument);
  EXPECT_THROW(verify_method(path_graph(4), Method::Cp, Kind::All), std::invalid_argument);
  EXPECT_THROW(verify_method(path_graph(4), Method::Oracle, Kind::All), std::invalid_argument);
}

TEST(VerifyMethod, ReportLineFormat) {
  auto r = verify_method(star_graph(2), Method::Vc, Kind::All, {}, "star");
  // The greedy cover of P3 has two vertices: bound 1 + 2*2 + 3*1.
  EXPECT_EQ(report_line(r), "star\tvc\tall\t2\t2\t0\t0\t0\t0\t0\t3\t8\tPASS");
  VerifyReport bad = r;
  bad.misses = 1;
  EXPECT_FALSE(bad.pass());
  bad = r;
  bad.within_bound = false;
  EXPECT_FALSE(bad.pass());
}

TEST(CheckExtremal, FiveVertices) {
  auto rep = check_extremal(all_labelled_graphs(5));
  EXPECT_TRUE(rep.pass());
  EXPECT_EQ(rep.instances, 1024u);
  EXPECT_EQ(rep.max_count, 7u);
  EXPECT_EQ(rep.attainers, 60u);  // labelled copies of P5: 5!/2
}

TEST(CheckExtremal, FourVerticesAdmitTwoEdges) {
  auto graphs = all_labelled_graphs(4);
  auto rep = check_extremal(graphs);
  EXPECT_TRUE(rep.pass());
  // 12 labelled P4 plus 3 labelled 2K2.
  EXPECT_EQ(rep.attainers, 15u);
  EXPECT_FALSE(check_extremal({from_edges(5, {{0, 1}, {2, 3}})}).over_bound);
}

TEST(CheckExtremal, AllowedAttainers) {
  EXPECT_TRUE(extremal_allowed(path_graph(5)));
  EXPECT_TRUE(extremal_allowed(from_edges(4, {{0, 1}, {2, 3}})));
  EXPECT_TRUE(extremal_allowed(from_edges(3, {{1, 2}})));
  EXPECT_FALSE(extremal_allowed(from_edges(5, {{0, 1}, {2, 3}})));
  EXPECT_FALSE(extremal_allowed(star_graph(3)));
  EXPECT_FALSE(extremal_allowed(edgeless_graph(3)));
}

TEST(StandardCorpus, DeterministicAndSmall) {
  for (Method m : {Method::Vc, Method::Tc, Method::Nd, Method::Mw, Method::Fen, Method::Cp}) {
    auto a = standard_corpus(m, 30, 7);
    auto b = standard_corpus(m, 30, 7);
    ASSERT_EQ(a.size(), 30u);
    for (std::size_t i = 0; i < a.size(); ++i) {
      EXPECT_EQ(a[i].g, b[i].g);
      EXPECT_LE(a[i].g.n(), 14);
    }
  }
}

TEST(StandardCorpus, EveryMethodPasses) {
  for (Method m : {Method::Vc, Method::Tc, Method::Nd, Method::Mw, Method::Fen, Method::Cp})
    for (const auto& inst : standard_corpus(m, 40, 3))
      for (Kind kind : applicable_kinds(m)) {
        auto r = verify_method(inst.g, m, kind, inst.certs, inst.id);
        EXPECT_TRUE(r.pass()) << report_line(r);
      }
}

TEST(EnumerateWith, MethodsAgreeWithOracle) {
  for (Method m : {Method::SpanningTree, Method::Vc, Method::Tc, Method::Nd, Method::Mw, Method::Fen, Method::Cp})
    for (const auto& inst : standard_corpus(m == Method::SpanningTree ? Method::Vc : m, 25, 9))
      for (Kind kind : {Kind::All, Kind::Minimal, Kind::Maximal}) {
        if (!method_supports(m, kind)) continue;
        auto got = testing::as_set(enumerate_with(inst.g, m, kind, inst.certs).collect());
        EXPECT_EQ(got, testing::as_set(oracle_enum(inst.g, kind))) << method_name(m) << " " << inst.id;
      }
}

}  // namespace
}  // namespace mcut
