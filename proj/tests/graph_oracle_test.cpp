#include <gtest/gtest.h>

#include "cubicpm/graph_oracle.hpp"
#include "cubicpm/graph_series.hpp"

namespace cubicpm {
namespace {

TEST(LabeledCubic, CountsOfAllLabeledCubicGraphs) {
  const long expected[] = {1, 70, 19355};
  for (int n = 4; n <= 8; n += 2) {
    long count = 0;
    for_each_labeled_cubic(n, [&](const LabeledGraph& g) {
      ++count;
      for (int v = 0; v < n; ++v) ASSERT_EQ(g.degree(v), 3);
    });
    EXPECT_EQ(count, expected[n / 2 - 2]) << n;
  }
}

TEST(LabeledCubic, OnlyK4OnFourVertices) {
  const auto graphs = enumerate_labeled_cubic_planar(4);
  ASSERT_EQ(graphs.size(), 1u);
  EXPECT_EQ(graphs[0], complete_graph(4));
}

TEST(LabeledCubic, SizeChecks) {
  EXPECT_THROW(enumerate_labeled_cubic_planar(5), UsageError);
  EXPECT_THROW(enumerate_labeled_cubic_planar(2), UsageError);
  EXPECT_THROW(enumerate_labeled_cubic_planar(10), ResourceError);
  EXPECT_THROW(labeled_census(12, 1, true), ResourceError);
}

TEST(Planarity, Kuratowski) {
  EXPECT_TRUE(is_planar(complete_graph(4)));
  EXPECT_FALSE(is_planar(complete_bipartite(3, 3)));
  EXPECT_FALSE(is_planar(complete_graph(5)));
  EXPECT_TRUE(is_planar(prism()));
  EXPECT_TRUE(is_planar_by_rotations(complete_graph(4)));
  EXPECT_FALSE(is_planar_by_rotations(complete_bipartite(3, 3)));
  EXPECT_FALSE(is_planar_by_rotations(complete_graph(5)));
}

TEST(Planarity, RotationSearchAgreesOnSmallCubicGraphs) {
  int nonplanar = 0;
  for (int n = 4; n <= 6; n += 2) {
    for_each_labeled_cubic(n, [&](const LabeledGraph& g) {
      const bool p = is_planar(g);
      EXPECT_EQ(p, is_planar_by_rotations(g));
      nonplanar += !p;
    });
  }
  EXPECT_EQ(nonplanar, 10);  // the labelings of K_{3,3}: 6! / 72
}

TEST(Planarity, DisconnectedGraphs) {
  LabeledGraph two_k4 = LabeledGraph::from_edges(8, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                                                     {4, 5}, {4, 6}, {4, 7}, {5, 6}, {5, 7}, {6, 7}});
  EXPECT_TRUE(is_planar(two_k4));
  EXPECT_TRUE(is_planar_by_rotations(two_k4));
  EXPECT_FALSE(is_connected(two_k4));
}

TEST(Matchings, SmallGraphs) {
  EXPECT_EQ(count_perfect_matchings_graph(complete_graph(4)), 3);
  EXPECT_EQ(count_perfect_matchings_graph(prism()), 4);
  EXPECT_EQ(count_perfect_matchings_graph(complete_bipartite(3, 3)), 6);
  EXPECT_THROW(count_perfect_matchings_graph(complete_graph(5)), UsageError);
}

TEST(Bridges, Detection) {
  EXPECT_FALSE(has_bridge(prism()));
  // Two triangles joined by an edge.
  EXPECT_TRUE(has_bridge(LabeledGraph::from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}})));
}

TEST(Census, TableRows) {
  const LabeledCensus c4 = labeled_census(4);
  EXPECT_EQ(c4.all, 3);
  EXPECT_EQ(c4.connected, 3);
  EXPECT_EQ(c4.bridgeless, 3);
  EXPECT_EQ(labeled_census(6).connected, 240);
  const LabeledCensus c8 = labeled_census(8, 2);
  EXPECT_EQ(c8.all, 70875);
  EXPECT_EQ(c8.connected, 70560);
  EXPECT_EQ(c8.bridgeless, 70560);
  EXPECT_EQ(c8.all - c8.connected, 315);
  EXPECT_EQ(c8[GraphFilter::All], 70875);
}

TEST(Census, AgreesWithTheNetworkSystems) {
  const auto rows = labeled_counts_table(8);
  for (int n = 4; n <= 8; n += 2) {
    const LabeledCensus c = labeled_census(n);
    const auto& row = rows[n / 2 - 1];
    EXPECT_EQ(c.all, row.all);
    EXPECT_EQ(c.connected, row.connected);
    EXPECT_EQ(c.bridgeless, row.bridgeless);
  }
}

TEST(Export, EdgeList) {
  EXPECT_EQ(to_edge_list(complete_graph(4)), "4 6\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n");
}

}  // namespace
}  // namespace cubicpm
