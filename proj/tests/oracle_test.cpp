#include <gtest/gtest.h>

#include "wtc/convexity.hpp"
#include "wtc/generators.hpp"
#include "wtc/oracle.hpp"

using namespace wtc;

// The gate-pair interval code must agree with the direct walk search.
TEST(Oracle, IntervalsAgreeOnAllSmallGraphs) {
  for (int n = 2; n <= 5; ++n)
    for_each_labelled_graph(n, false, [&](const Graph& g) {
      for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u; v < g.order(); ++v) {
          ASSERT_EQ(weakly_toll_interval(g, u, v), oracle::weakly_toll_interval(g, u, v)) << n;
          ASSERT_EQ(toll_interval(g, u, v), oracle::toll_interval(g, u, v));
        }
    });
}

TEST(Oracle, IntervalsAgreeOnRandomGraphs) {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    Graph g = random_connected_graph(10, static_cast<int>(10 + seed % 50), seed);
    for (Vertex u = 0; u < g.order(); ++u)
      for (Vertex v = u + 1; v < g.order(); ++v) {
        ASSERT_EQ(weakly_toll_interval(g, u, v), oracle::weakly_toll_interval(g, u, v)) << seed;
        ASSERT_EQ(toll_interval(g, u, v), oracle::toll_interval(g, u, v)) << seed;
      }
  }
}

TEST(Oracle, KnownInvariants) {
  EXPECT_EQ(oracle::wtn(path_graph(7)).count, 2u);
  EXPECT_EQ(oracle::wtn(complete_graph(5)).count, 5u);
  EXPECT_EQ(oracle::wtn(claw_graph()).count, 2u);
  EXPECT_EQ(oracle::wth(cycle_graph(6)).count, 2u);
  Graph f = fig5_1_graph();
  auto o = oracle::wtn(f);
  EXPECT_EQ(o.count, 2u);
  EXPECT_EQ(f.labels_of(o.set), (std::vector<std::string>{"s1", "q1"}));
  EXPECT_EQ(oracle::wtn(fig5_2_graph()).count, 2u);
}

TEST(Oracle, Budgets) {
  oracle::Budget small;
  small.max_n = 4;
  EXPECT_THROW(oracle::wtn(path_graph(5), small), resource_error);
  oracle::Budget few;
  few.max_subsets = 3;
  EXPECT_THROW(oracle::wtn(complete_graph(6), few), resource_error);
  EXPECT_THROW(oracle::wtn(Graph({"a", "b"}, {})), contract_error);
  EXPECT_THROW(oracle::wtn(Graph({"a"}, {})), contract_error);
}

// The set returned is the colex-first optimum: no smaller set works.
TEST(Oracle, OptimumIsMinimal) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Graph g = random_connected_graph(8, 25, seed);
    IntervalTable t(g, ConvexityKind::weakly_toll);
    auto o = oracle::wtn(g);
    EXPECT_EQ(t.of_set(o.set), g.vertices());
    EXPECT_FALSE(oracle::exists_subset_of_size(g, o.count - 1, [&](const VertexSet& s) { return t.of_set(s) == g.vertices(); }));
    auto h = oracle::wth(g);
    EXPECT_LE(h.count, o.count);
    EXPECT_EQ(hull(t, h.set).hull, g.vertices());
  }
}
