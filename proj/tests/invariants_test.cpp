#include <gtest/gtest.h>

#include "wtc/generators.hpp"
#include "wtc/invariants.hpp"
#include "wtc/io.hpp"
#include "wtc/parallel.hpp"

using namespace wtc;

TEST(Invariants, Trees) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    Graph t = random_tree(static_cast<int>(2 + seed % 12), seed);
    auto r = invariants(t);
    EXPECT_EQ(r.wtn.value, 2u);
    EXPECT_EQ(r.wth.value, 2u);
    EXPECT_EQ(r.wtn.method, Method::tree_theorem);
    EXPECT_TRUE(r.wtn.validated);
  }
}

TEST(Invariants, ProperIntervalUsesExtremeVertices) {
  Graph k = complete_graph(5);
  auto r = invariants(k);
  EXPECT_EQ(r.wtn.method, Method::prop7);
  EXPECT_EQ(r.wtn.value, 5u);
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    Graph g = random_connected_interval_graph(static_cast<int>(2 + seed % 10), true, seed).graph;
    auto inv = invariants(g);
    EXPECT_EQ(inv.wtn.value, oracle::wtn(g).count) << seed;
    EXPECT_EQ(inv.wth.value, oracle::wth(g).count) << seed;
    EXPECT_EQ(inv.wtn.value, inv.ext.count());
  }
}

TEST(Invariants, Fig5Frozen) {
  Graph g = fig5_1_graph();
  auto r = invariants(g);
  EXPECT_EQ(r.wtn.value, 2u);
  EXPECT_EQ(r.wth.value, 2u);
  EXPECT_TRUE(r.wtn.validated);
  EXPECT_TRUE(r.notes.empty());
  Graph h = fig5_2_graph();
  EXPECT_EQ(invariants(h).wtn.value, 2u);
  EXPECT_EQ(oracle::wtn(h).count, 2u);
}

TEST(Invariants, OracleFallbackOutsideTheorems) {
  Graph c = cycle_graph(6);
  auto r = invariants(c);
  EXPECT_EQ(r.wtn.method, Method::oracle);
  EXPECT_EQ(r.wth.value, 2u);
  EXPECT_THROW(invariants(Graph({"a", "b"}, {})), contract_error);
}

// The interval formula reproduces the oracle on interval graphs without twin
// simplicial vertices.
TEST(Invariants, FormulaMatchesOracleWithoutTwins) {
  std::size_t compared = 0;
  for (std::uint64_t seed = 1; compared < 60 && seed < 5000; ++seed) {
    Graph g = random_connected_interval_graph(static_cast<int>(4 + seed % 8), false, seed).graph;
    if (is_proper_interval(g).member || has_twin_simplicial(g, TwinReading::any_twin)) continue;
    ++compared;
    for (auto reading : {MaximalityReading::all_vertices, MaximalityReading::end_simplicial}) {
      StructuralOptions opts;
      opts.reading = reading;
      auto s = wtn_interval_structural(g, opts);
      EXPECT_EQ(s.wtn, oracle::wtn(g).count) << seed;
      EXPECT_EQ(s.wth, oracle::wth(g).count) << seed;
    }
  }
  EXPECT_EQ(compared, 60u);
}

TEST(Invariants, BoundsAndWitnesses) {
  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    Graph g = seed % 2 ? random_connected_interval_graph(static_cast<int>(3 + seed % 9), false, seed).graph
                       : random_connected_graph(static_cast<int>(3 + seed % 8), 30, seed);
    auto r = invariants(g);
    EXPECT_LE(2u, r.wth.value);
    EXPECT_LE(r.wth.value, r.wtn.value);
    EXPECT_LE(r.wtn.value, g.order());
    EXPECT_TRUE(r.ext.is_subset_of(r.wth.witness) || !r.wth.validated) << seed;
    if (r.wtn.validated) {
      IntervalTable t(g, ConvexityKind::weakly_toll);
      EXPECT_EQ(t.of_set(r.wtn.witness), g.vertices());
    }
    // unvalidated structural answers are replaced by the oracle within budget
    EXPECT_TRUE(r.wtn.validated && r.wth.validated) << seed;
  }
}

// A twin of a simplicial vertex is simplicial, so both readings agree.
TEST(Invariants, TwinReadingsCoincide) {
  for (int n = 2; n <= 6; ++n)
    for_each_labelled_graph(n, true, [&](const Graph& g) {
      ASSERT_EQ(has_twin_simplicial(g, TwinReading::any_twin), has_twin_simplicial(g, TwinReading::simplicial_pair));
    });
}

TEST(Geometry, DichotomyOnSmallGraphs) {
  for (int n = 2; n <= 6; ++n)
    for_each_labelled_graph(n, true, [&](const Graph& g) {
      auto r = is_convex_geometry(g, GeometryMode::both);
      ASSERT_TRUE(r.agree()) << to_edge_list(g);
    });
}

TEST(CrossValidation, RecordsCarryCertificates) {
  std::vector<NamedGraph> corpus{{"fig5_1", fig5_1_graph()}, {"claw", claw_graph()}, {"c6", cycle_graph(6)}};
  auto cv = cross_validate(corpus);
  ASSERT_EQ(cv.records.size(), 3u);
  EXPECT_EQ(cv.compared, 2u);
  EXPECT_EQ(cv.discrepancies, 0u);
  auto j = to_json(cv.records[0]);
  EXPECT_EQ(j["name"], "fig5_1");
  EXPECT_EQ(j["oracle"]["wtn"], 2);
}

TEST(Parallel, DeterministicOrderAndErrors) {
  auto square = [](std::size_t i) { return i * i; };
  auto one = parallel_map(200, 1, square), four = parallel_map(200, 4, square);
  EXPECT_EQ(one, four);
  EXPECT_EQ(four[13], 169u);
  EXPECT_THROW(parallel_map(50, 3,
                            [](std::size_t i) -> int {
                              if (i == 17) throw std::runtime_error("boom");
                              return 0;
                            }),
               std::runtime_error);
  EXPECT_TRUE(parallel_map(0, 4, square).empty());
}
