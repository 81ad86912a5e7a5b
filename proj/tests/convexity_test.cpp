#include <gtest/gtest.h>

#include "wtc/convexity.hpp"
#include "wtc/generators.hpp"
#include "wtc/oracle.hpp"

using namespace wtc;

namespace {

VertexSet set(const Graph& g, std::initializer_list<std::string_view> labels) { return g.set_of(labels); }

}  // namespace

TEST(Intervals, ClawFacts) {
  Graph g = claw_graph();
  const Vertex a = g.vertex("a"), c = g.vertex("c");
  EXPECT_EQ(weakly_toll_interval(g, a, c), set(g, {"a", "b", "c", "d"}));
  EXPECT_EQ(toll_interval(g, a, c), set(g, {"a", "b", "c"}));
  EXPECT_EQ(geodesic_interval(g, a, c), set(g, {"a", "b", "c"}));
  EXPECT_EQ(monophonic_interval(g, a, c), set(g, {"a", "b", "c"}));
}

TEST(Intervals, Conventions) {
  Graph g = path_graph(3);
  for (auto kind : all_kinds) {
    EXPECT_EQ(interval(g, 0, 0, kind), VertexSet(3, {0}));
    EXPECT_EQ(interval(g, 0, 1, kind), VertexSet(3, {0, 1}));
  }
  Graph split({"a", "b"}, {});
  auto d = interval_detail(split, 0, 1, ConvexityKind::weakly_toll);
  EXPECT_TRUE(d.separated);
  EXPECT_EQ(d.members, VertexSet(2, {0, 1}));
  EXPECT_THROW(interval(g, 0, 7, ConvexityKind::toll), input_error);
}

TEST(Intervals, Fig5First) {
  Graph g = fig5_1_graph();
  auto I = [&](std::string_view a, std::string_view b) { return weakly_toll_interval(g, g.vertex(a), g.vertex(b)); };
  EXPECT_EQ(I("s1", "s2"), set(g, {"s1", "3", "4", "5", "2", "q1", "s2"}));
  EXPECT_EQ(I("s1", "q1"), g.vertices());
  EXPECT_EQ(I("q1", "s2"), set(g, {"s1", "1", "3", "4", "5", "q1", "s2"}));
  // 2 sees q1 but cannot be its only gate: 3 is adjacent to q1 as well
  EXPECT_FALSE(I("q1", "s2").contains(g.vertex("2")));
}

TEST(Intervals, NestedKinds) {
  // geodesic within monophonic within toll within weakly toll
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    Graph g = random_connected_graph(8, 35, seed);
    for (Vertex u = 0; u < g.order(); ++u)
      for (Vertex v = u + 1; v < g.order(); ++v) {
        auto geo = geodesic_interval(g, u, v), mono = monophonic_interval(g, u, v);
        auto toll = toll_interval(g, u, v), wt = weakly_toll_interval(g, u, v);
        EXPECT_TRUE(geo.is_subset_of(mono));
        EXPECT_TRUE(mono.is_subset_of(toll));
        EXPECT_TRUE(toll.is_subset_of(wt));
      }
  }
}

TEST(Intervals, WitnessWalksValidate) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    Graph g = random_connected_graph(9, 30, seed);
    for (Vertex u = 0; u < g.order(); ++u)
      for (Vertex v = u + 1; v < g.order(); ++v) {
        if (g.adjacent(u, v)) continue;
        for (auto [kind, wk] : {std::pair{ConvexityKind::weakly_toll, WalkKind::weakly_toll},
                                std::pair{ConvexityKind::toll, WalkKind::tolled}}) {
          auto members = interval(g, u, v, kind);
          for (Vertex x = 0; x < g.order(); ++x) {
            auto w = witness_walk(g, u, v, x, wk);
            ASSERT_EQ(w.has_value(), members.contains(x)) << seed << ' ' << u << ' ' << v << ' ' << x;
            if (w) {
              EXPECT_TRUE(is_valid_walk(g, *w));
              EXPECT_NE(std::find(w->walk.begin(), w->walk.end(), x), w->walk.end());
            }
          }
        }
      }
  }
}

TEST(Hull, Fig5Levels) {
  Graph g = fig5_1_graph();
  auto t = hull(g, set(g, {"s1", "s2"}), ConvexityKind::weakly_toll);
  ASSERT_EQ(t.levels.size(), 3u);
  EXPECT_EQ(t.levels[1], set(g, {"s1", "2", "3", "4", "5", "q1", "s2"}));
  EXPECT_EQ(t.hull, g.vertices());
}

TEST(Hull, Properties) {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    Graph g = random_connected_graph(8, 30, seed);
    for (auto kind : all_kinds) {
      IntervalTable table(g, kind);
      for (std::uint64_t m = 1; m < 256; m += 7) {
        auto s = from_mask(8, m);
        auto h = hull(table, s).hull;
        EXPECT_TRUE(s.is_subset_of(h));
        EXPECT_TRUE(is_convex(table, h).convex);
        EXPECT_EQ(hull(table, h).hull, h);
      }
    }
  }
}

TEST(Convexity, ViolationPointsIntoInterval) {
  Graph g = claw_graph();
  auto check = is_convex(g, set(g, {"a", "b", "c"}), ConvexityKind::weakly_toll);
  ASSERT_FALSE(check);
  EXPECT_EQ(g.label(check.violation->escaping), "d");
  EXPECT_TRUE(is_convex(g, set(g, {"a", "b", "c"}), ConvexityKind::toll));
}

TEST(Convexity, ExtremeVertices) {
  Graph p = path_graph(5);
  EXPECT_EQ(extreme_vertices(p, p.vertices(), ConvexityKind::weakly_toll), p.set_of({"v1", "v5"}));
  Graph k = complete_graph(4);
  EXPECT_EQ(extreme_vertices(k, k.vertices(), ConvexityKind::weakly_toll), k.vertices());
  Graph c = claw_graph();
  EXPECT_TRUE(extreme_vertices(c, c.vertices(), ConvexityKind::weakly_toll).empty());
}

TEST(Convexity, EnumerationMatchesBruteForce) {
  Graph g = bull_graph();
  IntervalTable table(g, ConvexityKind::weakly_toll);
  auto sets = enumerate_convex_sets(table);
  std::size_t brute = 0;
  for (std::uint64_t m = 0; m < 32; ++m) brute += is_convex(table, from_mask(5, m)).convex;
  EXPECT_EQ(sets.size(), brute);
  EXPECT_TRUE(std::is_sorted(sets.begin(), sets.end(), [](auto& a, auto& b) { return size_lex_less(a, b); }));
}

TEST(Geometry, BruteForceVerdicts) {
  EXPECT_TRUE(is_convex_geometry_bruteforce(path_graph(6), ConvexityKind::weakly_toll).convex_geometry);
  EXPECT_TRUE(is_convex_geometry_bruteforce(complete_graph(4), ConvexityKind::weakly_toll).convex_geometry);
  auto claw = is_convex_geometry_bruteforce(claw_graph(), ConvexityKind::weakly_toll);
  EXPECT_FALSE(claw.convex_geometry);
  EXPECT_TRUE(claw.counterexample.has_value());
}
