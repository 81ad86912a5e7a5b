#include <gtest/gtest.h>

#include "wtc/convexity.hpp"
#include "wtc/generators.hpp"
#include "wtc/interval_structure.hpp"

using namespace wtc;

TEST(Chordal, CycleDetection) {
  for (int n = 4; n <= 8; ++n) {
    Graph g = cycle_graph(n);
    auto e = perfect_elimination_order(g);
    ASSERT_FALSE(e.chordal());
    EXPECT_FALSE(cycle_defect(g, *e.cycle));
    EXPECT_EQ(e.cycle->cycle.size(), static_cast<std::size_t>(n));
  }
  EXPECT_TRUE(is_chordal(cycle_graph(3)));
  EXPECT_THROW(maximal_cliques_chordal(cycle_graph(5)), contract_error);
}

TEST(Chordal, EliminationOrdersAndCliques) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    Graph g = random_connected_interval_graph(10, false, seed).graph;
    auto e = perfect_elimination_order(g);
    ASSERT_TRUE(e.chordal());
    EXPECT_FALSE(elimination_order_defect(g, e.order));
    for (const auto& q : maximal_cliques_chordal(g)) {
      EXPECT_TRUE(is_clique(g, q));
      for (Vertex v = 0; v < g.order(); ++v)
        if (!q.contains(v)) {
          EXPECT_FALSE(q.is_subset_of(g.neighbors(v)));  // maximal
        }
    }
  }
}

TEST(Obstructions, AsteroidalTripleAndClaw) {
  Graph s = spider_graph(3, 2);
  auto at = find_asteroidal_triple(s);
  ASSERT_TRUE(at);
  EXPECT_FALSE(triple_defect(s, *at));
  EXPECT_FALSE(find_asteroidal_triple(bn_graph(8)));

  auto claw = find_claw(claw_graph());
  ASSERT_TRUE(claw);
  EXPECT_FALSE(claw_defect(claw_graph(), *claw));
  EXPECT_FALSE(find_claw(path_graph(6)));
}

TEST(Recognition, KnownGraphs) {
  EXPECT_TRUE(is_interval(claw_graph()).member);
  EXPECT_FALSE(is_proper_interval(claw_graph()).member);
  EXPECT_TRUE(is_proper_interval(path_graph(5)).member);
  EXPECT_TRUE(is_interval(fig5_1_graph()).member);
  EXPECT_TRUE(is_interval(fig5_2_graph()).member);
  EXPECT_FALSE(is_interval(spider_graph(3, 2)).member);
  EXPECT_FALSE(recognize(cycle_graph(5), GraphClass::chordal).member);
  EXPECT_EQ(parse_graph_class("proper-interval"), GraphClass::proper_interval);
  EXPECT_THROW(parse_graph_class("split"), input_error);
}

// Every certificate, positive or negative, validates independently.
TEST(Recognition, CertificatesValidate) {
  for (std::uint64_t seed = 1; seed <= 120; ++seed) {
    Graph g = seed % 3 == 0 ? random_connected_interval_graph(9, seed % 2, seed).graph
                            : random_connected_graph(8, static_cast<int>(15 + seed % 40), seed);
    for (auto cls : {GraphClass::chordal, GraphClass::interval, GraphClass::proper_interval}) {
      auto cert = recognize(g, cls);
      EXPECT_FALSE(certificate_defect(g, cert)) << seed << ' ' << to_string(cls);
    }
  }
}

TEST(Recognition, AgreesWithIntersectionModels) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    auto ig = random_connected_interval_graph(10, seed % 2 == 0, seed);
    EXPECT_TRUE(is_interval(ig.graph).member);
    if (seed % 2 == 0) {
      EXPECT_TRUE(is_proper_interval(ig.graph).member);
    }
  }
}

TEST(CliquePath, BnShape) {
  Graph g = bn_graph(8);
  const std::vector<VertexSet> expected{g.set_of({"v1", "v2"}),       g.set_of({"v2", "a", "v3"}),
                                        g.set_of({"v2", "v3", "v4"}), g.set_of({"v2", "v4", "v5"}),
                                        g.set_of({"v2", "v5", "v6"}), g.set_of({"v2", "v6", "v7"}),
                                        g.set_of({"v7", "v8"})};
  auto p = build_clique_path(g);
  ASSERT_TRUE(p);
  EXPECT_FALSE(clique_path_defect(g, *p));
  EXPECT_TRUE(p->cliques == expected || p->reversed().cliques == expected);
}

TEST(CliquePath, PinsAndModels) {
  Graph g = fig5_1_graph();
  auto cliques = maximal_cliques_chordal(g);
  for (const auto& q : cliques) {
    auto p = build_clique_path(g, cliques, {q, std::nullopt});
    if (!p) continue;
    EXPECT_EQ(p->cliques.front(), q);
    EXPECT_FALSE(clique_path_defect(g, *p));
    EXPECT_FALSE(model_defect(g, model_from_clique_path(g, *p), false));
  }
  Graph path = path_graph(6);
  auto pp = build_clique_path(path);
  ASSERT_TRUE(pp);
  EXPECT_FALSE(model_defect(path, proper_model_from_clique_path(path, *pp), true));
}

TEST(EndVertices, Fig5) {
  Graph g = fig5_1_graph();
  EndVertexIndex idx(g);
  EXPECT_TRUE(idx.is_end_vertex(g.vertex("s1")));
  EXPECT_TRUE(idx.is_end_vertex(g.vertex("s2")));
  EXPECT_TRUE(idx.is_end_vertex(g.vertex("q1")));
  EXPECT_FALSE(idx.is_end_vertex(g.vertex("5")));
  EXPECT_EQ(g.labels_of(idx.end_simplicial_vertices()), (std::vector<std::string>{"s1", "q1", "s2"}));
}

// In a proper interval graph, a vertex is an end vertex exactly when it is not
// the designated vertex of an induced centered P5, star122 or bull. General
// interval graphs need further patterns.
TEST(EndVertices, ForbiddenPatternCharacterisation) {
  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    Graph g = random_connected_interval_graph(static_cast<int>(4 + seed % 9), true, seed).graph;
    EndVertexIndex idx(g);
    for (Vertex a = 0; a < g.order(); ++a)
      EXPECT_EQ(idx.is_end_vertex(a), gimbel_forbidden_check(g, a).empty()) << seed << ' ' << g.label(a);
  }
  Graph bull = bull_graph();
  auto m = gimbel_forbidden_check(bull, bull.vertex("a"));
  ASSERT_FALSE(m.empty());
  EXPECT_EQ(m.front().pattern, "bull");
}

TEST(EndVertices, NotExtremeWhenNotEnd) {
  for (int n = 6; n <= 9; ++n) {
    Graph g = bn_graph(n);
    EXPECT_FALSE(is_end_vertex(g, g.vertex("a")));
    EXPECT_FALSE(extreme_vertices(g, g.vertices(), ConvexityKind::weakly_toll).contains(g.vertex("a")));
  }
}

TEST(Serialization, CertificateJson) {
  Graph g = claw_graph();
  auto j = to_json(g, is_proper_interval(g));
  EXPECT_EQ(j["member"], false);
  EXPECT_EQ(j["obstruction"]["kind"], "claw");
  EXPECT_EQ(j["obstruction"]["center"], "b");
  auto k = to_json(g, is_interval(g));
  EXPECT_EQ(k["member"], true);
  EXPECT_EQ(k["clique_path"].size(), 3u);
}
