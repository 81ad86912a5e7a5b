#include <gtest/gtest.h>

#include "wtc/generators.hpp"
#include "wtc/io.hpp"

using namespace wtc;

TEST(Generators, SmallFamilies) {
  EXPECT_EQ(path_graph(5).size(), 4u);
  EXPECT_EQ(cycle_graph(5).size(), 5u);
  EXPECT_EQ(complete_graph(5).size(), 10u);
  EXPECT_EQ(claw_graph().size(), 3u);
  EXPECT_EQ(bull_graph().size(), 5u);
  EXPECT_EQ(star122_graph().order(), 6u);
  EXPECT_EQ(spider_graph(3, 2).order(), 7u);
  EXPECT_THROW(cycle_graph(2), input_error);
  EXPECT_THROW(bn_graph(5), input_error);
}

TEST(Generators, BnShape) {
  Graph g = bn_graph(8);
  EXPECT_EQ(g.order(), 9u);
  EXPECT_EQ(g.degree(g.vertex("v2")), 7u);  // v1, a, v3..v7
  EXPECT_TRUE(g.adjacent(g.vertex("a"), g.vertex("v3")));
  EXPECT_EQ(g.degree(g.vertex("v8")), 1u);
}

TEST(Generators, SeededAndConnected) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto a = random_connected_graph(10, 30, seed), b = random_connected_graph(10, 30, seed);
    EXPECT_EQ(to_edge_list(a), to_edge_list(b));
    EXPECT_TRUE(is_connected(a));
    EXPECT_TRUE(is_tree(random_tree(9, seed)));
    auto ig = random_connected_interval_graph(9, seed % 2 == 0, seed);
    EXPECT_TRUE(is_connected(ig.graph));
    EXPECT_FALSE(model_defect(ig.graph, ig.model, seed % 2 == 0));
  }
}

TEST(Generators, Enumerations) {
  std::size_t connected = 0;
  for_each_labelled_graph(4, true, [&](const Graph&) { ++connected; });
  EXPECT_EQ(connected, 38u);
  std::size_t trees = 0;
  for_each_labelled_tree(6, [&](const Graph& t) { trees += is_tree(t); });
  EXPECT_EQ(trees, 1296u);  // 6^4
  EXPECT_EQ(unlabelled_trees(7).size(), 11u);
  EXPECT_EQ(unlabelled_trees(8).size(), 23u);
}

TEST(Generators, NamedLookup) {
  std::vector<int> none, one{6}, two{3, 2};
  EXPECT_EQ(generate_named("fig5_1", none).order(), 8u);
  EXPECT_EQ(generate_named("path", one).order(), 6u);
  EXPECT_EQ(generate_named("spider", two).order(), 7u);
  EXPECT_THROW(generate_named("path", none), input_error);
  EXPECT_THROW(generate_named("nope", none), input_error);
}
