#include <gtest/gtest.h>

#include <set>

#include "wtc/generators.hpp"
#include "wtc/io.hpp"

using namespace wtc;

namespace {

std::size_t error_line(std::string_view text, GraphFormat f = GraphFormat::edge_list) {
  try {
    parse_graph(text, f);
  } catch (const input_error& e) {
    return e.line();
  }
  ADD_FAILURE() << "no error for: " << text;
  return 0;
}

// Edges as label pairs, independent of vertex numbering.
std::set<std::pair<std::string, std::string>> labelled_edges(const Graph& g) {
  std::set<std::pair<std::string, std::string>> out;
  for (auto [u, v] : g.edges()) out.insert(std::minmax(g.label(u), g.label(v)));
  return out;
}

}  // namespace

TEST(EdgeList, ParsesCommentsAndIsolatedVertices) {
  Graph g = parse_graph("# header\na b\n\nb c  # trailing\nz\n", GraphFormat::edge_list);
  EXPECT_EQ(g.labels(), (std::vector<std::string>{"a", "b", "c", "z"}));
  EXPECT_EQ(g.size(), 2u);
  EXPECT_EQ(g.degree(g.vertex("z")), 0u);
}

TEST(EdgeList, ErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line("a b\nb c d\n"), 2u);
  EXPECT_EQ(error_line("a b\n\nb a\n"), 3u);
  EXPECT_EQ(error_line("a a\n"), 1u);
  EXPECT_EQ(error_line("a b\nx,y z\n"), 2u);
}

TEST(EdgeList, RoundTrip) {
  for (const Graph& g : {fig5_1_graph(), bn_graph(8), claw_graph()}) {
    Graph h = parse_graph(to_edge_list(g), GraphFormat::edge_list);
    EXPECT_EQ(h.order(), g.order());
    EXPECT_EQ(labelled_edges(h), labelled_edges(g));
    EXPECT_EQ(to_edge_list(parse_graph(to_edge_list(h), GraphFormat::edge_list)), to_edge_list(h));
  }
}

TEST(Json, RoundTripAndErrors) {
  Graph g = fig5_2_graph();
  Graph h = parse_graph(to_json(g).dump(), GraphFormat::json);
  EXPECT_EQ(h.labels(), g.labels());
  EXPECT_EQ(h.edges(), g.edges());

  EXPECT_EQ(error_line("{\n\"vertices\": [\"a\",\n}", GraphFormat::json), 3u);
  EXPECT_THROW(parse_graph("[1, 2]", GraphFormat::json), input_error);
  EXPECT_THROW(parse_graph(R"({"edges": [["a"]]})", GraphFormat::json), input_error);
  EXPECT_THROW(parse_graph(R"({"edges": [["a", 3]]})", GraphFormat::json), input_error);
  EXPECT_THROW(parse_graph(R"({"edges": [["a", "b"], ["b", "a"]]})", GraphFormat::json), input_error);
  EXPECT_THROW(parse_graph(R"({"vertices": ["a b"]})", GraphFormat::json), input_error);
}
