#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wtc/error.hpp"
#include "wtc/graph.hpp"
#include "wtc/interval_model.hpp"

namespace wtc {

/// Seeded generator whose output is identical on every platform
/// (std::uniform_int_distribution is implementation-defined, mt19937_64 is not).
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return lo + static_cast<std::int64_t>(engine_());
    const auto limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t x;
    do x = engine_();
    while (x >= limit);
    return lo + static_cast<std::int64_t>(x % span);
  }

  /// True with probability num/den.
  bool chance(std::int64_t num, std::int64_t den) { return uniform(0, den - 1) < num; }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(i) - 1))]);
  }

private:
  std::mt19937_64 engine_;
};

namespace detail {

inline std::vector<std::string> numbered(std::string_view prefix, int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back(std::string(prefix) + std::to_string(i));
  return out;
}

inline Graph from_labelled_edges(std::vector<std::string> vertices,
                                 std::initializer_list<std::pair<std::string_view, std::string_view>> edges) {
  GraphBuilder b;
  for (const auto& v : vertices) b.add_vertex(v);
  for (auto [x, y] : edges) b.add_edge(std::string(x), std::string(y));
  return b.build();
}

}  // namespace detail

inline Graph path_graph(int n) {
  if (n < 1) throw input_error("path needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(detail::numbered("v", n), edges);
}

inline Graph cycle_graph(int n) {
  if (n < 3) throw input_error("cycle needs n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(detail::numbered("v", n), edges);
}

inline Graph complete_graph(int n) {
  if (n < 1) throw input_error("complete needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph(detail::numbered("v", n), edges);
}

/// K_{1,3} on a, b, c, d with centre b.
inline Graph claw_graph() {
  return detail::from_labelled_edges({"a", "b", "c", "d"}, {{"b", "a"}, {"b", "c"}, {"b", "d"}});
}

/// Path v1..v4 plus apex a adjacent to v2 and v3.
inline Graph bull_graph() {
  return detail::from_labelled_edges({"v1", "v2", "v3", "v4", "a"},
                                     {{"v1", "v2"}, {"v2", "v3"}, {"v3", "v4"}, {"v2", "a"}, {"a", "v3"}});
}

/// Path v1..v5 plus a pendant a on v3.
inline Graph star122_graph() {
  return detail::from_labelled_edges({"v1", "v2", "v3", "v4", "v5", "a"},
                                     {{"v1", "v2"}, {"v2", "v3"}, {"v3", "v4"}, {"v4", "v5"}, {"v3", "a"}});
}

/// Gimbel's B_n (n > 5): hub v2 adjacent to v1, a, v3..v_{n-1}; a adjacent to
/// v3; chain v3 - v4 - ... - v_n.
inline Graph bn_graph(int n) {
  if (n <= 5) throw input_error("B_n needs n > 5");
  GraphBuilder b;
  b.add_vertex("a");
  auto v = [](int i) { return "v" + std::to_string(i); };
  for (int i = 1; i <= n; ++i) b.add_vertex(v(i));
  b.add_edge(v(2), v(1));
  b.add_edge(v(2), "a");
  for (int i = 3; i <= n - 1; ++i) b.add_edge(v(2), v(i));
  b.add_edge("a", v(3));
  for (int i = 3; i < n; ++i) b.add_edge(v(i), v(i + 1));
  return b.build();
}

/// Interval graph on s1, 1..5, q1, s2; first of the fig5 pair.
inline Graph fig5_1_graph() {
  return detail::from_labelled_edges({"s1", "1", "2", "3", "4", "5", "q1", "s2"},
                                     {{"s1", "1"},
                                      {"s1", "3"},
                                      {"1", "2"},
                                      {"1", "3"},
                                      {"2", "3"},
                                      {"2", "q1"},
                                      {"q1", "3"},
                                      {"3", "4"},
                                      {"3", "5"},
                                      {"4", "5"},
                                      {"4", "s2"}});
}

/// Interval graph on s1, 1..5, q1, q2, s2; second of the fig5 pair.
inline Graph fig5_2_graph() {
  return detail::from_labelled_edges({"s1", "1", "2", "3", "4", "5", "q1", "q2", "s2"},
                                     {{"s1", "1"},
                                      {"s1", "2"},
                                      {"1", "2"},
                                      {"1", "q1"},
                                      {"q1", "2"},
                                      {"2", "3"},
                                      {"2", "5"},
                                      {"5", "3"},
                                      {"3", "4"},
                                      {"3", "q2"},
                                      {"3", "s2"},
                                      {"4", "q2"},
                                      {"4", "s2"}});
}

/// Centre c with `legs` paths of `length` vertices each (p<i>_<j>, j = 1 next to c).
inline Graph spider_graph(int legs, int length) {
  if (legs < 1 || length < 1) throw input_error("spider needs legs >= 1 and length >= 1");
  GraphBuilder b;
  b.add_vertex("c");
  for (int i = 1; i <= legs; ++i) {
    std::string prev = "c";
    for (int j = 1; j <= length; ++j) {
      std::string cur = "p" + std::to_string(i) + "_" + std::to_string(j);
      b.add_edge(prev, cur);
      prev = cur;
    }
  }
  return b.build();
}

struct IntervalGraph {
  Graph graph;
  IntervalModel model;
};

/// n random intervals with distinct integer endpoints in [0, 4n], and their
/// intersection graph. With `proper`, all intervals share one odd length and
/// start on even points, so no interval contains another.
inline IntervalGraph random_interval_graph(int n, bool proper, std::uint64_t seed) {
  if (n < 1) throw input_error("random interval graph needs n >= 1");
  Rng rng(seed);
  IntervalModel model;
  const std::int64_t hi = 4 * static_cast<std::int64_t>(n);
  if (proper) {
    const std::int64_t length = 2 * rng.uniform(0, n) + 1;  // odd, at most 2n + 1
    std::vector<std::int64_t> starts;
    for (std::int64_t s = 0; s + length <= hi; s += 2) starts.push_back(s);
    rng.shuffle(starts);
    starts.resize(static_cast<std::size_t>(n));
    for (auto s : starts) model.intervals.push_back({s, s + length});
  } else {
    std::vector<std::int64_t> points;
    for (std::int64_t p = 0; p <= hi; ++p) points.push_back(p);
    rng.shuffle(points);
    for (int i = 0; i < n; ++i) {
      auto [l, r] = std::minmax(points[2 * i], points[2 * i + 1]);
      model.intervals.push_back({l, r});
    }
  }
  return {intersection_graph(model), std::move(model)};
}

/// Connected variant: redraws with derived seeds until the graph is connected.
inline IntervalGraph random_connected_interval_graph(int n, bool proper, std::uint64_t seed) {
  for (std::uint64_t attempt = 0; attempt < 100000; ++attempt) {
    auto ig = random_interval_graph(n, proper, seed * 0x9E3779B97F4A7C15ull + attempt);
    if (is_connected(ig.graph)) return ig;
  }
  throw resource_error("no connected interval graph drawn");
}

/// Tree on v1..vn encoded by a Pruefer sequence of length n - 2.
inline Graph tree_from_pruefer(int n, std::span<const Vertex> code) {
  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (Vertex c : code) ++degree[c];
  std::set<Vertex> leaves;
  for (int v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.insert(static_cast<Vertex>(v));
  std::vector<Edge> edges;
  for (Vertex c : code) {
    Vertex leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.emplace_back(leaf, c);
    if (--degree[c] == 1) leaves.insert(c);
  }
  if (n >= 2) edges.emplace_back(*leaves.begin(), *std::next(leaves.begin()));
  return Graph(detail::numbered("v", n), edges);
}

/// Uniform labelled tree on n vertices (Pruefer decoding), labels v1..vn.
inline Graph random_tree(int n, std::uint64_t seed) {
  if (n < 1) throw input_error("tree needs n >= 1");
  Rng rng(seed);
  std::vector<Vertex> code;
  for (int i = 0; i + 2 < n; ++i) code.push_back(static_cast<Vertex>(rng.uniform(0, n - 1)));
  return tree_from_pruefer(n, code);
}

/// Random spanning tree plus each remaining pair with probability
/// density_percent / 100; always connected.
inline Graph random_connected_graph(int n, int density_percent, std::uint64_t seed) {
  Graph tree = random_tree(n, seed);
  Rng rng(seed ^ 0x5DEECE66Dull);
  std::vector<Edge> edges = tree.edges();
  for (Vertex u = 0; u < static_cast<Vertex>(n); ++u)
    for (Vertex v = u + 1; v < static_cast<Vertex>(n); ++v)
      if (!tree.adjacent(u, v) && rng.chance(density_percent, 100)) edges.emplace_back(u, v);
  return Graph(detail::numbered("v", n), edges);
}

inline const std::vector<std::string>& named_generators() {
  static const std::vector<std::string> names{
      "path",  "cycle",  "complete", "claw",        "bull",        "star122",         "bn",
      "fig5_1", "fig5_2", "spider",  "random-tree", "random-graph", "random-interval", "random-proper-interval"};
  return names;
}

/// Generator lookup by name; see named_generators() for the accepted names.
/// The random generators draw from `seed`.
inline Graph generate_named(std::string_view name, std::span<const int> params, std::uint64_t seed = 1) {
  auto want = [&](std::size_t count) {
    if (params.size() != count)
      throw input_error("generator '" + std::string(name) + "' takes " + std::to_string(count) + " parameter(s)");
  };
  if (name == "path") return want(1), path_graph(params[0]);
  if (name == "cycle") return want(1), cycle_graph(params[0]);
  if (name == "complete") return want(1), complete_graph(params[0]);
  if (name == "claw") return want(0), claw_graph();
  if (name == "bull") return want(0), bull_graph();
  if (name == "star122") return want(0), star122_graph();
  if (name == "bn") return want(1), bn_graph(params[0]);
  if (name == "fig5_1") return want(0), fig5_1_graph();
  if (name == "fig5_2") return want(0), fig5_2_graph();
  if (name == "spider") return want(2), spider_graph(params[0], params[1]);
  if (name == "random-tree") return want(1), random_tree(params[0], seed);
  if (name == "random-graph") return want(2), random_connected_graph(params[0], params[1], seed);
  if (name == "random-interval") return want(1), random_connected_interval_graph(params[0], false, seed).graph;
  if (name == "random-proper-interval") return want(1), random_connected_interval_graph(params[0], true, seed).graph;
  throw input_error("unknown generator '" + std::string(name) + "'");
}

/// Graph on v1..vn whose edge set is selected by bits of mask over the pairs
/// (0,1), (0,2), ..., (n-2,n-1).
inline Graph graph_from_edge_mask(int n, std::uint64_t mask) {
  std::vector<Edge> edges;
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bit)
      if ((mask >> bit) & 1u) edges.emplace_back(u, v);
  return Graph(detail::numbered("v", n), edges);
}

/// Calls f on every labelled graph on n vertices (n <= 11), optionally only
/// the connected ones.
inline void for_each_labelled_graph(int n, bool connected_only, const std::function<void(const Graph&)>& f) {
  if (n < 1 || n > 11) throw input_error("labelled graph enumeration supports 1 <= n <= 11");
  const int pairs = n * (n - 1) / 2;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    Graph g = graph_from_edge_mask(n, mask);
    if (!connected_only || is_connected(g)) f(g);
  }
}

/// Calls f on every labelled tree on n vertices (n^(n-2) of them).
inline void for_each_labelled_tree(int n, const std::function<void(const Graph&)>& f) {
  if (n < 1) throw input_error("tree enumeration needs n >= 1");
  if (n <= 2) {
    f(path_graph(n));
    return;
  }
  std::vector<Vertex> code(static_cast<std::size_t>(n - 2), 0);
  while (true) {
    f(tree_from_pruefer(n, code));
    std::size_t i = 0;
    while (i < code.size() && ++code[i] == static_cast<Vertex>(n)) code[i++] = 0;
    if (i == code.size()) break;
  }
}

namespace detail {

inline std::string rooted_code(const Graph& g, Vertex v, Vertex parent) {
  std::vector<std::string> children;
  for (Vertex w : g.neighbor_list(v))
    if (w != parent) children.push_back(rooted_code(g, w, v));
  std::sort(children.begin(), children.end());
  std::string out = "(";
  for (const auto& c : children) out += c;
  return out + ")";
}

}  // namespace detail

/// Isomorphism-invariant string for a tree (AHU encoding rooted at the centre).
inline std::string tree_canonical_code(const Graph& tree) {
  const auto n = tree.order();
  if (n == 0) return "";
  std::vector<std::size_t> degree(n);
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v)
    if ((degree[v] = tree.degree(v)) <= 1) layer.push_back(v);
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<Vertex> next;
    for (Vertex v : layer)
      for (Vertex w : tree.neighbor_list(v))
        if (--degree[w] == 1) next.push_back(w);
    layer = std::move(next);
  }
  std::string best;
  for (Vertex c : layer) {
    auto code = detail::rooted_code(tree, c, static_cast<Vertex>(n));
    if (best.empty() || code < best) best = code;
  }
  return best;
}

/// One representative per isomorphism class of trees on n vertices.
inline std::vector<Graph> unlabelled_trees(int n) {
  std::map<std::string, Graph> reps;
  for_each_labelled_tree(n, [&](const Graph& t) { reps.try_emplace(tree_canonical_code(t), t); });
  std::vector<Graph> out;
  for (auto& [code, t] : reps) out.push_back(std::move(t));
  return out;
}

}  // namespace wtc
