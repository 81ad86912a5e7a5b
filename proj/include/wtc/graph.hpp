#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "wtc/error.hpp"
#include "wtc/vertex_set.hpp"

namespace wtc {

using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph with dense ids 0..n-1 and unique string labels.
class Graph {
public:
  Graph() = default;

  /// Throws input_error on empty/duplicate labels, self-loops, duplicate edges
  /// or endpoints out of range.
  Graph(std::vector<std::string> labels, std::span<const Edge> edges) : labels_(std::move(labels)) {
    const auto n = labels_.size();
    for (Vertex v = 0; v < n; ++v) {
      if (labels_[v].empty()) throw input_error("empty vertex label");
      if (!index_.emplace(labels_[v], v).second) throw input_error("duplicate vertex label '" + labels_[v] + "'");
    }
    adj_.assign(n, VertexSet(n));
    lists_.assign(n, {});
    for (auto [u, v] : edges) {
      if (u >= n || v >= n) throw input_error("edge endpoint out of range");
      if (u == v) throw input_error("self-loop on '" + labels_[u] + "'");
      if (adj_[u].contains(v)) throw input_error("duplicate edge '" + labels_[u] + " " + labels_[v] + "'");
      adj_[u].insert(v);
      adj_[v].insert(u);
      ++edge_count_;
    }
    for (Vertex v = 0; v < n; ++v) lists_[v] = adj_[v].members();
  }
  Graph(std::vector<std::string> labels, std::initializer_list<Edge> edges)
      : Graph(std::move(labels), std::span<const Edge>(edges.begin(), edges.size())) {}

  std::size_t order() const { return labels_.size(); }
  std::size_t size() const { return edge_count_; }

  const std::string& label(Vertex v) const { return labels_.at(v); }
  const std::vector<std::string>& labels() const { return labels_; }

  std::optional<Vertex> find(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  Vertex vertex(std::string_view label) const {
    if (auto v = find(label)) return *v;
    throw input_error("unknown vertex '" + std::string(label) + "'");
  }

  bool adjacent(Vertex u, Vertex v) const { return adj_[u].contains(v); }
  const VertexSet& neighbors(Vertex v) const { return adj_[v]; }
  const std::vector<Vertex>& neighbor_list(Vertex v) const { return lists_[v]; }
  std::size_t degree(Vertex v) const { return lists_[v].size(); }
  VertexSet closed_neighborhood(Vertex v) const {
    VertexSet s = adj_[v];
    s.insert(v);
    return s;
  }

  VertexSet empty_set() const { return VertexSet(order()); }
  VertexSet vertices() const { return VertexSet::full(order()); }

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u)
      for (Vertex v : lists_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  VertexSet set_of(std::span<const std::string> labels) const {
    VertexSet s(order());
    for (const auto& l : labels) s.insert(vertex(l));
    return s;
  }
  VertexSet set_of(std::initializer_list<std::string_view> labels) const {
    VertexSet s(order());
    for (auto l : labels) s.insert(vertex(l));
    return s;
  }
  std::vector<std::string> labels_of(const VertexSet& s) const {
    std::vector<std::string> out;
    for (Vertex v : s) out.push_back(labels_[v]);
    return out;
  }

private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, Vertex> index_;
  std::vector<VertexSet> adj_;
  std::vector<std::vector<Vertex>> lists_;
  std::size_t edge_count_ = 0;
};

/// Incremental construction by label; ids follow first appearance.
class GraphBuilder {
public:
  Vertex add_vertex(const std::string& label) {
    if (label.empty()) throw input_error("empty vertex label");
    auto [it, fresh] = index_.emplace(label, static_cast<Vertex>(labels_.size()));
    if (fresh) labels_.push_back(label);
    return it->second;
  }

  void add_edge(const std::string& a, const std::string& b) {
    if (a == b) throw input_error("self-loop on '" + a + "'");
    Vertex u = add_vertex(a), v = add_vertex(b);
    Edge key = std::minmax(u, v);
    if (!seen_.insert(key).second) throw input_error("duplicate edge '" + a + " " + b + "'");
    edges_.emplace_back(u, v);
  }

  Graph build() const { return Graph(labels_, edges_); }

private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, Vertex> index_;
  std::vector<Edge> edges_;
  std::set<Edge> seen_;
};

/// Subgraph induced by s; ids renumbered in increasing original order, labels kept.
inline Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  std::vector<Vertex> old_to_new(g.order(), 0);
  std::vector<std::string> labels;
  for (Vertex v : s) {
    old_to_new[v] = static_cast<Vertex>(labels.size());
    labels.push_back(g.label(v));
  }
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges())
    if (s.contains(u) && s.contains(v)) edges.emplace_back(old_to_new[u], old_to_new[v]);
  return Graph(std::move(labels), edges);
}

/// Vertices reachable from start inside G[allowed]; start is always included.
inline VertexSet reachable_within(const Graph& g, const VertexSet& allowed, Vertex start) {
  VertexSet seen(g.order());
  seen.insert(start);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next(g.order());
    for (Vertex v : frontier) next |= g.neighbors(v);
    next &= allowed;
    next -= seen;
    seen |= next;
    frontier = std::move(next);
  }
  return seen;
}

/// Components of G[allowed], ordered by minimum vertex id.
inline std::vector<VertexSet> components_within(const Graph& g, const VertexSet& allowed) {
  std::vector<VertexSet> out;
  VertexSet left = allowed;
  while (!left.empty()) {
    VertexSet c = reachable_within(g, allowed, left.first());
    left -= c;
    out.push_back(std::move(c));
  }
  return out;
}

inline std::vector<VertexSet> connected_components(const Graph& g) {
  return components_within(g, g.vertices());
}

inline bool is_connected(const Graph& g) {
  return g.order() == 0 || reachable_within(g, g.vertices(), 0).count() == g.order();
}

inline bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.size() + 1 == g.order() && is_connected(g);
}

inline bool is_clique(const Graph& g, const VertexSet& s) {
  for (Vertex v : s) {
    VertexSet rest = s;
    rest.erase(v);
    if (!rest.is_subset_of(g.neighbors(v))) return false;
  }
  return true;
}

inline bool is_simplicial(const Graph& g, Vertex v) { return is_clique(g, g.neighbors(v)); }

inline VertexSet simplicial_vertices(const Graph& g) {
  VertexSet s(g.order());
  for (Vertex v = 0; v < g.order(); ++v)
    if (is_simplicial(g, v)) s.insert(v);
  return s;
}

/// Classes of N[u] = N[v], ordered by minimum member.
class TwinPartition {
public:
  explicit TwinPartition(const Graph& g) : class_of_(g.order(), 0) {
    std::vector<VertexSet> closed;
    for (Vertex v = 0; v < g.order(); ++v) closed.push_back(g.closed_neighborhood(v));
    std::vector<bool> placed(g.order(), false);
    for (Vertex v = 0; v < g.order(); ++v) {
      if (placed[v]) continue;
      VertexSet cls(g.order());
      for (Vertex u : g.closed_neighborhood(v))
        if (!placed[u] && closed[u] == closed[v]) {
          cls.insert(u);
          placed[u] = true;
          class_of_[u] = classes_.size();
        }
      classes_.push_back(std::move(cls));
    }
  }

  const std::vector<VertexSet>& classes() const { return classes_; }
  /// T(v): v together with its twins.
  const VertexSet& of(Vertex v) const { return classes_[class_of_[v]]; }
  bool twins(Vertex u, Vertex v) const { return class_of_[u] == class_of_[v]; }

private:
  std::vector<VertexSet> classes_;
  std::vector<std::size_t> class_of_;
};

inline TwinPartition twins(const Graph& g) { return TwinPartition(g); }

/// Breadth-first distances from source; unreachable vertices get -1.
inline std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> dist(g.order(), -1);
  std::vector<Vertex> queue{source};
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex v = queue[head];
    for (Vertex w : g.neighbor_list(v))
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
  }
  return dist;
}

/// A shortest path from a to b inside G[allowed] (both ends must be allowed), or empty.
inline std::vector<Vertex> shortest_path_within(const Graph& g, const VertexSet& allowed, Vertex a, Vertex b) {
  std::vector<Vertex> parent(g.order(), static_cast<Vertex>(g.order()));
  std::vector<Vertex> queue{a};
  parent[a] = a;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex v = queue[head];
    if (v == b) break;
    for (Vertex w : g.neighbor_list(v))
      if (allowed.contains(w) && parent[w] == g.order()) {
        parent[w] = v;
        queue.push_back(w);
      }
  }
  if (parent[b] == g.order()) return {};
  std::vector<Vertex> path{b};
  while (path.back() != a) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace wtc
