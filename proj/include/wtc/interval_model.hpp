#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wtc/graph.hpp"

namespace wtc {

struct Interval {
  std::int64_t left;
  std::int64_t right;

  bool intersects(const Interval& o) const { return left <= o.right && o.left <= right; }
  bool contains(const Interval& o) const { return left <= o.left && o.right <= right; }
};

/// One closed interval per vertex, indexed by vertex id.
struct IntervalModel {
  std::vector<Interval> intervals;
};

/// Why `model` fails to represent g (as a proper model when `proper`), or
/// nullopt when it does.
inline std::optional<std::string> model_defect(const Graph& g, const IntervalModel& model, bool proper) {
  if (model.intervals.size() != g.order()) return "model size differs from vertex count";
  for (Vertex v = 0; v < g.order(); ++v)
    if (model.intervals[v].left > model.intervals[v].right) return "reversed interval for '" + g.label(v) + "'";
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v) {
      const auto &iu = model.intervals[u], &iv = model.intervals[v];
      if (iu.intersects(iv) != g.adjacent(u, v))
        return "intervals of '" + g.label(u) + "' and '" + g.label(v) + "' disagree with adjacency";
      if (proper && (iu.contains(iv) || iv.contains(iu)))
        return "interval of '" + g.label(u) + "' or '" + g.label(v) + "' contains the other";
    }
  return std::nullopt;
}

/// Intersection graph of the model, vertices labelled v1..vn.
inline Graph intersection_graph(const IntervalModel& model) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < model.intervals.size(); ++i) labels.push_back("v" + std::to_string(i + 1));
  std::vector<Edge> edges;
  for (Vertex u = 0; u < model.intervals.size(); ++u)
    for (Vertex v = u + 1; v < model.intervals.size(); ++v)
      if (model.intervals[u].intersects(model.intervals[v])) edges.emplace_back(u, v);
  return Graph(std::move(labels), edges);
}

}  // namespace wtc
