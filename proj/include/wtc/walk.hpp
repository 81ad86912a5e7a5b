#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wtc/graph.hpp"

namespace wtc {

enum class WalkKind { tolled, weakly_toll };

/// Walk u, w1, ..., wk, v certifying interval membership.
struct WalkWitness {
  std::vector<Vertex> walk;
  WalkKind kind = WalkKind::weakly_toll;

  Vertex source() const { return walk.front(); }
  Vertex target() const { return walk.back(); }
};

/// Reason `walk` is not a walk of the given kind in g, or nullopt when it is.
///
/// Weakly toll: u, v distinct and nonadjacent, k >= 1, consecutive vertices
/// adjacent, u adjacent to an inner vertex only when it equals w1, v adjacent
/// to an inner vertex only when it equals wk. Tolled additionally requires w1
/// and wk to occur exactly once.
inline std::optional<std::string> walk_defect(const Graph& g, const std::vector<Vertex>& walk, WalkKind kind) {
  if (walk.size() < 3) return "walk needs at least one inner vertex";
  for (Vertex x : walk)
    if (x >= g.order()) return "vertex id out of range";
  const Vertex u = walk.front(), v = walk.back();
  if (u == v) return "endpoints coincide";
  if (g.adjacent(u, v)) return "endpoints are adjacent";
  for (std::size_t i = 0; i + 1 < walk.size(); ++i)
    if (!g.adjacent(walk[i], walk[i + 1]))
      return "'" + g.label(walk[i]) + "' and '" + g.label(walk[i + 1]) + "' are not adjacent";

  const std::size_t first = 1, last = walk.size() - 2;
  const Vertex w1 = walk[first], wk = walk[last];
  for (std::size_t i = first; i <= last; ++i) {
    const Vertex w = walk[i];
    if (i != first && g.adjacent(u, w) != (w == w1))
      return "source constraint broken at position " + std::to_string(i) + " ('" + g.label(w) + "')";
    if (i != last && g.adjacent(v, w) != (w == wk))
      return "target constraint broken at position " + std::to_string(i) + " ('" + g.label(w) + "')";
  }
  if (kind == WalkKind::tolled) {
    std::size_t c1 = 0, ck = 0;
    for (std::size_t i = first; i <= last; ++i) {
      c1 += walk[i] == w1;
      ck += walk[i] == wk;
    }
    if (c1 != 1 || ck != 1) return "tolled walk repeats its first or last inner vertex";
  }
  return std::nullopt;
}

inline bool is_valid_walk(const Graph& g, const std::vector<Vertex>& walk, WalkKind kind) {
  return !walk_defect(g, walk, kind);
}

inline bool is_valid_walk(const Graph& g, const WalkWitness& w) { return is_valid_walk(g, w.walk, w.kind); }

/// Walk given by labels; throws input_error on unknown labels.
inline std::vector<Vertex> walk_of(const Graph& g, std::initializer_list<std::string_view> labels) {
  std::vector<Vertex> out;
  for (auto l : labels) out.push_back(g.vertex(l));
  return out;
}

}  // namespace wtc
