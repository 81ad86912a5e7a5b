#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "wtc/error.hpp"
#include "wtc/graph.hpp"
#include "wtc/walk.hpp"

namespace wtc {

enum class ConvexityKind { geodesic, monophonic, toll, weakly_toll };

inline constexpr ConvexityKind all_kinds[] = {ConvexityKind::geodesic, ConvexityKind::monophonic, ConvexityKind::toll,
                                              ConvexityKind::weakly_toll};

inline std::string_view to_string(ConvexityKind k) {
  switch (k) {
    case ConvexityKind::geodesic: return "geodesic";
    case ConvexityKind::monophonic: return "monophonic";
    case ConvexityKind::toll: return "toll";
    case ConvexityKind::weakly_toll: return "weakly-toll";
  }
  return "?";
}

inline ConvexityKind parse_kind(std::string_view s) {
  for (auto k : all_kinds)
    if (s == to_string(k)) return k;
  if (s == "weakly_toll") return ConvexityKind::weakly_toll;
  throw input_error("unknown convexity kind '" + std::string(s) + "'");
}

/// Pairwise interval. Equal endpoints give {u}, adjacent endpoints {u, v}.
/// `separated` is set when u and v lie in different components, in which case
/// the interval is {u, v}.
struct PairInterval {
  VertexSet members;
  bool separated = false;
};

namespace detail {

inline void check_vertex(const Graph& g, Vertex v) {
  if (v >= g.order()) throw input_error("vertex id " + std::to_string(v) + " out of range");
}

/// Components of G - N[u] - N[v] and, for each neighbour of u or v, the
/// components it touches. Every walk between nonadjacent u and v enters
/// through a gate w1 in N(u) and leaves through a gate wk in N(v), and its
/// other inner vertices avoid N(u) and N(v) except for repeats of the gates.
struct GateDecomposition {
  VertexSet base;
  std::vector<VertexSet> components;
  std::vector<VertexSet> touches;  // per vertex, a set over component indices
  VertexSet common;                // N(u) & N(v)
  VertexSet only_u;                // N(u) - N(v)
  VertexSet only_v;                // N(v) - N(u)

  GateDecomposition(const Graph& g, Vertex u, Vertex v) {
    base = (g.closed_neighborhood(u) | g.closed_neighborhood(v)).complement();
    components = components_within(g, base);
    const VertexSet& nu = g.neighbors(u);
    const VertexSet& nv = g.neighbors(v);
    common = nu & nv;
    only_u = nu - nv;
    only_v = nv - nu;
    touches.assign(g.order(), VertexSet(components.size()));
    for (Vertex w : nu | nv)
      for (Vertex c = 0; c < components.size(); ++c)
        if (g.neighbors(w).intersects(components[c])) touches[w].insert(c);
  }

  VertexSet union_of(const VertexSet& component_ids, std::size_t n) const {
    VertexSet out(n);
    for (Vertex c : component_ids) out |= components[c];
    return out;
  }

  /// (w1, wk) with distinct gates are joined inside G[A + w1 + wk].
  bool linked(const Graph& g, Vertex w1, Vertex wk) const {
    return g.adjacent(w1, wk) || touches[w1].intersects(touches[wk]);
  }
};

}  // namespace detail

/// Vertices on some weakly toll walk between u and v.
inline PairInterval weakly_toll_interval_detail(const Graph& g, Vertex u, Vertex v) {
  detail::check_vertex(g, u);
  detail::check_vertex(g, v);
  const auto n = g.order();
  VertexSet out(n);
  out.insert(u);
  out.insert(v);
  if (u == v || g.adjacent(u, v)) return {out, false};

  detail::GateDecomposition gd(g, u, v);
  bool any = false;
  for (Vertex w : gd.common) {
    out.insert(w);
    out |= gd.union_of(gd.touches[w], n);
    any = true;
  }
  for (Vertex w1 : gd.only_u)
    for (Vertex wk : gd.only_v)
      if (gd.linked(g, w1, wk)) {
        out.insert(w1);
        out.insert(wk);
        out |= gd.union_of(gd.touches[w1] | gd.touches[wk], n);
        any = true;
      }
  return {out, !any};
}

/// Vertices on some tolled walk between u and v.
inline PairInterval toll_interval_detail(const Graph& g, Vertex u, Vertex v) {
  detail::check_vertex(g, u);
  detail::check_vertex(g, v);
  const auto n = g.order();
  VertexSet out(n);
  out.insert(u);
  out.insert(v);
  if (u == v || g.adjacent(u, v)) return {out, false};

  detail::GateDecomposition gd(g, u, v);
  bool any = !gd.common.empty();
  out |= gd.common;
  for (Vertex w1 : gd.only_u)
    for (Vertex wk : gd.only_v)
      if (gd.linked(g, w1, wk)) {
        out.insert(w1);
        out.insert(wk);
        out |= gd.union_of(gd.touches[w1] & gd.touches[wk], n);
        any = true;
      }
  return {out, !any};
}

/// {x : d(u, x) + d(x, v) = d(u, v)}.
inline PairInterval geodesic_interval_detail(const Graph& g, Vertex u, Vertex v) {
  detail::check_vertex(g, u);
  detail::check_vertex(g, v);
  VertexSet out(g.order());
  out.insert(u);
  out.insert(v);
  if (u == v) return {out, false};
  auto du = bfs_distances(g, u);
  if (du[v] < 0) return {out, true};
  auto dv = bfs_distances(g, v);
  for (Vertex x = 0; x < g.order(); ++x)
    if (du[x] >= 0 && dv[x] >= 0 && du[x] + dv[x] == du[v]) out.insert(x);
  return {out, false};
}

namespace detail {

// Extends the induced path ending in `last`; `blocked` holds the closed
// neighbourhoods of every path vertex before `last`.
inline void extend_induced_paths(const Graph& g, Vertex target, std::vector<Vertex>& path, const VertexSet& blocked,
                                 VertexSet& found) {
  const Vertex last = path.back();
  VertexSet next_blocked = blocked | g.closed_neighborhood(last);
  for (Vertex y : g.neighbors(last) - blocked) {
    if (y == target) {
      for (Vertex p : path) found.insert(p);
      continue;
    }
    if (g.adjacent(y, target)) {
      // y must be the penultimate vertex.
      if (!next_blocked.contains(target)) {
        for (Vertex p : path) found.insert(p);
        found.insert(y);
      }
      continue;
    }
    if (next_blocked.contains(target)) continue;
    VertexSet room = next_blocked.complement();
    room.insert(y);
    if (!reachable_within(g, room, y).contains(target)) continue;
    path.push_back(y);
    extend_induced_paths(g, target, path, next_blocked, found);
    path.pop_back();
  }
}

}  // namespace detail

/// Vertices on some induced path between u and v, by exhaustive backtracking.
/// Exponential in the worst case; meant for small graphs.
inline PairInterval monophonic_interval_detail(const Graph& g, Vertex u, Vertex v) {
  detail::check_vertex(g, u);
  detail::check_vertex(g, v);
  VertexSet out(g.order());
  out.insert(u);
  out.insert(v);
  if (u == v || g.adjacent(u, v)) return {out, false};
  if (!reachable_within(g, g.vertices(), u).contains(v)) return {out, true};
  std::vector<Vertex> path{u};
  detail::extend_induced_paths(g, v, path, g.empty_set(), out);
  return {out, false};
}

inline PairInterval interval_detail(const Graph& g, Vertex u, Vertex v, ConvexityKind kind) {
  switch (kind) {
    case ConvexityKind::geodesic: return geodesic_interval_detail(g, u, v);
    case ConvexityKind::monophonic: return monophonic_interval_detail(g, u, v);
    case ConvexityKind::toll: return toll_interval_detail(g, u, v);
    case ConvexityKind::weakly_toll: return weakly_toll_interval_detail(g, u, v);
  }
  throw contract_error("bad convexity kind");
}

inline VertexSet weakly_toll_interval(const Graph& g, Vertex u, Vertex v) {
  return weakly_toll_interval_detail(g, u, v).members;
}
inline VertexSet toll_interval(const Graph& g, Vertex u, Vertex v) { return toll_interval_detail(g, u, v).members; }
inline VertexSet geodesic_interval(const Graph& g, Vertex u, Vertex v) {
  return geodesic_interval_detail(g, u, v).members;
}
inline VertexSet monophonic_interval(const Graph& g, Vertex u, Vertex v) {
  return monophonic_interval_detail(g, u, v).members;
}
inline VertexSet interval(const Graph& g, Vertex u, Vertex v, ConvexityKind kind) {
  return interval_detail(g, u, v, kind).members;
}

/// Lazily cached pairwise intervals of one graph under one convexity.
/// Not safe to share between threads; build one per thread.
class IntervalTable {
public:
  IntervalTable(const Graph& g, ConvexityKind kind) : g_(&g), kind_(kind) {
    if (g.order() <= kDenseLimit) dense_.resize(g.order() * g.order());
  }

  const Graph& graph() const { return *g_; }
  ConvexityKind kind() const { return kind_; }

  const VertexSet& operator()(Vertex u, Vertex v) const {
    if (u > v) std::swap(u, v);
    const auto key = static_cast<std::uint64_t>(u) * g_->order() + v;
    if (!dense_.empty()) {
      auto& slot = dense_[key];
      if (!slot) slot = interval(*g_, u, v, kind_);
      return *slot;
    }
    auto it = sparse_.find(key);
    if (it == sparse_.end()) it = sparse_.emplace(key, interval(*g_, u, v, kind_)).first;
    return it->second;
  }

  /// Union of the pairwise intervals over all pairs (and singletons) of s.
  VertexSet of_set(const VertexSet& s) const {
    VertexSet out = s;
    for (Vertex u : s)
      for (Vertex v = s.next(u + 1); v < g_->order(); v = s.next(v + 1))
        if (!g_->adjacent(u, v)) out |= (*this)(u, v);
    return out;
  }

private:
  static constexpr std::size_t kDenseLimit = 256;
  const Graph* g_;
  ConvexityKind kind_;
  mutable std::vector<std::optional<VertexSet>> dense_;
  mutable std::unordered_map<std::uint64_t, VertexSet> sparse_;
};

inline VertexSet interval_of_set(const Graph& g, const VertexSet& s, ConvexityKind kind) {
  return IntervalTable(g, kind).of_set(s);
}

/// Hull with the iteration levels S = I^0(S), I^1(S), ... up to the fixpoint;
/// the fixpoint appears once, as the last level.
struct HullTrace {
  VertexSet hull;
  std::vector<VertexSet> levels;
};

inline HullTrace hull(const IntervalTable& table, const VertexSet& s) {
  HullTrace t{s, {s}};
  while (true) {
    VertexSet next = table.of_set(t.hull);
    if (next == t.hull) return t;
    t.hull = next;
    t.levels.push_back(std::move(next));
  }
}

inline HullTrace hull(const Graph& g, const VertexSet& s, ConvexityKind kind) {
  return hull(IntervalTable(g, kind), s);
}

struct ConvexityViolation {
  Vertex u, v, escaping;
};

struct ConvexityCheck {
  bool convex = true;
  std::optional<ConvexityViolation> violation;
  explicit operator bool() const { return convex; }
};

/// Convex iff every pairwise interval of s stays in s; otherwise reports the
/// first pair (u < v) and its smallest escaping vertex.
inline ConvexityCheck is_convex(const IntervalTable& table, const VertexSet& s) {
  const Graph& g = table.graph();
  for (Vertex u : s)
    for (Vertex v = s.next(u + 1); v < g.order(); v = s.next(v + 1)) {
      if (g.adjacent(u, v)) continue;
      VertexSet escape = table(u, v) - s;
      if (!escape.empty()) return {false, ConvexityViolation{u, v, escape.first()}};
    }
  return {};
}

inline ConvexityCheck is_convex(const Graph& g, const VertexSet& s, ConvexityKind kind) {
  return is_convex(IntervalTable(g, kind), s);
}

/// x in c is extreme when c - x is still convex. c must be convex.
inline VertexSet extreme_vertices(const IntervalTable& table, const VertexSet& c) {
  if (!is_convex(table, c)) throw contract_error("extreme_vertices needs a convex set");
  const Graph& g = table.graph();
  VertexSet inner(g.order());
  for (Vertex u : c)
    for (Vertex v = c.next(u + 1); v < g.order(); v = c.next(v + 1))
      if (!g.adjacent(u, v)) {
        VertexSet strict = table(u, v);
        strict.erase(u);
        strict.erase(v);
        inner |= strict;
      }
  return c - inner;
}

inline VertexSet extreme_vertices(const Graph& g, const VertexSet& c, ConvexityKind kind) {
  return extreme_vertices(IntervalTable(g, kind), c);
}

namespace detail {

inline std::vector<Vertex> join_paths(std::vector<Vertex> a, const std::vector<Vertex>& b) {
  // a ends where b starts
  a.insert(a.end(), b.begin() + 1, b.end());
  return a;
}

}  // namespace detail

/// A walk of `kind` between nonadjacent u and v passing through x, or nullopt
/// when x is not in the corresponding interval. Equal or adjacent endpoints
/// have no walks at all, so the result is nullopt for them too.
inline std::optional<WalkWitness> witness_walk(const Graph& g, Vertex u, Vertex v, Vertex x, WalkKind kind) {
  detail::check_vertex(g, u);
  detail::check_vertex(g, v);
  detail::check_vertex(g, x);
  if (u == v || g.adjacent(u, v)) return std::nullopt;
  detail::GateDecomposition gd(g, u, v);
  const auto n = g.order();

  auto finish = [&](std::vector<Vertex> inner) -> std::optional<WalkWitness> {
    inner.insert(inner.begin(), u);
    inner.push_back(v);
    WalkWitness w{std::move(inner), kind};
    if (auto defect = walk_defect(g, w.walk, kind)) throw contract_error("internal: reconstructed walk invalid: " + *defect);
    return w;
  };
  const bool endpoint = x == u || x == v;

  if (kind == WalkKind::weakly_toll) {
    for (Vertex w : gd.common) {
      VertexSet allowed = gd.base;
      allowed.insert(w);
      VertexSet reach = reachable_within(g, allowed, w);
      if (!endpoint && !reach.contains(x)) continue;
      if (endpoint || x == w) return finish({w});
      auto there = shortest_path_within(g, allowed, w, x);
      std::vector<Vertex> back(there.rbegin(), there.rend());
      return finish(detail::join_paths(there, back));
    }
    for (Vertex w1 : gd.only_u)
      for (Vertex wk : gd.only_v) {
        if (!gd.linked(g, w1, wk)) continue;
        VertexSet allowed = gd.base;
        allowed.insert(w1);
        allowed.insert(wk);
        VertexSet reach = reachable_within(g, allowed, w1);
        if (!endpoint && !reach.contains(x)) continue;
        Vertex via = endpoint ? w1 : x;
        return finish(detail::join_paths(shortest_path_within(g, allowed, w1, via),
                                         shortest_path_within(g, allowed, via, wk)));
      }
    return std::nullopt;
  }

  for (Vertex w : gd.common)
    if (endpoint || x == w) return finish({w});
  for (Vertex w1 : gd.only_u)
    for (Vertex wk : gd.only_v) {
      if (!gd.linked(g, w1, wk)) continue;
      VertexSet shared = gd.union_of(gd.touches[w1] & gd.touches[wk], n);
      if (!endpoint && x != w1 && x != wk && !shared.contains(x)) continue;
      if (g.adjacent(w1, wk) && (endpoint || x == w1 || x == wk)) return finish({w1, wk});
      // Route through one component touching both gates.
      Vertex via = x;
      if (endpoint || x == w1 || x == wk) via = shared.first();
      const auto comp = std::find_if(gd.components.begin(), gd.components.end(),
                                     [&](const VertexSet& c) { return c.contains(via); });
      VertexSet left = *comp, right = *comp;
      left.insert(w1);
      right.insert(wk);
      return finish(detail::join_paths(shortest_path_within(g, left, w1, via), shortest_path_within(g, right, via, wk)));
    }
  return std::nullopt;
}

/// All convex sets of g, ordered by size then lexicographically.
inline std::vector<VertexSet> enumerate_convex_sets(const IntervalTable& table, std::size_t max_n = 12) {
  const Graph& g = table.graph();
  const auto n = g.order();
  if (n > max_n || n > 30)
    throw resource_error("convex-set enumeration limited to " + std::to_string(std::min<std::size_t>(max_n, 30)) +
                         " vertices");
  // Pairwise intervals as masks.
  std::vector<std::uint64_t> pair_mask(n * n, 0);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) pair_mask[u * n + v] = table(u, v).low_word();
  std::vector<VertexSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool convex = true;
    for (Vertex u = 0; u < n && convex; ++u) {
      if (!((mask >> u) & 1u)) continue;
      for (Vertex v = u + 1; v < n; ++v)
        if (((mask >> v) & 1u) && (pair_mask[u * n + v] & ~mask)) {
          convex = false;
          break;
        }
    }
    if (convex) out.push_back(from_mask(n, mask));
  }
  std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) { return size_lex_less(a, b); });
  return out;
}

inline std::vector<VertexSet> enumerate_convex_sets(const Graph& g, ConvexityKind kind, std::size_t max_n = 12) {
  return enumerate_convex_sets(IntervalTable(g, kind), max_n);
}

struct GeometryVerdict {
  bool convex_geometry = true;
  std::optional<VertexSet> counterexample;  // smallest convex set that is not the hull of its extremes
};

/// Minkowski-Krein-Milman check over every convex set.
inline GeometryVerdict is_convex_geometry_bruteforce(const Graph& g, ConvexityKind kind, std::size_t max_n = 12) {
  IntervalTable table(g, kind);
  for (const auto& c : enumerate_convex_sets(table, max_n)) {
    if (hull(table, extreme_vertices(table, c)).hull != c) return {false, c};
  }
  return {};
}

}  // namespace wtc
