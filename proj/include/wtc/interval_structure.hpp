#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "wtc/error.hpp"
#include "wtc/graph.hpp"
#include "wtc/interval_model.hpp"

namespace wtc {

struct ChordlessCycle {
  std::vector<Vertex> cycle;
};

/// paths[i] joins the two members other than vertices[i] and avoids N[vertices[i]].
struct AsteroidalTriple {
  std::array<Vertex, 3> vertices;
  std::array<std::vector<Vertex>, 3> paths;
};

struct Claw {
  Vertex center;
  std::array<Vertex, 3> leaves;
};

/// Maximal cliques Q_1..Q_k in which every vertex occupies a consecutive run.
struct CliquePath {
  std::vector<VertexSet> cliques;

  CliquePath reversed() const { return {{cliques.rbegin(), cliques.rend()}}; }
};

// ---------------------------------------------------------------- witnesses

inline std::optional<std::string> cycle_defect(const Graph& g, const ChordlessCycle& c) {
  const auto& cy = c.cycle;
  if (cy.size() < 4) return "cycle shorter than four";
  VertexSet seen(g.order());
  for (Vertex v : cy) {
    if (v >= g.order()) return "vertex out of range";
    if (seen.contains(v)) return "cycle repeats a vertex";
    seen.insert(v);
  }
  for (std::size_t i = 0; i < cy.size(); ++i)
    for (std::size_t j = i + 1; j < cy.size(); ++j) {
      bool consecutive = j == i + 1 || (i == 0 && j == cy.size() - 1);
      if (g.adjacent(cy[i], cy[j]) != consecutive) return consecutive ? "missing cycle edge" : "cycle has a chord";
    }
  return std::nullopt;
}

inline std::optional<std::string> triple_defect(const Graph& g, const AsteroidalTriple& t) {
  for (int i = 0; i < 3; ++i) {
    const Vertex avoid = t.vertices[i];
    const Vertex a = t.vertices[(i + 1) % 3], b = t.vertices[(i + 2) % 3];
    const auto& p = t.paths[i];
    if (p.empty()) return "missing path";
    if (!((p.front() == a && p.back() == b) || (p.front() == b && p.back() == a))) return "path has wrong ends";
    const VertexSet blocked = g.closed_neighborhood(avoid);
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (blocked.contains(p[k])) return "path meets the closed neighbourhood of the third vertex";
      if (k + 1 < p.size() && !g.adjacent(p[k], p[k + 1])) return "path uses a non-edge";
    }
  }
  return std::nullopt;
}

inline std::optional<std::string> claw_defect(const Graph& g, const Claw& c) {
  for (Vertex l : c.leaves)
    if (!g.adjacent(c.center, l)) return "leaf not adjacent to centre";
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (c.leaves[i] == c.leaves[j] || g.adjacent(c.leaves[i], c.leaves[j])) return "leaves not independent";
  return std::nullopt;
}

inline std::optional<std::string> elimination_order_defect(const Graph& g, const std::vector<Vertex>& order) {
  if (order.size() != g.order()) return "order is not a permutation";
  VertexSet later = g.vertices();
  for (Vertex v : order) {
    if (!later.contains(v)) return "order is not a permutation";
    later.erase(v);
    if (!is_clique(g, g.neighbors(v) & later)) return "'" + g.label(v) + "' is not simplicial when eliminated";
  }
  return std::nullopt;
}

// ------------------------------------------------------------ chordality

/// Some induced cycle of length >= 4, or nullopt for chordal graphs.
///
/// For a chordless cycle through x with cycle neighbours a, b the rest of the
/// cycle avoids N[x] - {a, b}; conversely a shortest a-b path there closes a
/// chordless cycle with x. Trying every (x, a, b) is therefore exhaustive.
inline std::optional<ChordlessCycle> find_chordless_cycle(const Graph& g) {
  for (Vertex x = 0; x < g.order(); ++x) {
    const auto& nb = g.neighbor_list(x);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        const Vertex a = nb[i], b = nb[j];
        if (g.adjacent(a, b)) continue;
        VertexSet room = g.closed_neighborhood(x).complement();
        room.insert(a);
        room.insert(b);
        auto path = shortest_path_within(g, room, a, b);
        if (path.empty()) continue;
        path.push_back(x);
        return ChordlessCycle{std::move(path)};
      }
  }
  return std::nullopt;
}

struct EliminationResult {
  std::vector<Vertex> order;            // perfect elimination order when chordal
  std::optional<ChordlessCycle> cycle;  // witness otherwise

  bool chordal() const { return !cycle; }
};

/// Repeatedly removes the smallest simplicial vertex of what remains.
inline EliminationResult perfect_elimination_order(const Graph& g) {
  EliminationResult r;
  VertexSet left = g.vertices();
  while (!left.empty()) {
    bool found = false;
    for (Vertex v : left)
      if (is_clique(g, g.neighbors(v) & left)) {
        r.order.push_back(v);
        left.erase(v);
        found = true;
        break;
      }
    if (!found) {
      r.order.clear();
      r.cycle = find_chordless_cycle(induced_subgraph(g, left));
      // map back to g's ids
      auto ids = left.members();
      for (auto& v : r.cycle->cycle) v = ids[v];
      return r;
    }
  }
  return r;
}

inline bool is_chordal(const Graph& g) { return perfect_elimination_order(g).chordal(); }

/// Maximal cliques of a chordal graph, harvested along a perfect elimination
/// order and sorted lexicographically by member list.
inline std::vector<VertexSet> maximal_cliques_chordal(const Graph& g) {
  auto peo = perfect_elimination_order(g);
  if (!peo.chordal()) {
    std::string cyc;
    for (Vertex v : peo.cycle->cycle) cyc += (cyc.empty() ? "" : " ") + g.label(v);
    throw contract_error("graph is not chordal (chordless cycle: " + cyc + ")");
  }
  std::vector<VertexSet> candidates;
  VertexSet later = g.vertices();
  for (Vertex v : peo.order) {
    VertexSet c = g.neighbors(v) & later;
    c.insert(v);
    later.erase(v);
    candidates.push_back(std::move(c));
  }
  std::vector<VertexSet> out;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < candidates.size() && maximal; ++j)
      if (i != j && candidates[i].is_subset_of(candidates[j]) && (candidates[i] != candidates[j] || j < i))
        maximal = false;
    if (maximal) out.push_back(candidates[i]);
  }
  std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) {
    auto ma = a.members(), mb = b.members();
    return ma < mb;
  });
  return out;
}

// ------------------------------------------------ asteroidal triples, claws

inline std::optional<AsteroidalTriple> find_asteroidal_triple(const Graph& g) {
  const auto n = g.order();
  // avoid[z] = V - N[z]; joined(x, y, z): x and y connected in G - N[z].
  std::vector<VertexSet> room;
  for (Vertex z = 0; z < n; ++z) room.push_back(g.closed_neighborhood(z).complement());
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = x + 1; y < n; ++y) {
      if (g.adjacent(x, y)) continue;
      for (Vertex z = y + 1; z < n; ++z) {
        if (g.adjacent(x, z) || g.adjacent(y, z)) continue;
        auto p_yz = shortest_path_within(g, room[x], y, z);
        if (p_yz.empty()) continue;
        auto p_xz = shortest_path_within(g, room[y], x, z);
        if (p_xz.empty()) continue;
        auto p_xy = shortest_path_within(g, room[z], x, y);
        if (p_xy.empty()) continue;
        return AsteroidalTriple{{x, y, z}, {std::move(p_yz), std::move(p_xz), std::move(p_xy)}};
      }
    }
  return std::nullopt;
}

inline std::optional<Claw> find_claw(const Graph& g) {
  for (Vertex c = 0; c < g.order(); ++c) {
    const auto& nb = g.neighbor_list(c);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (g.adjacent(nb[i], nb[j])) continue;
        for (std::size_t k = j + 1; k < nb.size(); ++k)
          if (!g.adjacent(nb[i], nb[k]) && !g.adjacent(nb[j], nb[k])) return Claw{c, {nb[i], nb[j], nb[k]}};
      }
  }
  return std::nullopt;
}

// ------------------------------------------------------------ clique paths

inline std::optional<std::string> clique_path_defect(const Graph& g, const CliquePath& p) {
  const auto k = p.cliques.size();
  VertexSet covered(g.order());
  for (std::size_t i = 0; i < k; ++i) {
    const auto& q = p.cliques[i];
    if (q.universe() != g.order()) return "clique over the wrong vertex universe";
    if (q.empty() || !is_clique(g, q)) return "entry " + std::to_string(i) + " is not a clique";
    // maximal: no outside vertex adjacent to all of q
    for (Vertex x = 0; x < g.order(); ++x)
      if (!q.contains(x) && q.is_subset_of(g.neighbors(x))) return "entry " + std::to_string(i) + " is not maximal";
    for (std::size_t j = 0; j < i; ++j)
      if (p.cliques[j] == q) return "clique listed twice";
    covered |= q;
  }
  if (covered != g.vertices()) return "cliques do not cover every vertex";
  for (Vertex v = 0; v < g.order(); ++v) {
    int state = 0;  // 0 before, 1 inside, 2 after
    for (const auto& q : p.cliques) {
      bool in = q.contains(v);
      if (state == 0 && in) state = 1;
      else if (state == 1 && !in) state = 2;
      else if (state == 2 && in) return "cliques of '" + g.label(v) + "' are not consecutive";
    }
  }
  // every edge lies in a clique
  for (auto [u, v] : g.edges()) {
    bool found = false;
    for (const auto& q : p.cliques) found = found || (q.contains(u) && q.contains(v));
    if (!found) return "edge not covered by any clique";
  }
  return std::nullopt;
}

struct CliquePathPins {
  std::optional<VertexSet> first;
  std::optional<VertexSet> last;
};

namespace detail {

struct StateHash {
  std::size_t operator()(const std::pair<VertexSet, Vertex>& s) const { return s.first.hash() * 31 + s.second; }
};

class CliquePathSearch {
public:
  CliquePathSearch(const Graph& g, std::vector<VertexSet> cliques) : g_(g), cliques_(std::move(cliques)) {
    total_.assign(g.order(), 0);
    for (const auto& q : cliques_)
      for (Vertex v : q) ++total_[v];
  }

  std::optional<CliquePath> run(std::optional<std::size_t> first, std::optional<std::size_t> last) {
    last_pin_ = last;
    placed_count_.assign(g_.order(), 0);
    VertexSet placed(cliques_.size());
    for (std::size_t i = 0; i < cliques_.size(); ++i) {
      if (first && i != *first) continue;
      if (last && i == *last && cliques_.size() > 1) continue;
      order_.assign(1, static_cast<Vertex>(i));
      place(i, +1);
      placed.insert(static_cast<Vertex>(i));
      bool ok = extend(placed);
      placed.erase(static_cast<Vertex>(i));
      place(i, -1);
      if (ok) {
        CliquePath p;
        for (auto idx : order_) p.cliques.push_back(cliques_[idx]);
        return p;
      }
    }
    return std::nullopt;
  }

private:
  void place(std::size_t i, int delta) {
    for (Vertex v : cliques_[i]) placed_count_[v] += delta;
  }

  bool extend(VertexSet& placed) {
    if (order_.size() == cliques_.size()) return true;
    const Vertex prev = order_.back();
    auto key = std::make_pair(placed, prev);
    if (failed_.count(key)) return false;
    const VertexSet& prev_q = cliques_[prev];
    VertexSet pending(g_.order());
    for (Vertex v : prev_q)
      if (placed_count_[v] < total_[v]) pending.insert(v);
    const bool only_last_left = order_.size() + 1 == cliques_.size();
    for (Vertex i = 0; i < cliques_.size(); ++i) {
      if (placed.contains(i)) continue;
      if (last_pin_ && i == *last_pin_ && !only_last_left) continue;
      const VertexSet& q = cliques_[i];
      if (!pending.is_subset_of(q)) continue;
      bool closed_hit = false;
      for (Vertex v : q)
        if (placed_count_[v] > 0 && !prev_q.contains(v)) {
          closed_hit = true;
          break;
        }
      if (closed_hit) continue;
      order_.push_back(i);
      place(i, +1);
      placed.insert(i);
      bool ok = extend(placed);
      placed.erase(i);
      place(i, -1);
      if (ok) return true;
      order_.pop_back();
    }
    failed_.insert(std::move(key));
    return false;
  }

  const Graph& g_;
  std::vector<VertexSet> cliques_;
  std::vector<int> total_;
  std::vector<int> placed_count_;
  std::vector<Vertex> order_;
  std::optional<std::size_t> last_pin_;
  std::unordered_set<std::pair<VertexSet, Vertex>, StateHash> failed_;
};

inline std::optional<std::size_t> index_of(const std::vector<VertexSet>& cliques, const std::optional<VertexSet>& q) {
  if (!q) return std::nullopt;
  auto it = std::find(cliques.begin(), cliques.end(), *q);
  if (it == cliques.end()) throw contract_error("pinned set is not a maximal clique");
  return static_cast<std::size_t>(it - cliques.begin());
}

}  // namespace detail

/// Backtracking search for an ordering of the maximal cliques (given, so
/// repeated searches can share them) with consecutive runs; failed search
/// states are memoised. Pins fix the first and/or last clique.
inline std::optional<CliquePath> build_clique_path(const Graph& g, const std::vector<VertexSet>& cliques,
                                                   const CliquePathPins& pins = {}) {
  if (cliques.empty()) return CliquePath{};
  auto first = detail::index_of(cliques, pins.first);
  auto last = detail::index_of(cliques, pins.last);
  if (first && last && *first == *last && cliques.size() > 1) return std::nullopt;
  return detail::CliquePathSearch(g, cliques).run(first, last);
}

/// Throws contract_error when g is not chordal.
inline std::optional<CliquePath> build_clique_path(const Graph& g, const CliquePathPins& pins = {}) {
  return build_clique_path(g, maximal_cliques_chordal(g), pins);
}

/// Model with distinct integer endpoints from a clique path: vertex v spans
/// the clique indices first(v)..last(v), spread apart so no endpoints tie.
inline IntervalModel model_from_clique_path(const Graph& g, const CliquePath& p) {
  const auto n = static_cast<std::int64_t>(g.order());
  const std::int64_t stride = 2 * n + 1;
  IntervalModel m{std::vector<Interval>(g.order())};
  for (Vertex v = 0; v < g.order(); ++v) {
    std::int64_t f = -1, l = -1;
    for (std::size_t i = 0; i < p.cliques.size(); ++i)
      if (p.cliques[i].contains(v)) {
        if (f < 0) f = static_cast<std::int64_t>(i);
        l = static_cast<std::int64_t>(i);
      }
    m.intervals[v] = {f * stride + v, l * stride + n + v};
  }
  return m;
}

/// Proper model of a claw-free interval graph. Sorting vertices by their
/// (first, last) clique indices gives an umbrella ordering; vertex i of that
/// order gets [i(n+1), r(i)(n+1) + i] with r(i) its furthest neighbour.
inline IntervalModel proper_model_from_clique_path(const Graph& g, const CliquePath& p) {
  const auto n = g.order();
  std::vector<std::tuple<std::size_t, std::size_t, Vertex>> keys;
  for (Vertex v = 0; v < n; ++v) {
    std::size_t f = p.cliques.size(), l = 0;
    for (std::size_t i = 0; i < p.cliques.size(); ++i)
      if (p.cliques[i].contains(v)) {
        f = std::min(f, i);
        l = std::max(l, i);
      }
    keys.emplace_back(f, l, v);
  }
  std::sort(keys.begin(), keys.end());
  std::vector<Vertex> order;
  for (auto& k : keys) order.push_back(std::get<2>(k));
  IntervalModel m{std::vector<Interval>(n)};
  const auto scale = static_cast<std::int64_t>(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t r = i;
    for (std::size_t j = i + 1; j < n; ++j)
      if (g.adjacent(order[i], order[j])) r = j;
    const auto pos = static_cast<std::int64_t>(i + 1);
    m.intervals[order[i]] = {pos * scale, static_cast<std::int64_t>(r + 1) * scale + pos};
  }
  return m;
}

// ------------------------------------------------------------ recognition

enum class GraphClass { chordal, interval, proper_interval };

inline std::string_view to_string(GraphClass c) {
  switch (c) {
    case GraphClass::chordal: return "chordal";
    case GraphClass::interval: return "interval";
    case GraphClass::proper_interval: return "proper-interval";
  }
  return "?";
}

inline GraphClass parse_graph_class(std::string_view s) {
  for (auto c : {GraphClass::chordal, GraphClass::interval, GraphClass::proper_interval})
    if (s == to_string(c)) return c;
  throw input_error("unknown graph class '" + std::string(s) + "'");
}

using Obstruction = std::variant<std::monostate, ChordlessCycle, AsteroidalTriple, Claw>;

/// Membership verdict with positive evidence (elimination order, clique path,
/// interval model) or an obstruction.
struct RecognitionCertificate {
  GraphClass target = GraphClass::chordal;
  bool member = false;
  std::vector<Vertex> elimination_order;
  std::optional<CliquePath> clique_path;
  std::optional<IntervalModel> model;
  Obstruction obstruction;
};

inline RecognitionCertificate recognize(const Graph& g, GraphClass target) {
  RecognitionCertificate c;
  c.target = target;
  auto peo = perfect_elimination_order(g);
  if (!peo.chordal()) {
    c.obstruction = *peo.cycle;
    return c;
  }
  c.elimination_order = peo.order;
  if (target == GraphClass::chordal) {
    c.member = true;
    return c;
  }
  if (auto at = find_asteroidal_triple(g)) {
    c.obstruction = *at;
    return c;
  }
  std::optional<Claw> claw;
  if (target == GraphClass::proper_interval && (claw = find_claw(g))) {
    c.obstruction = *claw;
    return c;
  }
  c.clique_path = build_clique_path(g);
  if (!c.clique_path) throw contract_error("internal: chordal AT-free graph without a clique path");
  c.model = target == GraphClass::proper_interval ? proper_model_from_clique_path(g, *c.clique_path)
                                                  : model_from_clique_path(g, *c.clique_path);
  c.member = true;
  return c;
}

inline RecognitionCertificate is_interval(const Graph& g) { return recognize(g, GraphClass::interval); }
inline RecognitionCertificate is_proper_interval(const Graph& g) { return recognize(g, GraphClass::proper_interval); }

/// Independent re-check of every piece of evidence in c.
inline std::optional<std::string> certificate_defect(const Graph& g, const RecognitionCertificate& c) {
  if (c.member) {
    if (!std::holds_alternative<std::monostate>(c.obstruction)) return "member with an obstruction";
    if (auto d = elimination_order_defect(g, c.elimination_order)) return "elimination order: " + *d;
    if (c.target != GraphClass::chordal) {
      if (!c.clique_path) return "missing clique path";
      if (auto d = clique_path_defect(g, *c.clique_path)) return "clique path: " + *d;
      if (!c.model) return "missing interval model";
      if (auto d = model_defect(g, *c.model, c.target == GraphClass::proper_interval)) return "model: " + *d;
    }
    return std::nullopt;
  }
  return std::visit(
      [&](const auto& o) -> std::optional<std::string> {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, std::monostate>) return "non-member without an obstruction";
        else if constexpr (std::is_same_v<T, ChordlessCycle>) return cycle_defect(g, o);
        else if constexpr (std::is_same_v<T, AsteroidalTriple>) {
          if (c.target == GraphClass::chordal) return "asteroidal triple does not refute chordality";
          return triple_defect(g, o);
        } else {
          if (c.target != GraphClass::proper_interval) return "claw only refutes proper interval";
          return claw_defect(g, o);
        }
      },
      c.obstruction);
}

// ------------------------------------------------------------ end vertices

/// End-vertex queries on an interval graph; the maximal cliques are computed
/// once. Throws contract_error for non-interval graphs.
class EndVertexIndex {
public:
  explicit EndVertexIndex(const Graph& g) : g_(g) {
    cliques_ = maximal_cliques_chordal(g);
    if (!build_clique_path(g, cliques_)) throw contract_error("graph is not an interval graph");
  }

  const std::vector<VertexSet>& cliques() const { return cliques_; }

  std::optional<CliquePath> path(const CliquePathPins& pins = {}) const { return build_clique_path(g_, cliques_, pins); }

  /// Some clique path starts with a clique containing a.
  bool is_end_vertex(Vertex a) const {
    if (g_.order() == 1) return true;
    for (const auto& q : cliques_)
      if (q.contains(a) && path({q, std::nullopt})) return true;
    return false;
  }

  VertexSet end_simplicial_vertices() const {
    VertexSet out(g_.order());
    for (Vertex v = 0; v < g_.order(); ++v)
      if (is_simplicial(g_, v) && is_end_vertex(v)) out.insert(v);
    return out;
  }

  /// Simplicial s1, s2 with N[s1] first and N[s2] last in one clique path
  /// (N[s1] = N[s2] allowed only when there is a single clique).
  bool opposite_ends(Vertex s1, Vertex s2) const {
    VertexSet q1 = g_.closed_neighborhood(s1), q2 = g_.closed_neighborhood(s2);
    if (q1 == q2) return cliques_.size() == 1;
    return path({q1, q2}).has_value();
  }

private:
  const Graph& g_;
  std::vector<VertexSet> cliques_;
};

inline bool is_end_vertex(const Graph& g, Vertex a) { return EndVertexIndex(g).is_end_vertex(a); }

inline VertexSet end_simplicial_vertices(const Graph& g) { return EndVertexIndex(g).end_simplicial_vertices(); }

// --------------------------------------------------- forbidden patterns

/// Induced copy of a small pattern with a designated vertex; `vertices[0]` is
/// the designated vertex, the rest follow the pattern's own numbering.
struct PatternMatch {
  std::string pattern;
  std::vector<Vertex> vertices;
};

namespace detail {

struct Pattern {
  std::string name;
  std::size_t size;
  std::vector<std::pair<int, int>> edges;  // vertex 0 is the designated one

  bool adjacent(int i, int j) const {
    for (auto [a, b] : edges)
      if ((a == i && b == j) || (a == j && b == i)) return true;
    return false;
  }
};

inline const std::vector<Pattern>& gimbel_patterns() {
  // 0 = a; then v1..vk
  static const std::vector<Pattern> patterns{
      {"centered-p5", 5, {{1, 2}, {2, 0}, {0, 3}, {3, 4}}},
      {"star122", 6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 3}}},
      {"bull", 5, {{1, 2}, {2, 3}, {3, 4}, {0, 2}, {0, 3}}},
  };
  return patterns;
}

inline bool match_pattern(const Graph& g, const Pattern& p, std::vector<Vertex>& image) {
  if (image.size() == p.size) return true;
  const int next = static_cast<int>(image.size());
  for (Vertex x = 0; x < g.order(); ++x) {
    if (std::find(image.begin(), image.end(), x) != image.end()) continue;
    bool ok = true;
    for (int i = 0; i < next && ok; ++i) ok = g.adjacent(image[i], x) == p.adjacent(i, next);
    if (!ok) continue;
    image.push_back(x);
    if (match_pattern(g, p, image)) return true;
    image.pop_back();
  }
  return false;
}

}  // namespace detail

/// Induced centred P5, star_{1,2,2} and bull with a as the designated vertex.
/// Complete as an end-vertex test on proper interval graphs; on general
/// interval graphs it is a filter (the infinite B_n family is not searched).
inline std::vector<PatternMatch> gimbel_forbidden_check(const Graph& g, Vertex a) {
  std::vector<PatternMatch> out;
  for (const auto& p : detail::gimbel_patterns()) {
    std::vector<Vertex> image{a};
    if (detail::match_pattern(g, p, image)) out.push_back({p.name, std::move(image)});
  }
  return out;
}

// ------------------------------------------------------------ serialization

inline nlohmann::json labels_json(const Graph& g, const std::vector<Vertex>& vs) {
  nlohmann::json out = nlohmann::json::array();
  for (Vertex v : vs) out.push_back(g.label(v));
  return out;
}

inline nlohmann::json to_json(const Graph& g, const CliquePath& p) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& q : p.cliques) out.push_back(g.labels_of(q));
  return out;
}

inline nlohmann::json to_json(const Graph& g, const IntervalModel& m) {
  nlohmann::json out = nlohmann::json::object();
  for (Vertex v = 0; v < g.order(); ++v) out[g.label(v)] = {m.intervals[v].left, m.intervals[v].right};
  return out;
}

inline nlohmann::json to_json(const Graph& g, const Obstruction& o) {
  return std::visit(
      [&](const auto& w) -> nlohmann::json {
        using T = std::decay_t<decltype(w)>;
        if constexpr (std::is_same_v<T, std::monostate>) return nullptr;
        else if constexpr (std::is_same_v<T, ChordlessCycle>)
          return {{"kind", "chordless-cycle"}, {"cycle", labels_json(g, w.cycle)}};
        else if constexpr (std::is_same_v<T, AsteroidalTriple>) {
          nlohmann::json paths = nlohmann::json::array();
          for (const auto& p : w.paths) paths.push_back(labels_json(g, p));
          return {{"kind", "asteroidal-triple"},
                  {"vertices", labels_json(g, {w.vertices.begin(), w.vertices.end()})},
                  {"paths", paths}};
        } else
          return {{"kind", "claw"},
                  {"center", g.label(w.center)},
                  {"leaves", labels_json(g, {w.leaves.begin(), w.leaves.end()})}};
      },
      o);
}

inline nlohmann::json to_json(const Graph& g, const RecognitionCertificate& c) {
  nlohmann::json out{{"class", to_string(c.target)}, {"member", c.member}};
  if (!c.elimination_order.empty()) out["elimination_order"] = labels_json(g, c.elimination_order);
  if (c.clique_path) out["clique_path"] = to_json(g, *c.clique_path);
  if (c.model) out["model"] = to_json(g, *c.model);
  if (!c.member) out["obstruction"] = to_json(g, c.obstruction);
  return out;
}

}  // namespace wtc
