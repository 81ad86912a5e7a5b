#pragma once

// Brute-force semantics used as ground truth in tests. Nothing here calls the
// interval code in convexity.hpp: walks are searched directly over
// (vertex, passed-x) states with the endpoint constraints checked per vertex.

#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wtc/error.hpp"
#include "wtc/graph.hpp"

namespace wtc::oracle {

struct Budget {
  std::size_t max_n = 12;
  std::uint64_t max_subsets = std::uint64_t{1} << 24;

  std::size_t max_walk_len(std::size_t n) const { return 2 * n + 2; }
};

enum class WalkRule { tolled, weakly_toll };

namespace detail {

inline void check_size(const Graph& g, const Budget& budget) {
  if (g.order() > budget.max_n)
    throw resource_error("oracle limited to " + std::to_string(budget.max_n) + " vertices, graph has " +
                         std::to_string(g.order()));
}

// Is there a walk w1 = a_1, ..., a_k = wk whose vertices all pass `allowed`
// and which visits x? For tolled walks w1 and wk may only occur at the ends.
inline bool walk_through(const Graph& g, Vertex w1, Vertex wk, Vertex x, const std::vector<bool>& allowed,
                         WalkRule rule) {
  const auto n = g.order();
  if (rule == WalkRule::tolled && w1 == wk) return x == w1;
  std::vector<char> seen(2 * n, 0);
  std::deque<std::pair<Vertex, bool>> queue;
  auto push = [&](Vertex y, bool passed) {
    auto& s = seen[2 * y + passed];
    if (!s) {
      s = 1;
      queue.emplace_back(y, passed);
    }
  };
  push(w1, x == w1);
  while (!queue.empty()) {
    auto [y, passed] = queue.front();
    queue.pop_front();
    if (y == wk && passed) return true;
    if (rule == WalkRule::tolled && y == wk && y != w1) continue;  // wk ends the walk
    for (Vertex z : g.neighbor_list(y)) {
      if (!allowed[z]) continue;
      if (rule == WalkRule::tolled && z == w1) continue;
      push(z, passed || z == x);
    }
  }
  return false;
}

}  // namespace detail

/// Interval under `rule` by trying every gate choice (w1 in N(u), wk in N(v))
/// and every target vertex x separately.
inline VertexSet walk_interval(const Graph& g, Vertex u, Vertex v, WalkRule rule, const Budget& budget = {}) {
  detail::check_size(g, budget);
  const auto n = g.order();
  VertexSet out(n);
  out.insert(u);
  out.insert(v);
  if (u == v || g.adjacent(u, v)) return out;

  for (Vertex w1 : g.neighbor_list(u))
    for (Vertex wk : g.neighbor_list(v)) {
      // A vertex may sit inside the walk iff adjacency to u forces it to be w1
      // and adjacency to v forces it to be wk.
      std::vector<bool> allowed(n);
      for (Vertex y = 0; y < n; ++y)
        allowed[y] = (!g.adjacent(u, y) || y == w1) && (!g.adjacent(v, y) || y == wk);
      if (!allowed[w1] || !allowed[wk]) continue;
      for (Vertex x = 0; x < n; ++x)
        if (!out.contains(x) && allowed[x] && detail::walk_through(g, w1, wk, x, allowed, rule)) out.insert(x);
    }
  return out;
}

inline VertexSet weakly_toll_interval(const Graph& g, Vertex u, Vertex v, const Budget& budget = {}) {
  return walk_interval(g, u, v, WalkRule::weakly_toll, budget);
}

inline VertexSet toll_interval(const Graph& g, Vertex u, Vertex v, const Budget& budget = {}) {
  return walk_interval(g, u, v, WalkRule::tolled, budget);
}

/// All pairwise weakly toll intervals as bit masks (n <= 64).
class OracleIntervals {
public:
  OracleIntervals(const Graph& g, WalkRule rule, const Budget& budget) : n_(g.order()), masks_(n_ * n_, 0) {
    detail::check_size(g, budget);
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v = u; v < n_; ++v) {
        auto m = walk_interval(g, u, v, rule, budget).low_word();
        masks_[u * n_ + v] = masks_[v * n_ + u] = m;
      }
  }

  std::uint64_t of_set(std::uint64_t s) const {
    std::uint64_t out = s;
    for (std::size_t u = 0; u < n_; ++u) {
      if (!((s >> u) & 1u)) continue;
      for (std::size_t v = u + 1; v < n_; ++v)
        if ((s >> v) & 1u) out |= masks_[u * n_ + v];
    }
    return out;
  }

  std::uint64_t hull(std::uint64_t s) const {
    for (auto next = of_set(s); next != s; next = of_set(s)) s = next;
    return s;
  }

private:
  std::size_t n_;
  std::vector<std::uint64_t> masks_;
};

struct Optimum {
  std::size_t count = 0;
  VertexSet set;
};

namespace detail {

inline void check_invariant_domain(const Graph& g, const Budget& budget) {
  if (g.order() < 2) throw contract_error("invariant needs a non-trivial graph");
  if (!is_connected(g)) throw contract_error("invariant needs a connected graph");
  check_size(g, budget);
}

/// First subset in colexicographic order (by increasing size) accepted by pred.
template <class Pred>
Optimum smallest_subset(const Graph& g, const Budget& budget, Pred pred) {
  const auto n = g.order();
  const std::uint64_t all = (std::uint64_t{1} << n) - 1;
  std::uint64_t examined = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    // Gosper's hack enumerates k-subsets in increasing numeric (= colex) order.
    for (std::uint64_t s = (std::uint64_t{1} << k) - 1; s <= all;) {
      if (++examined > budget.max_subsets) throw resource_error("oracle subset budget exhausted");
      if (pred(s)) return {k, from_mask(n, s)};
      const std::uint64_t c = s & (~s + 1);
      const std::uint64_t r = s + c;
      if (r > all || r == 0) break;
      s = (((r ^ s) >> 2) / c) | r;
    }
  }
  throw contract_error("no subset satisfies the predicate");
}

}  // namespace detail

/// Minimum weakly toll set: smallest S whose set interval is V(G).
inline Optimum wtn(const Graph& g, const Budget& budget = {}) {
  detail::check_invariant_domain(g, budget);
  OracleIntervals table(g, WalkRule::weakly_toll, budget);
  const std::uint64_t all = (std::uint64_t{1} << g.order()) - 1;
  return detail::smallest_subset(g, budget, [&](std::uint64_t s) { return table.of_set(s) == all; });
}

/// Minimum weakly toll hull set: smallest S whose hull is V(G).
inline Optimum wth(const Graph& g, const Budget& budget = {}) {
  detail::check_invariant_domain(g, budget);
  OracleIntervals table(g, WalkRule::weakly_toll, budget);
  const std::uint64_t all = (std::uint64_t{1} << g.order()) - 1;
  return detail::smallest_subset(g, budget, [&](std::uint64_t s) { return table.hull(s) == all; });
}

/// Smallest k for which some k-set passes `pred`; used to spot-check that no
/// smaller set than a claimed optimum works.
inline bool exists_subset_of_size(const Graph& g, std::size_t k, const std::function<bool(const VertexSet&)>& pred) {
  const auto n = g.order();
  if (k > n) return false;
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  if (k == 0) return pred(VertexSet(n));
  for (std::uint64_t s = (std::uint64_t{1} << k) - 1; s <= all;) {
    if (pred(from_mask(n, s))) return true;
    const std::uint64_t c = s & (~s + 1);
    const std::uint64_t r = s + c;
    if (r > all || r == 0) break;
    s = (((r ^ s) >> 2) / c) | r;
  }
  return false;
}

}  // namespace wtc::oracle
