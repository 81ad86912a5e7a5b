#pragma once

// Property suites behind `wtc verify` and the acceptance binary. Each suite
// returns counts plus the first few failures with enough detail to replay.

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "wtc/convexity.hpp"
#include "wtc/generators.hpp"
#include "wtc/interval_structure.hpp"
#include "wtc/invariants.hpp"
#include "wtc/io.hpp"
#include "wtc/oracle.hpp"
#include "wtc/parallel.hpp"
#include "wtc/walk.hpp"

namespace wtc {

struct SuiteOptions {
  unsigned jobs = 1;
  std::uint64_t seed = 1;
  oracle::Budget budget;
};

struct SuiteReport {
  explicit SuiteReport(std::string n = {}) : name(std::move(n)) {}

  std::string name;
  std::size_t checked = 0;          // instances examined
  std::size_t failed = 0;           // instances violating the property
  std::vector<std::string> failures;  // first few, human readable
  std::vector<std::string> info;
  nlohmann::json details = nlohmann::json::object();
  double seconds = 0;  // wall clock; left out of the JSON so output is reproducible

  bool passed() const { return failed == 0; }

  void fail(std::string what) {
    ++failed;
    if (failures.size() < kShown) failures.push_back(std::move(what));
  }

  void merge(const SuiteReport& o) {
    checked += o.checked;
    failed += o.failed;
    for (const auto& f : o.failures)
      if (failures.size() < kShown) failures.push_back(f);
  }

  static constexpr std::size_t kShown = 5;
};

inline nlohmann::json to_json(const SuiteReport& r) {
  return {{"suite", r.name},          {"passed", r.passed()}, {"checked", r.checked}, {"failed", r.failed},
          {"failures", r.failures},   {"info", r.info},       {"details", r.details}};
}

namespace suites {

// ---------------------------------------------------------------- corpora

inline std::vector<Graph> connected_graphs_up_to(int n) {
  std::vector<Graph> out;
  for (int k = 1; k <= n; ++k) for_each_labelled_graph(k, true, [&](const Graph& g) { out.push_back(g); });
  return out;
}

/// `count` connected graphs with 7..12 vertices and varied density.
inline std::vector<Graph> random_graphs(std::size_t count, std::uint64_t seed) {
  std::vector<Graph> out;
  Rng rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    const int n = static_cast<int>(rng.uniform(7, 12));
    const int density = static_cast<int>(rng.uniform(5, 70));
    out.push_back(random_connected_graph(n, density, rng.uniform(0, 1u << 30)));
  }
  return out;
}

inline std::string describe(const Graph& g) {
  std::string s;
  for (auto [u, v] : g.edges()) s += (s.empty() ? "" : ", ") + g.label(u) + "-" + g.label(v);
  return "[" + s + "]";
}

inline std::string set_string(const Graph& g, const VertexSet& s) {
  std::string out;
  for (Vertex v : s) out += (out.empty() ? "" : ",") + g.label(v);
  return "{" + out + "}";
}

template <class Check>
SuiteReport over_corpus(std::string name, const std::vector<Graph>& corpus, unsigned jobs, Check check) {
  SuiteReport total{std::move(name)};
  auto parts = parallel_map(corpus.size(), jobs, [&](std::size_t i) {
    SuiteReport r;
    check(corpus[i], r);
    return r;
  });
  for (const auto& p : parts) total.merge(p);
  return total;
}

// ---------------------------------------------------------------- suites

inline std::vector<Graph> equivalence_corpus(const SuiteOptions& o) {
  auto corpus = connected_graphs_up_to(6);
  auto extra = random_graphs(200, o.seed);
  corpus.insert(corpus.end(), extra.begin(), extra.end());
  return corpus;
}

/// Production WT and T intervals against the oracle, pair by pair.
inline SuiteReport oracle_equivalence(const SuiteOptions& o) {
  auto corpus = equivalence_corpus(o);
  auto r = over_corpus("oracle-equivalence", corpus, o.jobs, [&](const Graph& g, SuiteReport& rep) {
    ++rep.checked;
    for (Vertex u = 0; u < g.order(); ++u)
      for (Vertex v = u + 1; v < g.order(); ++v) {
        if (weakly_toll_interval(g, u, v) != oracle::weakly_toll_interval(g, u, v, o.budget))
          rep.fail("WT(" + g.label(u) + "," + g.label(v) + ") differs on " + describe(g));
        if (toll_interval(g, u, v) != oracle::toll_interval(g, u, v, o.budget))
          rep.fail("T(" + g.label(u) + "," + g.label(v) + ") differs on " + describe(g));
      }
  });
  r.info.push_back(std::to_string(corpus.size()) + " graphs");
  return r;
}

/// I ⊆ J ⊆ T ⊆ WT for every pair.
inline SuiteReport chain(const SuiteOptions& o) {
  auto corpus = equivalence_corpus(o);
  auto r = over_corpus("chain", corpus, o.jobs, [](const Graph& g, SuiteReport& rep) {
    ++rep.checked;
    for (Vertex u = 0; u < g.order(); ++u)
      for (Vertex v = u + 1; v < g.order(); ++v) {
        const VertexSet i = geodesic_interval(g, u, v), j = monophonic_interval(g, u, v), t = toll_interval(g, u, v),
                        wt = weakly_toll_interval(g, u, v);
        if (!i.is_subset_of(j) || !j.is_subset_of(t) || !t.is_subset_of(wt))
          rep.fail("chain broken at (" + g.label(u) + "," + g.label(v) + ") on " + describe(g));
      }
  });
  r.info.push_back(std::to_string(corpus.size()) + " graphs");
  return r;
}

/// Brute-force convex geometry verdict equals proper interval recognition.
inline SuiteReport geometry_dichotomy(const SuiteOptions& o) {
  auto corpus = connected_graphs_up_to(6);
  return over_corpus("geometry-dichotomy", corpus, o.jobs, [](const Graph& g, SuiteReport& rep) {
    ++rep.checked;
    auto report = is_convex_geometry(g, GeometryMode::both);
    if (!report.agree())
      rep.fail("proper interval " + std::to_string(*report.structural) + " but convex geometry " +
               std::to_string(*report.bruteforce) + " on " + describe(g));
  });
}

inline SuiteReport claw_example(const SuiteOptions&) {
  SuiteReport r{"claw-example"};
  const Graph g = claw_graph();
  const VertexSet s = g.set_of({"a", "b", "c"});
  ++r.checked;
  if (!is_convex(g, s, ConvexityKind::toll)) r.fail("{a,b,c} is not toll convex");
  auto wt = is_convex(g, s, ConvexityKind::weakly_toll);
  if (wt) r.fail("{a,b,c} is weakly toll convex");
  else if (wt.violation->escaping != g.vertex("d")) r.fail("escape witness is not d");
  auto walk = walk_of(g, {"a", "b", "d", "b", "c"});
  if (auto d = walk_defect(g, walk, WalkKind::weakly_toll)) r.fail("walk a,b,d,b,c rejected: " + *d);
  if (is_valid_walk(g, walk, WalkKind::tolled)) r.fail("walk a,b,d,b,c accepted as tolled");
  auto found = witness_walk(g, g.vertex("a"), g.vertex("c"), g.vertex("d"), WalkKind::weakly_toll);
  if (!found) r.fail("no weakly toll witness for d between a and c");
  return r;
}

/// The three walks of the end-vertex remark, and a outside Ext(G).
inline SuiteReport gimbel_walks(const SuiteOptions&) {
  SuiteReport r{"gimbel-walks"};
  auto check = [&](const Graph& g, const std::vector<Vertex>& walk, const std::string& what) {
    ++r.checked;
    if (auto d = walk_defect(g, walk, WalkKind::weakly_toll)) r.fail(what + ": walk rejected: " + *d);
    if (ext(g).contains(g.vertex("a"))) r.fail(what + ": a is extreme");
  };
  {
    Graph g = star122_graph();
    check(g, walk_of(g, {"v1", "v2", "v3", "a", "v3", "v4", "v5"}), "star122");
  }
  for (int n = 6; n <= 9; ++n) {
    Graph g = bn_graph(n);
    const std::string last = "v" + std::to_string(n), before = "v" + std::to_string(n - 1);
    check(g, walk_of(g, {"v1", "v2", "a", "v2", before, last}), "B" + std::to_string(n));
  }
  {
    Graph g = bull_graph();
    check(g, walk_of(g, {"v1", "v2", "a", "v3", "v4"}), "bull");
  }
  return r;
}

/// wtn = wth = 2 for every tree, via the tree theorem and via the oracle.
inline SuiteReport trees(const SuiteOptions& o) {
  std::vector<Graph> corpus;
  for (int n = 2; n <= 7; ++n) for_each_labelled_tree(n, [&](const Graph& g) { corpus.push_back(g); });
  const std::size_t labelled = corpus.size();
  auto unlabelled = unlabelled_trees(8);
  corpus.insert(corpus.end(), unlabelled.begin(), unlabelled.end());
  Rng rng(o.seed);
  for (int i = 0; i < 100; ++i) corpus.push_back(random_tree(static_cast<int>(rng.uniform(2, 10)), rng.uniform(0, 1u << 30)));
  auto r = over_corpus("trees", corpus, o.jobs, [&](const Graph& g, SuiteReport& rep) {
    ++rep.checked;
    auto inv = invariants(g, {o.budget, {}});
    if (inv.wtn.method != Method::tree_theorem || inv.wtn.value != 2 || inv.wth.value != 2 || !inv.wtn.validated ||
        !inv.wth.validated)
      rep.fail("structural answer off on " + describe(g));
    const auto ow = oracle::wtn(g, o.budget).count, oh = oracle::wth(g, o.budget).count;
    if (ow != 2 || oh != 2)
      rep.fail("oracle wtn " + std::to_string(ow) + ", wth " + std::to_string(oh) + " on " + describe(g));
  });
  r.info.push_back(std::to_string(labelled) + " labelled trees (n <= 7), " + std::to_string(unlabelled.size()) +
                   " unlabelled trees (n = 8), 100 random trees (n <= 10)");
  return r;
}

/// fig5_1 and fig5_2: weakly toll numbers, the alternative weakly toll sets
/// and the hull levels of {s1, s2}.
inline SuiteReport fig5_graphs(const SuiteOptions& o) {
  SuiteReport r{"fig5"};
  const Graph g = fig5_1_graph();
  const VertexSet all = g.vertices();
  IntervalTable wt(g, ConvexityKind::weakly_toll);
  auto expect = [&](bool ok, const std::string& what) {
    ++r.checked;
    if (!ok) r.fail(what);
  };

  const auto o1 = oracle::wtn(g, o.budget);
  expect(o1.count == 3, "fig5_1: wtn is " + std::to_string(o1.count) + ", not 3; " + set_string(g, o1.set) +
                            " is a weakly toll set");
  if (o1.count < 3) {
    auto sv = o1.set.members();
    if (sv.size() == 2)
      for (Vertex x : all - o1.set)
        if (auto w = witness_walk(g, sv[0], sv[1], x, WalkKind::weakly_toll)) {
          std::string walk;
          for (Vertex y : w->walk) walk += (walk.empty() ? "" : ",") + g.label(y);
          r.info.push_back("fig5_1: " + g.label(x) + " via " + walk);
        }
  }
  expect(wt.of_set(g.set_of({"s1", "q1", "s2"})) == all, "fig5_1: {s1,q1,s2} is not a weakly toll set");
  expect(wt.of_set(g.set_of({"s1", "1", "s2"})) == all, "fig5_1: {s1,1,s2} is not a weakly toll set");
  const auto h1 = oracle::wth(g, o.budget);
  expect(h1.count == 2, "fig5_1: wth is " + std::to_string(h1.count));
  auto trace = hull(wt, g.set_of({"s1", "s2"}));
  expect(trace.hull == all, "fig5_1: {s1,s2} is not a hull set");

  const std::vector<VertexSet> expected_steps{g.set_of({"3", "4", "5"}), g.set_of({"q1", "2"}), g.set_of({"1"})};
  std::string levels;
  for (std::size_t i = 1; i < trace.levels.size(); ++i)
    levels += " +" + set_string(g, trace.levels[i] - trace.levels[i - 1]);
  bool steps_ok = trace.levels.size() == expected_steps.size() + 1;
  for (std::size_t i = 0; steps_ok && i < expected_steps.size(); ++i)
    steps_ok = trace.levels[i + 1] - trace.levels[i] == expected_steps[i];
  expect(steps_ok, "fig5_1: hull levels from {s1,s2} are" + levels + ", not +{3,4,5} +{q1,2} +{1}");
  // which pair interval captures each step
  expect(g.set_of({"3", "4", "5"}).is_subset_of(wt(g.vertex("s1"), g.vertex("s2"))), "fig5_1: WT(s1,s2) misses 3,4,5");
  expect(g.set_of({"q1", "2"}).is_subset_of(wt(g.vertex("s1"), g.vertex("5"))), "fig5_1: WT(s1,5) misses q1,2");
  expect(wt(g.vertex("s1"), g.vertex("q1")).contains(g.vertex("1")), "fig5_1: WT(s1,q1) misses 1");
  expect(!wt(g.vertex("s1"), g.vertex("s2")).contains(g.vertex("1")), "fig5_1: WT(s1,s2) contains 1");

  const Graph g2 = fig5_2_graph();
  const auto o2 = oracle::wtn(g2, o.budget);
  expect(o2.count == 4, "fig5_2: wtn is " + std::to_string(o2.count) + ", not 4; " + set_string(g2, o2.set) +
                            " is a weakly toll set");
  return r;
}

/// The clique path of B_8.
inline SuiteReport b8_clique_path(const SuiteOptions&) {
  SuiteReport r{"b8-clique-path"};
  const Graph g = bn_graph(8);
  const std::vector<VertexSet> expected{g.set_of({"v1", "v2"}),       g.set_of({"v2", "a", "v3"}),
                                        g.set_of({"v2", "v3", "v4"}), g.set_of({"v2", "v4", "v5"}),
                                        g.set_of({"v2", "v5", "v6"}), g.set_of({"v2", "v6", "v7"}),
                                        g.set_of({"v7", "v8"})};
  ++r.checked;
  auto path = build_clique_path(g);
  if (!path) {
    r.fail("B8 has no clique path");
    return r;
  }
  if (auto d = clique_path_defect(g, *path)) r.fail("B8 clique path invalid: " + *d);
  const auto& got = path->cliques;
  const bool same = got == expected || path->reversed().cliques == expected;
  if (!same) {
    std::string s;
    for (const auto& q : got) s += " " + set_string(g, q);
    r.fail("B8 clique path is" + s);
  }
  return r;
}

/// Claw example, end-vertex walks, the fig5 graphs and the B_8 clique path.
inline SuiteReport paper_examples(const SuiteOptions& o) {
  SuiteReport r{"paper-examples"};
  for (auto part : {claw_example(o), gimbel_walks(o), fig5_graphs(o), b8_clique_path(o)}) {
    r.merge(part);
    r.info.push_back(part.name + ": " + (part.passed() ? "ok" : std::to_string(part.failed) + " failed"));
  }
  return r;
}

/// Ext(G) under the oracle invariants for random proper interval graphs.
inline SuiteReport prop7(const SuiteOptions& o) {
  std::vector<Graph> corpus;
  Rng rng(o.seed);
  for (int i = 0; i < 50; ++i)
    corpus.push_back(random_connected_interval_graph(static_cast<int>(rng.uniform(2, 12)), true, rng.uniform(0, 1u << 30)).graph);
  return over_corpus("prop7", corpus, o.jobs, [&](const Graph& g, SuiteReport& rep) {
    ++rep.checked;
    auto cert = is_proper_interval(g);
    if (!cert.member) {
      rep.fail("generator produced a non proper interval graph " + describe(g));
      return;
    }
    const auto ow = oracle::wtn(g, o.budget).count, oh = oracle::wth(g, o.budget).count;
    const auto e = ext(g).count(), es = end_simplicial_vertices(g).count();
    if (!(ow == oh && oh == e && e == es))
      rep.fail("wtn " + std::to_string(ow) + ", wth " + std::to_string(oh) + ", |Ext| " + std::to_string(e) +
               ", end simplicial " + std::to_string(es) + " on " + describe(g));
  });
}

inline std::vector<Graph> twin_free_interval_graphs(std::size_t count, std::uint64_t seed) {
  std::vector<Graph> out;
  Rng rng(seed);
  while (out.size() < count) {
    auto g = random_connected_interval_graph(static_cast<int>(rng.uniform(4, 12)), false, rng.uniform(0, 1u << 30)).graph;
    if (!has_twin_simplicial(g, TwinReading::simplicial_pair)) out.push_back(std::move(g));
  }
  return out;
}

/// wtn <= 4, wth = 2 and the interval formula on twin-free interval graphs.
inline SuiteReport thm9(const SuiteOptions& o) {
  auto corpus = twin_free_interval_graphs(50, o.seed);
  return over_corpus("thm9", corpus, o.jobs, [&](const Graph& g, SuiteReport& rep) {
    ++rep.checked;
    const auto ow = oracle::wtn(g, o.budget), oh = oracle::wth(g, o.budget);
    if (ow.count > 4 || oh.count != 2)
      rep.fail("oracle wtn " + std::to_string(ow.count) + ", wth " + std::to_string(oh.count) + " on " + describe(g));
    auto s = wtn_interval_structural(g);
    if (s.wtn != ow.count || s.wth != oh.count)
      rep.fail("formula wtn " + std::to_string(s.wtn) + ", wth " + std::to_string(s.wth) + " vs oracle " +
               std::to_string(ow.count) + ", " + std::to_string(oh.count) + " on " + describe(g));
  });
}

/// Interval formula (both maximality readings) against the oracle. A
/// disagreement is data: the suite fails only if a record lacks what is
/// needed to replay it.
inline SuiteReport corollary10(const SuiteOptions& o) {
  SuiteReport r{"corollary10"};
  std::vector<NamedGraph> corpus;
  Rng rng(o.seed);
  for (int i = 0; i < 100; ++i) {
    const int n = static_cast<int>(rng.uniform(4, 12));
    const auto seed = rng.uniform(0, 1u << 30);
    corpus.push_back({"interval-" + std::to_string(n) + "-" + std::to_string(seed),
                      random_connected_interval_graph(n, false, seed).graph});
  }
  CrossOptions co;
  co.budget = o.budget;
  co.jobs = o.jobs;
  auto cv = cross_validate(corpus, co);
  nlohmann::json lines = nlohmann::json::array();
  std::map<std::string, std::size_t> per_reading;
  for (const auto& rec : cv.records) {
    ++r.checked;
    auto j = to_json(rec);
    const bool complete = j.contains("graph") && j["oracle"].contains("wtn_set") &&
                          j["structural"].size() == co.readings.size();
    if (!complete) r.fail(rec.name + ": incomplete record");
    for (const auto& d : rec.discrepancies) ++per_reading[d.substr(0, d.find(':'))];
    lines.push_back(std::move(j));
  }
  r.details["records"] = std::move(lines);
  r.info.push_back(std::to_string(cv.compared) + " graphs compared, " + std::to_string(cv.discrepancies) +
                   " with a discrepancy");
  for (const auto& [reading, n] : per_reading)
    r.info.push_back(reading + ": " + std::to_string(n) + " disagreeing values");
  r.details["discrepancies"] = cv.discrepancies;
  return r;
}

/// Extreme vertices of convex sets are simplicial in G[C]; hulls of
/// asteroidal triples and claws have no extreme vertices.
inline SuiteReport lemmas(const SuiteOptions& o) {
  auto small = connected_graphs_up_to(5);
  auto r = over_corpus("lemmas", small, o.jobs, [](const Graph& g, SuiteReport& rep) {
    IntervalTable table(g, ConvexityKind::weakly_toll);
    for (const auto& c : enumerate_convex_sets(table)) {
      ++rep.checked;
      const Graph sub = induced_subgraph(g, c);
      const auto ids = c.members();
      for (Vertex x : extreme_vertices(table, c)) {
        const auto pos = static_cast<Vertex>(std::find(ids.begin(), ids.end(), x) - ids.begin());
        if (!is_simplicial(sub, pos))
          rep.fail("extreme " + g.label(x) + " of " + set_string(g, c) + " not simplicial in G[C] on " + describe(g));
      }
    }
  });
  // obstructions: every asteroidal triple and claw of the connected graphs up to 6 vertices
  auto six = connected_graphs_up_to(6);
  std::size_t triples = 0, claws = 0;
  auto parts = parallel_map(six.size(), o.jobs, [&](std::size_t i) {
    const Graph& g = six[i];
    SuiteReport rep;
    std::size_t nt = 0, nc = 0;
    IntervalTable table(g, ConvexityKind::weakly_toll);
    auto no_extremes = [&](const VertexSet& s, const std::string& what) {
      ++rep.checked;
      auto h = hull(table, s).hull;
      if (!extreme_vertices(table, h).empty()) rep.fail("hull of " + what + " " + set_string(g, s) + " has extreme vertices on " + describe(g));
    };
    const auto n = g.order();
    for (Vertex x = 0; x < n; ++x)
      for (Vertex y = x + 1; y < n; ++y)
        for (Vertex z = y + 1; z < n; ++z) {
          AsteroidalTriple t{{x, y, z}, {}};
          bool ok = !g.adjacent(x, y) && !g.adjacent(x, z) && !g.adjacent(y, z);
          for (int k = 0; k < 3 && ok; ++k) {
            auto room = g.closed_neighborhood(t.vertices[k]).complement();
            t.paths[k] = shortest_path_within(g, room, t.vertices[(k + 1) % 3], t.vertices[(k + 2) % 3]);
            ok = !t.paths[k].empty();
          }
          if (!ok) continue;
          ++nt;
          no_extremes(VertexSet(n, {x, y, z}), "asteroidal triple");
        }
    for (Vertex c = 0; c < n; ++c) {
      const auto& nb = g.neighbor_list(c);
      for (std::size_t a = 0; a < nb.size(); ++a)
        for (std::size_t b = a + 1; b < nb.size(); ++b)
          for (std::size_t d = b + 1; d < nb.size(); ++d) {
            if (g.adjacent(nb[a], nb[b]) || g.adjacent(nb[a], nb[d]) || g.adjacent(nb[b], nb[d])) continue;
            ++nc;
            VertexSet s(n, {c, nb[a], nb[b], nb[d]});
            no_extremes(s, "claw");
          }
    }
    return std::pair{rep, std::pair{nt, nc}};
  });
  for (const auto& [rep, counts] : parts) {
    r.merge(rep);
    triples += counts.first;
    claws += counts.second;
  }
  r.info.push_back(std::to_string(small.size()) + " graphs for the convex-set lemma, " + std::to_string(triples) +
                   " asteroidal triples and " + std::to_string(claws) + " claws on up to 6 vertices");
  return r;
}

// ---------------------------------------------------------------- registry

using SuiteFn = std::function<SuiteReport(const SuiteOptions&)>;

inline const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r{
      {"oracle-equivalence", oracle_equivalence}, {"chain", chain}, {"geometry-dichotomy", geometry_dichotomy},
      {"trees", trees},                           {"prop7", prop7}, {"thm9", thm9},
      {"corollary10", corollary10},               {"paper-examples", paper_examples}, {"lemmas", lemmas},
  };
  return r;
}

inline std::vector<std::string> names() {
  std::vector<std::string> out;
  for (const auto& [n, f] : registry()) out.push_back(n);
  return out;
}

}  // namespace suites

/// Runs a named suite and times it; throws input_error on unknown names.
inline SuiteReport run_suite(std::string_view name, const SuiteOptions& opts = {}) {
  for (const auto& [n, f] : suites::registry())
    if (n == name) {
      const auto start = std::chrono::steady_clock::now();
      SuiteReport r = f(opts);
      r.name = n;
      r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      return r;
    }
  throw input_error("unknown suite '" + std::string(name) + "'");
}

}  // namespace wtc
