#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "wtc/convexity.hpp"
#include "wtc/error.hpp"
#include "wtc/graph.hpp"
#include "wtc/interval_structure.hpp"
#include "wtc/io.hpp"
#include "wtc/oracle.hpp"
#include "wtc/parallel.hpp"

namespace wtc {

enum class Method { tree_theorem, prop7, prop8, thm9, corollary10, oracle };

inline std::string_view to_string(Method m) {
  switch (m) {
    case Method::tree_theorem: return "tree-theorem";
    case Method::prop7: return "prop7";
    case Method::prop8: return "prop8";
    case Method::thm9: return "thm9";
    case Method::corollary10: return "corollary10";
    case Method::oracle: return "oracle";
  }
  return "?";
}

/// Extreme vertices of the convex set V(G) under weakly toll convexity.
inline VertexSet ext(const Graph& g) { return extreme_vertices(g, g.vertices(), ConvexityKind::weakly_toll); }

// ---------------------------------------------------------------- twins

enum class TwinReading {
  any_twin,         // some simplicial vertex has a twin
  simplicial_pair,  // two simplicial vertices are twins
};

inline bool has_twin_simplicial(const Graph& g, TwinReading reading) {
  const auto tw = twins(g);
  const VertexSet simp = simplicial_vertices(g);
  for (Vertex s : simp) {
    VertexSet others = tw.of(s);
    others.erase(s);
    if (reading == TwinReading::simplicial_pair) others &= simp;
    if (!others.empty()) return true;
  }
  return false;
}

// ------------------------------------------------------- interval formula

/// How "|N(q) ∩ N(s)| is maximum" is quantified when choosing q for s.
enum class MaximalityReading {
  all_vertices,    // over every v != s
  end_simplicial,  // over the end simplicial candidates only
};

inline std::string_view to_string(MaximalityReading r) {
  return r == MaximalityReading::all_vertices ? "all-vertices" : "end-simplicial";
}

inline MaximalityReading parse_reading(std::string_view s) {
  if (s == "all-vertices") return MaximalityReading::all_vertices;
  if (s == "end-simplicial") return MaximalityReading::end_simplicial;
  throw input_error("unknown maximality reading '" + std::string(s) + "'");
}

struct StructuralOptions {
  MaximalityReading reading = MaximalityReading::all_vertices;
  bool require_split = true;      // look for q only when G - N[s] is disconnected
  bool allow_twin_pairs = false;  // let s1, s2 be twins in a non-complete graph
  bool union_count = true;        // |T(s1) ∪ T(s2) ∪ S1 ∪ S2| instead of the plain sum
  bool best_tied_pair = true;     // smallest answer over tied pairs, not the first by label
};

struct PairEvaluation {
  Vertex s1 = 0, s2 = 0;
  VertexSet base;                  // T(s1) ∪ T(s2)
  std::array<bool, 2> split{};     // G - N[s_i] disconnected
  std::array<std::optional<Vertex>, 2> q;
  VertexSet set;                   // base plus the chosen q's
  std::size_t total = 0;           // count under the chosen counting rule
  std::string case_name;

  std::size_t count() const { return total; }
};

struct StructuralResult {
  std::size_t wtn = 0, wth = 0;
  VertexSet wtn_set, wth_set;
  Method method = Method::prop8;
  std::vector<PairEvaluation> pairs;  // all pairs minimising |T(s1) ∪ T(s2)|, in label order
  std::size_t chosen = 0;
  std::vector<std::string> trace;
};

namespace detail {

inline bool label_less(const Graph& g, Vertex a, Vertex b) { return g.label(a) < g.label(b); }

inline std::size_t common_neighbours(const Graph& g, Vertex a, Vertex b) {
  return (g.neighbors(a) & g.neighbors(b)).count();
}

inline std::optional<Vertex> choose_q(const Graph& g, Vertex s, const VertexSet& end_simplicial, const TwinPartition& tw,
                                      const VertexSet& already, MaximalityReading reading) {
  std::vector<Vertex> cands;
  for (Vertex q : end_simplicial)
    if (!tw.of(s).contains(q)) cands.push_back(q);
  if (cands.empty()) return std::nullopt;
  std::size_t best = 0;
  if (reading == MaximalityReading::all_vertices) {
    for (Vertex v = 0; v < g.order(); ++v)
      if (v != s) best = std::max(best, common_neighbours(g, v, s));
  } else {
    for (Vertex q : cands) best = std::max(best, common_neighbours(g, q, s));
  }
  std::optional<Vertex> pick;
  for (Vertex q : cands) {
    if (common_neighbours(g, q, s) < best) continue;
    // a q already in the set costs nothing; otherwise the smallest label
    const bool in = already.contains(q);
    if (!pick || (in && !already.contains(*pick)) ||
        (in == already.contains(*pick) && label_less(g, q, *pick)))
      pick = q;
  }
  return pick;
}

}  // namespace detail

/// wtn and wth of a connected interval graph from end simplicial pairs.
///
/// By default pairs are two end simplicial vertices that are not twins
/// (twins are allowed only when G is a single clique). Among pairs minimising
/// |T(s1) ∪ T(s2)|, each s_i whose G - N[s_i] is disconnected gets a
/// companion q_i; the weakly toll set is T(s1) ∪ T(s2) ∪ {q_1, q_2}.
/// The options switch each of these choices to the plain reading.
inline StructuralResult wtn_interval_structural(const Graph& g, const StructuralOptions& opts = {}) {
  if (g.order() < 2 || !is_connected(g)) throw contract_error("structural formula needs a connected graph, n >= 2");
  EndVertexIndex idx(g);  // throws for non-interval input
  const auto tw = twins(g);
  const VertexSet es = idx.end_simplicial_vertices();
  const bool single_clique = idx.cliques().size() == 1;

  std::vector<Vertex> ordered = es.members();
  std::sort(ordered.begin(), ordered.end(), [&](Vertex a, Vertex b) { return detail::label_less(g, a, b); });

  StructuralResult r;
  std::size_t best = g.order() + 1;
  for (std::size_t i = 0; i < ordered.size(); ++i)
    for (std::size_t j = i + 1; j < ordered.size(); ++j) {
      const Vertex a = ordered[i], b = ordered[j];
      if (tw.twins(a, b) && !single_clique && !opts.allow_twin_pairs) continue;
      VertexSet base = tw.of(a) | tw.of(b);
      if (base.count() > best) continue;
      if (base.count() < best) {
        best = base.count();
        r.pairs.clear();
      }
      PairEvaluation p;
      p.s1 = a;
      p.s2 = b;
      p.base = std::move(base);
      r.pairs.push_back(std::move(p));
    }
  if (r.pairs.empty()) throw contract_error("internal: no end simplicial pair");

  for (auto& p : r.pairs) {
    p.set = p.base;
    p.total = p.base.count();
    const std::array<Vertex, 2> s{p.s1, p.s2};
    for (int i = 0; i < 2; ++i) {
      p.split[i] = components_within(g, g.closed_neighborhood(s[i]).complement()).size() > 1;
      if (opts.require_split && !p.split[i]) continue;
      p.q[i] = detail::choose_q(g, s[i], es, tw, p.set, opts.reading);
      if (!p.q[i]) continue;
      if (opts.union_count) p.total += !p.set.contains(*p.q[i]);
      else ++p.total;
      p.set.insert(*p.q[i]);
    }
    p.case_name = !p.split[0] && !p.split[1] ? "prop8"
                  : p.split[0] && p.split[1] ? "thm9-case2"
                                             : "thm9-case1";
  }
  if (opts.best_tied_pair)
    for (std::size_t i = 1; i < r.pairs.size(); ++i)
      if (r.pairs[i].count() < r.pairs[r.chosen].count()) r.chosen = i;

  const auto& c = r.pairs[r.chosen];
  r.wtn = c.count();
  r.wtn_set = c.set;
  r.wth = c.base.count();
  r.wth_set = c.base;
  r.method = c.case_name == "prop8"                                             ? Method::prop8
             : !has_twin_simplicial(g, TwinReading::simplicial_pair) ? Method::thm9
                                                                              : Method::corollary10;

  r.trace.push_back(std::to_string(r.pairs.size()) + " end simplicial pair(s) with |T(s1) ∪ T(s2)| = " +
                    std::to_string(best));
  r.trace.push_back("chosen pair (" + g.label(c.s1) + ", " + g.label(c.s2) + ")");
  for (int i = 0; i < 2; ++i) {
    const Vertex s = i == 0 ? c.s1 : c.s2;
    std::string line = "G - N[" + g.label(s) + "] " + (c.split[i] ? "disconnected" : "connected");
    if (c.q[i]) line += ", companion " + g.label(*c.q[i]);
    r.trace.push_back(line);
  }
  r.trace.push_back("case " + c.case_name + ", method " + std::string(to_string(r.method)));
  return r;
}

// ---------------------------------------------------------- dispatch

struct InvariantEntry {
  std::size_t value = 0;
  Method method = Method::oracle;
  VertexSet witness;
  bool validated = false;  // witness re-checked against the interval / hull code
};

struct InvariantReport {
  InvariantEntry wtn, wth;
  VertexSet ext;
  std::vector<std::string> trace;
  std::vector<std::string> notes;  // discrepancies and fallbacks
};

struct InvariantOptions {
  oracle::Budget budget;
  StructuralOptions structural;
};

namespace detail {

inline void check_domain(const Graph& g) {
  if (g.order() < 2) throw contract_error("wtn/wth need a graph with at least two vertices");
  if (!is_connected(g)) throw contract_error("wtn/wth need a connected graph");
}

/// Theorem-based answer without any oracle, or nullopt outside the covered
/// classes.
inline std::optional<InvariantReport> structural_report(const Graph& g, const StructuralOptions& opts) {
  InvariantReport r;
  r.ext = ext(g);
  if (is_tree(g)) {
    VertexSet leaves(g.order());
    for (Vertex v = 0; v < g.order() && leaves.count() < 2; ++v)
      if (g.degree(v) <= 1) leaves.insert(v);
    r.wtn = r.wth = {2, Method::tree_theorem, leaves, false};
    r.trace.push_back("tree: two leaves");
    return r;
  }
  auto proper = is_proper_interval(g);
  if (proper.member) {
    r.wtn = r.wth = {r.ext.count(), Method::prop7, r.ext, false};
    r.trace.push_back("proper interval: |Ext(G)| = " + std::to_string(r.ext.count()));
    return r;
  }
  if (std::holds_alternative<Claw>(proper.obstruction)) {
    auto s = wtn_interval_structural(g, opts);
    r.wtn = {s.wtn, s.method, s.wtn_set, false};
    r.wth = {s.wth, s.method, s.wth_set, false};
    r.trace = std::move(s.trace);
    return r;
  }
  return std::nullopt;
}

inline InvariantEntry oracle_entry(oracle::Optimum o) { return {o.count, Method::oracle, std::move(o.set), true}; }

inline void validate(const Graph& g, InvariantReport& r) {
  IntervalTable table(g, ConvexityKind::weakly_toll);
  const VertexSet all = g.vertices();
  r.wtn.validated = r.wtn.witness.count() == r.wtn.value && table.of_set(r.wtn.witness) == all;
  r.wth.validated = r.wth.witness.count() == r.wth.value && hull(table, r.wth.witness).hull == all;
}

}  // namespace detail

/// wtn, wth and Ext(G): tree theorem, then proper interval (|Ext|), then the
/// interval formula, else the oracle. Every witness is re-validated; a failed
/// witness is noted and replaced by the oracle answer when within budget.
inline InvariantReport invariants(const Graph& g, const InvariantOptions& opts = {}) {
  detail::check_domain(g);
  auto structural = detail::structural_report(g, opts.structural);
  if (!structural) {
    InvariantReport r;
    r.ext = ext(g);
    r.trace.push_back("no structural theorem applies");
    r.wtn = detail::oracle_entry(oracle::wtn(g, opts.budget));
    r.wth = detail::oracle_entry(oracle::wth(g, opts.budget));
    return r;
  }
  InvariantReport r = std::move(*structural);
  detail::validate(g, r);
  const bool fits = g.order() <= opts.budget.max_n;
  if (!r.wtn.validated) {
    r.notes.push_back("wtn witness from " + std::string(to_string(r.wtn.method)) + " is not a weakly toll set");
    if (fits) r.wtn = detail::oracle_entry(oracle::wtn(g, opts.budget));
  }
  if (!r.wth.validated) {
    r.notes.push_back("wth witness from " + std::string(to_string(r.wth.method)) + " is not a hull set");
    if (fits) r.wth = detail::oracle_entry(oracle::wth(g, opts.budget));
  }
  if (r.wth.value > r.wtn.value) r.notes.push_back("wth exceeds wtn");
  return r;
}

inline InvariantEntry wtn(const Graph& g, const InvariantOptions& opts = {}) { return invariants(g, opts).wtn; }
inline InvariantEntry wth(const Graph& g, const InvariantOptions& opts = {}) { return invariants(g, opts).wth; }

inline nlohmann::json to_json(const Graph& g, const InvariantEntry& e) {
  return {{"value", e.value}, {"method", to_string(e.method)}, {"witness", g.labels_of(e.witness)},
          {"validated", e.validated}};
}

inline nlohmann::json to_json(const Graph& g, const InvariantReport& r) {
  return {{"wtn", to_json(g, r.wtn)}, {"wth", to_json(g, r.wth)}, {"ext", g.labels_of(r.ext)},
          {"trace", r.trace},         {"notes", r.notes}};
}

// ------------------------------------------------------ convex geometry

enum class GeometryMode { structural, bruteforce, both };

inline GeometryMode parse_geometry_mode(std::string_view s) {
  if (s == "structural") return GeometryMode::structural;
  if (s == "bruteforce") return GeometryMode::bruteforce;
  if (s == "both") return GeometryMode::both;
  throw input_error("unknown geometry mode '" + std::string(s) + "'");
}

struct GeometryReport {
  std::optional<bool> structural;  // proper interval recognition
  std::optional<bool> bruteforce;  // Minkowski-Krein-Milman over all convex sets
  std::optional<RecognitionCertificate> certificate;
  std::optional<VertexSet> counterexample;

  bool agree() const { return !structural || !bruteforce || *structural == *bruteforce; }
  bool verdict() const { return structural ? *structural : bruteforce.value_or(false); }
};

inline GeometryReport is_convex_geometry(const Graph& g, GeometryMode mode, std::size_t max_n = 12) {
  GeometryReport r;
  if (mode != GeometryMode::bruteforce) {
    r.certificate = is_proper_interval(g);
    r.structural = r.certificate->member;
  }
  if (mode != GeometryMode::structural) {
    auto b = is_convex_geometry_bruteforce(g, ConvexityKind::weakly_toll, max_n);
    r.bruteforce = b.convex_geometry;
    r.counterexample = b.counterexample;
  }
  return r;
}

// ------------------------------------------------------ cross validation

struct CrossRecord {
  std::string name;
  Graph graph;
  oracle::Optimum oracle_wtn, oracle_wth;
  std::vector<std::pair<MaximalityReading, InvariantReport>> structural;  // empty when no theorem applies
  std::array<bool, 2> twin_simplicial{};  // any_twin, simplicial_pair
  std::vector<std::string> discrepancies;
};

struct CrossValidation {
  std::vector<CrossRecord> records;
  std::size_t discrepancies = 0;  // records with at least one
  std::size_t compared = 0;       // records with a structural answer
};

struct CrossOptions {
  oracle::Budget budget;
  StructuralOptions structural;  // reading is overridden per entry of `readings`
  unsigned jobs = 1;
  std::vector<MaximalityReading> readings{MaximalityReading::all_vertices, MaximalityReading::end_simplicial};
};

struct NamedGraph {
  std::string name;
  Graph graph;
};

inline CrossRecord cross_validate_one(const NamedGraph& item, const CrossOptions& opts) {
  const Graph& g = item.graph;
  CrossRecord rec{item.name, g, oracle::wtn(g, opts.budget), oracle::wth(g, opts.budget), {}, {}, {}};
  rec.twin_simplicial = {has_twin_simplicial(g, TwinReading::any_twin),
                         has_twin_simplicial(g, TwinReading::simplicial_pair)};
  for (auto reading : opts.readings) {
    StructuralOptions so = opts.structural;
    so.reading = reading;
    auto s = detail::structural_report(g, so);
    if (!s) break;
    detail::validate(g, *s);
    const std::string tag = std::string(to_string(reading)) + ": ";
    if (s->wtn.value != rec.oracle_wtn.count)
      rec.discrepancies.push_back(tag + "wtn " + std::to_string(s->wtn.value) + " (" +
                                  std::string(to_string(s->wtn.method)) + ") vs oracle " +
                                  std::to_string(rec.oracle_wtn.count));
    if (s->wth.value != rec.oracle_wth.count)
      rec.discrepancies.push_back(tag + "wth " + std::to_string(s->wth.value) + " (" +
                                  std::string(to_string(s->wth.method)) + ") vs oracle " +
                                  std::to_string(rec.oracle_wth.count));
    rec.structural.emplace_back(reading, std::move(*s));
  }
  return rec;
}

/// Structural answers (each reading) against the oracle for every graph.
/// Records come back in corpus order regardless of `jobs`.
inline CrossValidation cross_validate(const std::vector<NamedGraph>& corpus, const CrossOptions& opts = {}) {
  CrossValidation out;
  out.records = parallel_map(corpus.size(), opts.jobs, [&](std::size_t i) { return cross_validate_one(corpus[i], opts); });
  for (const auto& r : out.records) {
    out.compared += !r.structural.empty();
    out.discrepancies += !r.discrepancies.empty();
  }
  return out;
}

/// One JSON object per record, carrying everything needed to replay it.
inline nlohmann::json to_json(const CrossRecord& r) {
  const Graph& g = r.graph;
  nlohmann::json structural = nlohmann::json::object();
  for (const auto& [reading, rep] : r.structural) structural[std::string(to_string(reading))] = to_json(g, rep);
  return {{"name", r.name},
          {"graph", to_json(g)},
          {"oracle",
           {{"wtn", r.oracle_wtn.count},
            {"wtn_set", g.labels_of(r.oracle_wtn.set)},
            {"wth", r.oracle_wth.count},
            {"wth_set", g.labels_of(r.oracle_wth.set)}}},
          {"structural", structural},
          {"twin_simplicial", {{"any-twin", r.twin_simplicial[0]}, {"simplicial-pair", r.twin_simplicial[1]}}},
          {"discrepancies", r.discrepancies}};
}

}  // namespace wtc
