// wtc: command-line front end for the weakly toll convexity toolkit.
//
// Exit codes: 0 ok, 1 a verification found a violation or discrepancy,
// 2 input or usage error, 3 resource budget exceeded, 4 internal error.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wtc/convexity.hpp"
#include "wtc/generators.hpp"
#include "wtc/interval_structure.hpp"
#include "wtc/invariants.hpp"
#include "wtc/io.hpp"
#include "wtc/suites.hpp"

namespace {

using namespace wtc;
using nlohmann::json;

enum Exit : int { kOk = 0, kViolation = 1, kUsage = 2, kResource = 3, kInternal = 4 };

struct Common {
  std::string input;
  std::string graph;
  std::string format = "auto";
  std::string kind = "weakly-toll";
  bool json = false;
  std::uint64_t seed = 1;
  std::size_t max_n = 0;  // 0: environment or built-in default
};

std::size_t env_size(const char* name, std::size_t fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  try {
    std::size_t used = 0;
    auto x = std::stoull(v, &used);
    if (used != std::string(v).size() || x == 0) throw std::invalid_argument(v);
    return static_cast<std::size_t>(x);
  } catch (const std::exception&) {
    throw input_error(std::string(name) + " must be a positive integer");
  }
}

oracle::Budget budget(const Common& c) {
  oracle::Budget b;
  b.max_n = c.max_n ? c.max_n : env_size("WTC_MAX_N", b.max_n);
  b.max_subsets = env_size("WTC_MAX_SUBSETS", b.max_subsets);
  return b;
}

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> out;
  std::stringstream in(s);
  for (std::string tok; std::getline(in, tok, ',');) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw input_error("bad generator parameter '" + tok + "'");
    }
  }
  return out;
}

// "name" or "name:p1,p2"
Graph from_spec(const std::string& spec, std::uint64_t seed) {
  auto colon = spec.find(':');
  std::vector<int> params;
  if (colon != std::string::npos) params = parse_ints(spec.substr(colon + 1));
  return generate_named(spec.substr(0, colon), params, seed);
}

Graph load(const Common& c) {
  if (!c.graph.empty()) return from_spec(c.graph, c.seed);
  std::string text;
  if (c.input.empty() || c.input == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(c.input);
    if (!in) throw input_error("cannot read '" + c.input + "'");
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  GraphFormat f = GraphFormat::edge_list;
  if (c.format == "json") f = GraphFormat::json;
  else if (c.format == "auto") {
    auto p = text.find_first_not_of(" \t\r\n");
    if (p != std::string::npos && text[p] == '{') f = GraphFormat::json;
  }
  return parse_graph(text, f);
}

VertexSet parse_set(const Graph& g, const std::string& s) {
  VertexSet out = g.empty_set();
  std::stringstream in(s);
  for (std::string tok; std::getline(in, tok, ',');) {
    if (tok.empty()) throw input_error("empty label in set '" + s + "'");
    out.insert(g.vertex(tok));
  }
  if (out.empty()) throw input_error("empty vertex set");
  return out;
}

std::string show(const Graph& g, const VertexSet& s) {
  std::string out;
  for (Vertex v : s) out += (out.empty() ? "" : ",") + g.label(v);
  return "{" + out + "}";
}

std::string show(const Graph& g, const std::vector<Vertex>& walk) {
  std::string out;
  for (Vertex v : walk) out += (out.empty() ? "" : ",") + g.label(v);
  return out;
}

void emit(const json& j) { std::cout << j.dump() << '\n'; }

// ------------------------------------------------------------ commands

int cmd_interval(const Common& c, const std::string& a, const std::string& b, bool witness) {
  Graph g = load(c);
  const auto kind = parse_kind(c.kind);
  const Vertex u = g.vertex(a), v = g.vertex(b);
  auto r = interval_detail(g, u, v, kind);
  const bool walks = witness && (kind == ConvexityKind::toll || kind == ConvexityKind::weakly_toll);
  const WalkKind wk = kind == ConvexityKind::toll ? WalkKind::tolled : WalkKind::weakly_toll;
  json w = json::object();
  if (walks)
    for (Vertex x : r.members)
      if (x != u && x != v)
        if (auto walk = witness_walk(g, u, v, x, wk)) w[g.label(x)] = labels_json(g, walk->walk);
  if (c.json) {
    json j{{"kind", to_string(kind)}, {"u", a}, {"v", b}, {"interval", g.labels_of(r.members)}, {"separated", r.separated}};
    if (walks) j["witnesses"] = w;
    emit(j);
  } else {
    std::cout << show(g, r.members) << (r.separated ? "  (different components)" : "") << '\n';
    for (auto& [x, walk] : w.items()) {
      std::string s;
      for (auto& y : walk) s += (s.empty() ? "" : ",") + y.get<std::string>();
      std::cout << "  " << x << ": " << s << '\n';
    }
  }
  return kOk;
}

int cmd_hull(const Common& c, const std::string& set, bool trace) {
  Graph g = load(c);
  const auto kind = parse_kind(c.kind);
  auto t = hull(g, parse_set(g, set), kind);
  if (c.json) {
    json j{{"kind", to_string(kind)}, {"hull", g.labels_of(t.hull)}};
    if (trace) {
      json levels = json::array();
      for (const auto& l : t.levels) levels.push_back(g.labels_of(l));
      j["levels"] = levels;
    }
    emit(j);
  } else {
    std::cout << show(g, t.hull) << '\n';
    if (trace)
      for (std::size_t i = 0; i < t.levels.size(); ++i)
        std::cout << "  level " << i << ": " << show(g, t.levels[i]) << '\n';
  }
  return kOk;
}

int cmd_convex(const Common& c, const std::string& set) {
  Graph g = load(c);
  const auto kind = parse_kind(c.kind);
  auto check = is_convex(g, parse_set(g, set), kind);
  std::optional<WalkWitness> walk;
  if (!check && (kind == ConvexityKind::toll || kind == ConvexityKind::weakly_toll)) {
    const auto& v = *check.violation;
    walk = witness_walk(g, v.u, v.v, v.escaping, kind == ConvexityKind::toll ? WalkKind::tolled : WalkKind::weakly_toll);
  }
  if (c.json) {
    json j{{"kind", to_string(kind)}, {"convex", check.convex}};
    if (!check) {
      const auto& v = *check.violation;
      j["violation"] = {{"u", g.label(v.u)}, {"v", g.label(v.v)}, {"escaping", g.label(v.escaping)}};
      if (walk) j["violation"]["walk"] = labels_json(g, walk->walk);
    }
    emit(j);
  } else if (check) {
    std::cout << "convex\n";
  } else {
    const auto& v = *check.violation;
    std::cout << "not convex: " << g.label(v.escaping) << " lies in the interval of " << g.label(v.u) << " and "
              << g.label(v.v) << '\n';
    if (walk) std::cout << "  walk: " << show(g, walk->walk) << '\n';
  }
  return kOk;
}

int cmd_extreme(const Common& c, const std::string& set) {
  Graph g = load(c);
  const auto kind = parse_kind(c.kind);
  auto e = extreme_vertices(g, parse_set(g, set), kind);
  if (c.json) emit({{"kind", to_string(kind)}, {"extreme", g.labels_of(e)}});
  else std::cout << show(g, e) << '\n';
  return kOk;
}

int cmd_invariant(const Common& c, bool want_wtn, bool force_oracle, const std::string& reading, bool trace) {
  Graph g = load(c);
  InvariantOptions opts{budget(c), {}};
  opts.structural.reading = parse_reading(reading);
  InvariantEntry e;
  InvariantReport r;
  if (force_oracle) {
    auto o = want_wtn ? oracle::wtn(g, opts.budget) : oracle::wth(g, opts.budget);
    e = {o.count, Method::oracle, o.set, true};
  } else {
    r = invariants(g, opts);
    e = want_wtn ? r.wtn : r.wth;
  }
  const char* name = want_wtn ? "wtn" : "wth";
  if (c.json) {
    json j = to_json(g, e);
    j["invariant"] = name;
    if (trace) j["trace"] = r.trace;
    if (!r.notes.empty()) j["notes"] = r.notes;
    emit(j);
  } else {
    std::cout << name << " = " << e.value << "  (" << to_string(e.method) << ")\n";
    std::cout << "witness: " << show(g, e.witness) << (e.validated ? "" : "  (not validated)") << '\n';
    if (trace)
      for (const auto& t : r.trace) std::cout << "  " << t << '\n';
    for (const auto& n : r.notes) std::cout << "note: " << n << '\n';
  }
  return kOk;
}

int cmd_recognize(const Common& c, const std::string& cls) {
  Graph g = load(c);
  auto cert = recognize(g, parse_graph_class(cls));
  if (auto d = certificate_defect(g, cert)) throw contract_error("certificate does not validate: " + *d);
  if (c.json) {
    emit(to_json(g, cert));
    return kOk;
  }
  std::cout << to_string(cert.target) << ": " << (cert.member ? "yes" : "no") << '\n';
  if (cert.clique_path) {
    std::cout << "clique path:";
    for (const auto& q : cert.clique_path->cliques) std::cout << ' ' << show(g, q);
    std::cout << '\n';
  }
  if (cert.model) {
    std::cout << "model:";
    for (Vertex v = 0; v < g.order(); ++v)
      std::cout << ' ' << g.label(v) << "=[" << cert.model->intervals[v].left << ',' << cert.model->intervals[v].right
                << ']';
    std::cout << '\n';
  }
  if (!cert.member) std::cout << "obstruction: " << to_json(g, cert.obstruction).dump() << '\n';
  return kOk;
}

int cmd_geometry(const Common& c, const std::string& mode) {
  Graph g = load(c);
  auto r = is_convex_geometry(g, parse_geometry_mode(mode), budget(c).max_n);
  auto yn = [](std::optional<bool> b) -> json { return b ? json(*b) : json(nullptr); };
  if (c.json) {
    json j{{"convex_geometry", r.verdict()}, {"structural", yn(r.structural)}, {"bruteforce", yn(r.bruteforce)},
           {"agree", r.agree()}};
    if (r.counterexample) j["counterexample"] = g.labels_of(*r.counterexample);
    if (r.certificate && !r.certificate->member) j["obstruction"] = to_json(g, r.certificate->obstruction);
    emit(j);
  } else {
    std::cout << "convex geometry: " << (r.verdict() ? "yes" : "no");
    if (r.structural) std::cout << "  structural: " << (*r.structural ? "yes" : "no");
    if (r.bruteforce) std::cout << "  bruteforce: " << (*r.bruteforce ? "yes" : "no");
    std::cout << '\n';
    if (r.counterexample) std::cout << "convex set not spanned by its extremes: " << show(g, *r.counterexample) << '\n';
    if (!r.agree()) std::cout << "DISAGREEMENT between structural and brute-force verdicts\n";
  }
  return r.agree() ? kOk : kViolation;
}

int cmd_generate(const Common& c, const std::string& name, const std::vector<int>& params) {
  Graph g = generate_named(name, params, c.seed);
  if (c.json) emit(to_json(g));
  else std::cout << to_edge_list(g);
  return kOk;
}

int cmd_verify(const Common& c, const std::vector<std::string>& which, unsigned jobs) {
  SuiteOptions opts{jobs, c.seed, budget(c)};
  std::vector<std::string> names = which;
  if (names.size() == 1 && names[0] == "all") names = suites::names();
  bool clean = true;
  for (const auto& n : names) {
    auto r = run_suite(n, opts);
    const std::size_t disc = r.details.value("discrepancies", std::size_t{0});
    clean = clean && r.passed() && disc == 0;
    if (c.json) {
      emit(to_json(r));
      continue;
    }
    std::cout << (r.passed() ? "PASS " : "FAIL ") << r.name << ": " << r.checked << " checked, " << r.failed
              << " failed (" << std::fixed << std::setprecision(2) << r.seconds << " s)\n";
    for (const auto& i : r.info) std::cout << "  " << i << '\n';
    for (const auto& f : r.failures) std::cout << "  - " << f << '\n';
  }
  return clean ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weakly toll convexity toolkit"};
  app.require_subcommand(1);
  Common c;

  auto common = [&](CLI::App* sub, bool with_input = true) {
    if (with_input) {
      auto* in = sub->add_option("-i,--input", c.input, "graph file, '-' for standard input (default)");
      auto* gen = sub->add_option("-g,--graph", c.graph, "generated graph, e.g. fig5_1 or path:6");
      in->excludes(gen);
      sub->add_option("--format", c.format, "input format")->check(CLI::IsMember({"auto", "edge-list", "json"}));
      sub->add_option("--max-n", c.max_n, "oracle vertex bound (default from WTC_MAX_N, else 12)");
    }
    sub->add_flag("--json", c.json, "machine-readable output");
    sub->add_option("--seed", c.seed, "seed for random generators");
  };
  auto kind_opt = [&](CLI::App* sub) {
    sub->add_option("-k,--kind", c.kind, "convexity")
        ->check(CLI::IsMember({"geodesic", "monophonic", "toll", "weakly-toll", "weakly_toll"}));
  };

  std::string a, b, set, cls = "interval", mode = "both", reading = "all-vertices", gen_name;
  bool trace = false, witness = false, force_oracle = false;
  std::vector<int> params;
  std::vector<std::string> suite_names;
  unsigned jobs = 1;

  auto* interval = app.add_subcommand("interval", "interval between two vertices");
  common(interval);
  kind_opt(interval);
  interval->add_option("u", a)->required();
  interval->add_option("v", b)->required();
  interval->add_flag("--witness", witness, "print a walk for every member");

  auto* hull_cmd = app.add_subcommand("hull", "convex hull of a vertex set");
  common(hull_cmd);
  kind_opt(hull_cmd);
  hull_cmd->add_option("set", set, "comma-separated labels")->required();
  hull_cmd->add_flag("--trace", trace, "print the iteration levels");

  auto* convex = app.add_subcommand("convex", "is a vertex set convex");
  common(convex);
  kind_opt(convex);
  convex->add_option("set", set)->required();

  auto* extreme = app.add_subcommand("extreme", "extreme vertices of a convex set");
  common(extreme);
  kind_opt(extreme);
  extreme->add_option("set", set)->required();

  CLI::App* inv[2];
  for (int i = 0; i < 2; ++i) {
    inv[i] = app.add_subcommand(i == 0 ? "wtn" : "wth", i == 0 ? "weakly toll number" : "weakly toll hull number");
    common(inv[i]);
    inv[i]->add_flag("--oracle", force_oracle, "exhaustive search instead of the structural theorems");
    inv[i]->add_option("--reading", reading, "maximality reading for the interval formula")
        ->check(CLI::IsMember({"all-vertices", "end-simplicial"}));
    inv[i]->add_flag("--trace", trace, "print how the answer was obtained");
  }

  auto* recog = app.add_subcommand("recognize", "class membership with a certificate");
  common(recog);
  recog->add_option("--class", cls)->check(CLI::IsMember({"interval", "proper-interval", "chordal"}));

  auto* geometry = app.add_subcommand("geometry", "is the weakly toll convexity a convex geometry");
  common(geometry);
  geometry->add_option("--mode", mode)->check(CLI::IsMember({"structural", "bruteforce", "both"}));

  auto* generate = app.add_subcommand("generate", "print a named graph");
  common(generate, false);
  generate->add_option("name", gen_name)->required()->check(CLI::IsMember(named_generators()));
  generate->add_option("params", params, "integer parameters");

  auto* verify = app.add_subcommand("verify", "run property suites");
  common(verify, false);
  std::vector<std::string> allowed = suites::names();
  allowed.push_back("all");
  verify->add_option("suite", suite_names)->required()->check(CLI::IsMember(allowed));
  verify->add_option("-j,--jobs", jobs, "worker threads (0: all cores)");
  verify->add_option("--max-n", c.max_n, "oracle vertex bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*interval) return cmd_interval(c, a, b, witness);
    if (*hull_cmd) return cmd_hull(c, set, trace);
    if (*convex) return cmd_convex(c, set);
    if (*extreme) return cmd_extreme(c, set);
    if (*inv[0]) return cmd_invariant(c, true, force_oracle, reading, trace);
    if (*inv[1]) return cmd_invariant(c, false, force_oracle, reading, trace);
    if (*recog) return cmd_recognize(c, cls);
    if (*geometry) return cmd_geometry(c, mode);
    if (*generate) return cmd_generate(c, gen_name, params);
    if (*verify) return cmd_verify(c, suite_names, jobs);
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const contract_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const resource_error& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kResource;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}
