#pragma once

#include <cctype>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "wtc/error.hpp"
#include "wtc/graph.hpp"

namespace wtc {

enum class GraphFormat { edge_list, json };

namespace detail {

inline bool valid_label(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (std::isspace(static_cast<unsigned char>(c)) || c == '#' || c == ',') return false;
  return true;
}

inline Graph parse_edge_list(std::string_view text) {
  GraphBuilder b;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string line(text.substr(pos, eol - pos));
    pos = eol + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);

    std::istringstream in(line);
    std::vector<std::string> tokens;
    for (std::string t; in >> t;) tokens.push_back(t);
    if (tokens.empty()) continue;
    for (const auto& t : tokens)
      if (!valid_label(t)) throw input_error("invalid label '" + t + "'", line_no);
    try {
      if (tokens.size() == 1)
        b.add_vertex(tokens[0]);
      else if (tokens.size() == 2)
        b.add_edge(tokens[0], tokens[1]);
      else
        throw input_error("expected one or two labels, got " + std::to_string(tokens.size()));
    } catch (const input_error& e) {
      throw input_error(e.what(), line_no);
    }
  }
  return b.build();
}

inline Graph parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1;
    for (std::size_t i = 0; i < e.byte && i < text.size(); ++i)
      if (text[i] == '\n') ++line;
    throw input_error("malformed JSON", line);
  }
  if (!doc.is_object()) throw input_error("JSON graph must be an object");

  GraphBuilder b;
  auto label_at = [](const nlohmann::json& j, const std::string& where) {
    if (!j.is_string()) throw input_error(where + ": label must be a string");
    auto s = j.get<std::string>();
    if (!valid_label(s)) throw input_error(where + ": invalid label '" + s + "'");
    return s;
  };
  if (doc.contains("vertices")) {
    if (!doc["vertices"].is_array()) throw input_error("\"vertices\" must be an array");
    std::size_t i = 0;
    for (const auto& v : doc["vertices"]) b.add_vertex(label_at(v, "vertices[" + std::to_string(i++) + "]"));
  }
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) throw input_error("\"edges\" must be an array");
    std::size_t i = 0;
    for (const auto& e : doc["edges"]) {
      std::string where = "edges[" + std::to_string(i++) + "]";
      if (!e.is_array() || e.size() != 2) throw input_error(where + ": edge must be a 2-array");
      try {
        b.add_edge(label_at(e[0], where), label_at(e[1], where));
      } catch (const input_error& err) {
        throw input_error(where + ": " + err.what());
      }
    }
  }
  return b.build();
}

}  // namespace detail

/// Edge list: one "a b" per line, a lone label declares a vertex, '#' starts a
/// comment. JSON: {"vertices": [...], "edges": [[a, b], ...]}. Ids follow the
/// order in which labels first appear.
inline Graph parse_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::json ? detail::parse_json(text) : detail::parse_edge_list(text);
}

/// Canonical edge-list text: isolated vertices first as single labels, then
/// edges in id order.
inline std::string to_edge_list(const Graph& g) {
  std::string out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) == 0) out += g.label(v) + "\n";
  for (auto [u, v] : g.edges()) out += g.label(u) + " " + g.label(v) + "\n";
  return out;
}

inline nlohmann::json to_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : g.edges()) edges.push_back({g.label(u), g.label(v)});
  return {{"vertices", g.labels()}, {"edges", std::move(edges)}};
}

inline nlohmann::json to_json(const Graph& g, const VertexSet& s) { return g.labels_of(s); }

}  // namespace wtc
