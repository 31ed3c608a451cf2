#pragma once

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "uzg/graph.hpp"
#include "uzg/ring.hpp"

namespace uzg {

inline std::vector<std::string> ring_vertex_names(const FiniteRing& r) {
  std::vector<std::string> names;
  names.reserve(r.order());
  for (Elem x = 0; x < r.order(); ++x) names.push_back(r.element_name(x));
  return names;
}

namespace detail {

inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out.push_back('\\');
    out.push_back(ch);
  }
  return out;
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out.push_back('"');
    out.push_back(ch);
  }
  out.push_back('"');
  return out;
}

}  // namespace detail

// Graphviz text: every vertex declared, then edges ascending; metadata as
// comment lines.
inline std::string to_dot(
    const Graph& g, const std::vector<std::string>& names = {},
    const std::vector<std::pair<std::string, std::string>>& meta = {}) {
  std::ostringstream os;
  os << "graph G {\n";
  for (const auto& kv : meta)
    os << "  // " << kv.first << ": " << kv.second << "\n";
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
    os << "  " << v;
    if (!names.empty())
      os << " [label=\"" << detail::dot_escape(names[v]) << "\"]";
    os << ";\n";
  }
  for (const auto& [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

// One edge per line, endpoints ascending; metadata as leading comments.
inline std::string to_edge_csv(
    const Graph& g, const std::vector<std::string>& names = {},
    const std::vector<std::pair<std::string, std::string>>& meta = {}) {
  std::ostringstream os;
  for (const auto& kv : meta)
    os << "# " << kv.first << ": " << kv.second << "\n";
  for (const auto& [u, v] : g.edges()) {
    if (names.empty())
      os << u << "," << v << "\n";
    else
      os << detail::csv_field(names[u]) << "," << detail::csv_field(names[v])
         << "\n";
  }
  return os.str();
}

inline nlohmann::ordered_json adjacency_json(
    const Graph& g, const std::vector<std::string>& names = {}) {
  nlohmann::ordered_json j;
  j["ring"] = g.label();
  j["vertex_count"] = g.vertex_count();
  j["edge_count"] = g.edge_count();
  if (!names.empty()) j["labels"] = names;
  nlohmann::ordered_json adj = nlohmann::ordered_json::array();
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v)
    adj.push_back(g.neighbors(v).to_vector());
  j["adjacency"] = adj;
  return j;
}

}  // namespace uzg
