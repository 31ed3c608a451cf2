#pragma once

#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "uzg/facts.hpp"
#include "uzg/invariants.hpp"
#include "uzg/ring.hpp"
#include "uzg/theorems.hpp"

namespace uzg {

inline const char* to_string(RingKind k) {
  switch (k) {
    case RingKind::Modular:
      return "zn";
    case RingKind::Product:
      return "prod";
    case RingKind::PolyQuotient:
      return "polyq";
    default:
      return "table";
  }
}

namespace detail {

inline nlohmann::ordered_json json_opt(const std::optional<std::uint32_t>& v) {
  if (v) return *v;
  return nullptr;
}

inline std::string csv_opt(const std::optional<std::uint32_t>& v) {
  return v ? std::to_string(*v) : std::string();
}

inline std::string md_opt(const std::optional<std::uint32_t>& v) {
  return v ? std::to_string(*v) : std::string("-");
}

inline std::string md_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '|') out += "\\|";
    else if (ch == '\n') out += ' ';
    else out += ch;
  }
  return out;
}

}  // namespace detail

inline nlohmann::ordered_json facts_json(const FiniteRing& r,
                                         const RingFacts& f) {
  nlohmann::ordered_json j;
  j["ring"] = r.label();
  j["kind"] = to_string(r.kind());
  j["order"] = r.order();
  j["zero"] = r.zero();
  j["one"] = r.one();
  j["unit_count"] = f.units.count();
  j["zero_divisor_count"] = f.zero_divisors.count();
  j["units"] = f.units.to_vector();
  j["zero_divisors"] = f.zero_divisors.to_vector();
  nlohmann::ordered_json ideals = nlohmann::ordered_json::array();
  for (const auto& idl : f.ideals) {
    nlohmann::ordered_json ji;
    ji["size"] = idl.members.count();
    ji["members"] = idl.members.to_vector();
    ji["generators"] = idl.generators;
    ji["proper"] = idl.proper;
    ji["maximal"] = idl.maximal;
    ideals.push_back(std::move(ji));
  }
  j["ideals"] = std::move(ideals);
  j["maximal_ideal_count"] = f.maximal_idx.size();
  j["jacobson_radical"] = f.jacobson.to_vector();
  j["is_local"] = f.is_local;
  j["is_field"] = f.is_field;
  return j;
}

inline nlohmann::ordered_json invariants_json(const std::string& ring_label,
                                              const InvariantReport& inv) {
  nlohmann::ordered_json j;
  j["ring"] = ring_label;
  j["vertex_count"] = inv.vertex_count;
  j["edge_count"] = inv.edge_count;
  j["degree_sequence"] = inv.degree_sequence;
  j["max_degree"] = inv.max_degree;
  j["min_degree"] = inv.min_degree;
  j["regular"] = inv.regular;
  j["connected"] = inv.connected;
  j["diameter"] = detail::json_opt(inv.diameter);
  j["girth"] = detail::json_opt(inv.girth);
  j["bipartite"] = inv.bipartite;
  if (inv.bipartite) {
    j["bipartition"] = {{"left", inv.part_left.to_vector()},
                        {"right", inv.part_right.to_vector()}};
  } else {
    j["odd_cycle"] = inv.odd_cycle;
  }
  j["complete_bipartite"] = inv.complete_bipartite;
  j["star"] = inv.star;
  j["path_graph"] = inv.path_graph;
  j["cycle_graph"] = inv.cycle_graph;
  j["eulerian"] = inv.eulerian;
  j["planar"] = inv.planar;
  if (inv.hamiltonian == Tristate::Skipped) {
    j["hamiltonian"] = nullptr;
    j["hamiltonian_skipped"] = true;
  } else {
    j["hamiltonian"] = inv.hamiltonian == Tristate::Yes;
    j["hamiltonian_skipped"] = false;
  }
  j["clique_number"] = detail::json_opt(inv.clique_number);
  j["chromatic_number"] = detail::json_opt(inv.chromatic_number);
  j["independence_number"] = detail::json_opt(inv.independence_number);
  j["domination_number"] = detail::json_opt(inv.domination_number);
  j["has_c3"] = inv.has_c3;
  j["has_c4"] = inv.has_c4;
  return j;
}

inline std::string invariants_csv(const std::string& ring_label,
                                  const InvariantReport& inv) {
  std::ostringstream os;
  os << "ring,vertex_count,edge_count,max_degree,min_degree,regular,"
        "connected,diameter,girth,bipartite,complete_bipartite,star,"
        "path_graph,cycle_graph,eulerian,planar,hamiltonian,clique_number,"
        "chromatic_number,independence_number,domination_number,has_c3,"
        "has_c4\n";
  os << ring_label << ',' << inv.vertex_count << ',' << inv.edge_count << ','
     << inv.max_degree << ',' << inv.min_degree << ','
     << (inv.regular ? "true" : "false") << ','
     << (inv.connected ? "true" : "false") << ','
     << detail::csv_opt(inv.diameter) << ',' << detail::csv_opt(inv.girth)
     << ',' << (inv.bipartite ? "true" : "false") << ','
     << (inv.complete_bipartite ? "true" : "false") << ','
     << (inv.star ? "true" : "false") << ','
     << (inv.path_graph ? "true" : "false") << ','
     << (inv.cycle_graph ? "true" : "false") << ','
     << (inv.eulerian ? "true" : "false") << ','
     << (inv.planar ? "true" : "false") << ',' << to_string(inv.hamiltonian)
     << ',' << detail::csv_opt(inv.clique_number) << ','
     << detail::csv_opt(inv.chromatic_number) << ','
     << detail::csv_opt(inv.independence_number) << ','
     << detail::csv_opt(inv.domination_number) << ','
     << (inv.has_c3 ? "true" : "false") << ','
     << (inv.has_c4 ? "true" : "false") << '\n';
  return os.str();
}

inline std::string invariants_md(const std::string& ring_label,
                                 const InvariantReport& inv) {
  std::ostringstream os;
  os << "# Invariants for " << ring_label << "\n\n";
  os << "| invariant | value |\n|-----------|-------|\n";
  auto row = [&os](const std::string& k, const std::string& v) {
    os << "| " << k << " | " << v << " |\n";
  };
  auto b = [](bool v) { return std::string(v ? "true" : "false"); };
  row("vertices", std::to_string(inv.vertex_count));
  row("edges", std::to_string(inv.edge_count));
  row("max degree", std::to_string(inv.max_degree));
  row("min degree", std::to_string(inv.min_degree));
  row("regular", b(inv.regular));
  row("connected", b(inv.connected));
  row("diameter", detail::md_opt(inv.diameter));
  row("girth", detail::md_opt(inv.girth));
  row("bipartite", b(inv.bipartite));
  row("complete bipartite", b(inv.complete_bipartite));
  row("star", b(inv.star));
  row("path graph", b(inv.path_graph));
  row("cycle graph", b(inv.cycle_graph));
  row("eulerian", b(inv.eulerian));
  row("planar", b(inv.planar));
  row("hamiltonian", to_string(inv.hamiltonian));
  row("clique number", detail::md_opt(inv.clique_number));
  row("chromatic number", detail::md_opt(inv.chromatic_number));
  row("independence number", detail::md_opt(inv.independence_number));
  row("domination number", detail::md_opt(inv.domination_number));
  row("triangle", b(inv.has_c3));
  row("four-cycle", b(inv.has_c4));
  return os.str();
}

inline nlohmann::ordered_json theorem_check_json(const TheoremCheck& c) {
  nlohmann::ordered_json j;
  j["id"] = c.id;
  j["statement"] = c.statement;
  j["status"] = to_string(c.status);
  j["detail"] = c.detail;
  if (c.converse_holds)
    j["converse_holds"] = *c.converse_holds;
  else
    j["converse_holds"] = nullptr;
  return j;
}

inline nlohmann::ordered_json theorem_report_json(const TheoremReport& r) {
  nlohmann::ordered_json j;
  j["ring"] = r.ring_label;
  j["order"] = r.order;
  j["unit_count"] = r.unit_count;
  j["zero_divisor_count"] = r.zero_divisor_count;
  j["maximal_ideal_count"] = r.maximal_ideal_count;
  j["is_local"] = r.is_local;
  j["is_field"] = r.is_field;
  j["passed"] = r.passed;
  j["failed"] = r.failed;
  j["skipped"] = r.skipped;
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) checks.push_back(theorem_check_json(c));
  j["checks"] = std::move(checks);
  return j;
}

inline std::string theorem_report_md(const TheoremReport& r) {
  std::ostringstream os;
  os << "# Checks for " << r.ring_label << "\n\n";
  os << "- order " << r.order << ", units " << r.unit_count
     << ", zero divisors " << r.zero_divisor_count << ", maximal ideals "
     << r.maximal_ideal_count << ", local: " << (r.is_local ? "yes" : "no")
     << ", field: " << (r.is_field ? "yes" : "no") << "\n";
  os << "- passed " << r.passed << ", failed " << r.failed << ", skipped "
     << r.skipped << "\n\n";
  os << "| id | status | converse | note |\n"
     << "|----|--------|----------|------|\n";
  for (const auto& c : r.checks) {
    std::string conv =
        c.converse_holds ? (*c.converse_holds ? "holds" : "fails") : "";
    os << "| " << c.id << " | " << to_string(c.status) << " | " << conv
       << " | " << detail::md_escape(c.detail) << " |\n";
  }
  return os.str();
}

inline std::string theorem_report_csv(const TheoremReport& r) {
  std::ostringstream os;
  os << "ring,id,status,converse,detail\n";
  for (const auto& c : r.checks) {
    std::string detail = c.detail;
    for (auto& ch : detail)
      if (ch == ',' || ch == '\n') ch = ';';
    std::string conv =
        c.converse_holds ? (*c.converse_holds ? "holds" : "fails") : "";
    os << r.ring_label << ',' << c.id << ',' << to_string(c.status) << ','
       << conv << ',' << detail << '\n';
  }
  return os.str();
}

}  // namespace uzg
