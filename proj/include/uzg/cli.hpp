#pragma once

#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "uzg/errors.hpp"
#include "uzg/facts.hpp"
#include "uzg/graph_io.hpp"
#include "uzg/invariants.hpp"
#include "uzg/limits.hpp"
#include "uzg/ringspec.hpp"
#include "uzg/serialize.hpp"
#include "uzg/sweep.hpp"
#include "uzg/theorems.hpp"

namespace uzg {

inline constexpr const char kVersion[] = "0.1.0";

namespace detail {

struct CliState {
  std::string spec;
  std::string format;
  std::string out_path;
  std::string label_mode = "indices";
  bool meta = false;
  unsigned jobs = 1;
  Limits limits;
  std::string family;
  std::vector<std::string> family_args;
  std::string invocation;
};

inline void add_limit_flags(CLI::App* sub, Limits& limits) {
  sub->add_option("--limit-enumeration", limits.enumeration,
                  "largest ring order accepted for exhaustive work")
      ->envname("UZG_LIMIT_ENUMERATION")
      ->capture_default_str();
  sub->add_option("--limit-hamiltonian", limits.hamiltonian,
                  "largest vertex count for the hamiltonicity search")
      ->envname("UZG_LIMIT_HAMILTONIAN")
      ->capture_default_str();
  sub->add_option("--limit-clique", limits.clique,
                  "largest vertex count for the exact clique search")
      ->envname("UZG_LIMIT_CLIQUE")
      ->capture_default_str();
  sub->add_option("--limit-chromatic", limits.chromatic,
                  "largest vertex count for the exact coloring search")
      ->envname("UZG_LIMIT_CHROMATIC")
      ->capture_default_str();
  sub->add_option("--limit-independence", limits.independence,
                  "largest vertex count for the exact independence search")
      ->envname("UZG_LIMIT_INDEPENDENCE")
      ->capture_default_str();
  sub->add_option("--limit-domination", limits.domination,
                  "largest vertex count for the exact domination search")
      ->envname("UZG_LIMIT_DOMINATION")
      ->capture_default_str();
  sub->add_option("--limit-planarity-subdivision",
                  limits.planarity_subdivision,
                  "largest vertex count for the subdivision planarity route")
      ->envname("UZG_LIMIT_PLANARITY_SUBDIVISION")
      ->capture_default_str();
}

inline CLI::Option* add_format_flag(CLI::App* sub, std::string& format,
                                    std::vector<std::string> allowed) {
  return sub
      ->add_option("--format", format,
                   "output format (" + CLI::detail::join(allowed, "|") + ")")
      ->check(CLI::IsMember(allowed))
      ->envname("UZG_FORMAT");
}

inline void add_common_flags(CLI::App* sub, CliState& st) {
  sub->add_option("--out", st.out_path, "write the output to this file")
      ->envname("UZG_OUT");
  sub->add_flag("--meta", st.meta,
                "embed tool version, invocation, and limits in the output")
      ->envname("UZG_META");
}

inline std::vector<std::pair<std::string, std::string>> meta_pairs(
    const CliState& st) {
  std::ostringstream lim;
  lim << "enumeration=" << st.limits.enumeration
      << ",hamiltonian=" << st.limits.hamiltonian
      << ",clique=" << st.limits.clique
      << ",chromatic=" << st.limits.chromatic
      << ",independence=" << st.limits.independence
      << ",domination=" << st.limits.domination
      << ",planarity-subdivision=" << st.limits.planarity_subdivision;
  return {{"tool", std::string("uzg ") + kVersion},
          {"invocation", st.invocation},
          {"limits", lim.str()}};
}

inline nlohmann::ordered_json meta_json(const CliState& st) {
  nlohmann::ordered_json m;
  m["tool"] = "uzg";
  m["version"] = kVersion;
  m["invocation"] = st.invocation;
  nlohmann::ordered_json lim;
  lim["enumeration"] = st.limits.enumeration;
  lim["hamiltonian"] = st.limits.hamiltonian;
  lim["clique"] = st.limits.clique;
  lim["chromatic"] = st.limits.chromatic;
  lim["independence"] = st.limits.independence;
  lim["domination"] = st.limits.domination;
  lim["planarity_subdivision"] = st.limits.planarity_subdivision;
  m["limits"] = std::move(lim);
  return m;
}

inline nlohmann::ordered_json with_meta(const CliState& st,
                                        nlohmann::ordered_json body) {
  if (!st.meta) return body;
  nlohmann::ordered_json j;
  j["meta"] = meta_json(st);
  for (auto& [k, v] : body.items()) j[k] = std::move(v);
  return j;
}

inline std::string comment_meta(const CliState& st, const char* open,
                                const char* close) {
  if (!st.meta) return {};
  std::ostringstream os;
  for (const auto& [k, v] : meta_pairs(st))
    os << open << k << ": " << v << close << "\n";
  return os.str();
}

inline int emit(const CliState& st, const std::string& text,
                std::ostream& out, std::ostream& err) {
  if (st.out_path.empty()) {
    out << text;
    return 0;
  }
  std::ofstream f(st.out_path, std::ios::binary);
  if (!f) {
    err << "error: cannot write " << st.out_path << "\n";
    return 2;
  }
  f << text;
  return 0;
}

inline std::uint64_t parse_family_number(const std::string& s,
                                         const char* what) {
  std::size_t pos = 0;
  std::uint64_t v = 0;
  try {
    v = std::stoull(s, &pos);
  } catch (const std::exception&) {
    throw ContractError(std::string(what) + ": '" + s +
                        "' is not a number");
  }
  if (pos != s.size())
    throw ContractError(std::string(what) + ": '" + s +
                        "' is not a number");
  return v;
}

inline int cmd_info(const CliState& st, std::ostream& out, std::ostream& err) {
  FiniteRing r = parse_ring_spec(st.spec, st.limits.enumeration);
  RingFacts f = ring_facts(r, st.limits.enumeration);
  nlohmann::ordered_json j = with_meta(st, facts_json(r, f));
  return emit(st, j.dump(2) + "\n", out, err);
}

inline int cmd_build(const CliState& st, std::ostream& out,
                     std::ostream& err) {
  FiniteRing r = parse_ring_spec(st.spec, st.limits.enumeration);
  Graph g = build_uz(r);
  std::vector<std::string> names;
  if (st.label_mode == "residues") names = ring_vertex_names(r);
  std::string fmt = st.format.empty() ? "dot" : st.format;
  if (fmt == "dot")
    return emit(st, to_dot(g, names, st.meta ? meta_pairs(st)
                                             : decltype(meta_pairs(st)){}),
                out, err);
  if (fmt == "csv")
    return emit(st,
                to_edge_csv(g, names, st.meta ? meta_pairs(st)
                                              : decltype(meta_pairs(st)){}),
                out, err);
  nlohmann::ordered_json j = with_meta(st, adjacency_json(g, names));
  return emit(st, j.dump(2) + "\n", out, err);
}

inline int cmd_analyze(const CliState& st, std::ostream& out,
                       std::ostream& err) {
  FiniteRing r = parse_ring_spec(st.spec, st.limits.enumeration);
  Graph g = build_uz(r);
  InvariantReport inv = compute_invariants(g, st.limits);
  std::string fmt = st.format.empty() ? "json" : st.format;
  if (fmt == "csv")
    return emit(st, comment_meta(st, "# ", "") + invariants_csv(r.label(), inv),
                out, err);
  if (fmt == "md")
    return emit(st,
                comment_meta(st, "<!-- ", " -->") +
                    invariants_md(r.label(), inv),
                out, err);
  nlohmann::ordered_json j = with_meta(st, invariants_json(r.label(), inv));
  return emit(st, j.dump(2) + "\n", out, err);
}

inline int cmd_verify(const CliState& st, std::ostream& out,
                      std::ostream& err) {
  FiniteRing r = parse_ring_spec(st.spec, st.limits.enumeration);
  TheoremReport rep = run_checks(r, st.limits);
  std::string fmt = st.format.empty() ? "md" : st.format;
  int rc;
  if (fmt == "json") {
    nlohmann::ordered_json j = with_meta(st, theorem_report_json(rep));
    rc = emit(st, j.dump(2) + "\n", out, err);
  } else if (fmt == "csv") {
    rc = emit(st, comment_meta(st, "# ", "") + theorem_report_csv(rep), out,
              err);
  } else {
    rc = emit(st,
              comment_meta(st, "<!-- ", " -->") + theorem_report_md(rep), out,
              err);
  }
  if (rc != 0) return rc;
  return rep.failed > 0 ? 1 : 0;
}

inline int cmd_sweep(const CliState& st, std::ostream& out,
                     std::ostream& err) {
  std::vector<FiniteRing> rings;
  const auto& fa = st.family_args;
  auto need = [&](std::size_t k, const char* usage) {
    if (fa.size() != k)
      throw ContractError("family " + st.family + " expects " + usage);
  };
  if (st.family == "zn") {
    need(2, "two bounds: LO HI");
    rings = family_zn(parse_family_number(fa[0], "LO"),
                      parse_family_number(fa[1], "HI"),
                      st.limits.enumeration);
  } else if (st.family == "prime-powers") {
    need(2, "two bounds: LO HI");
    rings = family_prime_powers(parse_family_number(fa[0], "LO"),
                                parse_family_number(fa[1], "HI"),
                                st.limits.enumeration);
  } else if (st.family == "products") {
    need(2, "two bounds: LO HI");
    rings = family_products(parse_family_number(fa[0], "LO"),
                            parse_family_number(fa[1], "HI"),
                            st.limits.enumeration);
  } else if (st.family == "polyq") {
    need(2, "a modulus and a degree: M D");
    std::uint64_t m = parse_family_number(fa[0], "M");
    std::uint64_t d = parse_family_number(fa[1], "D");
    if (m > 0xffffffffull || d > 16)
      throw ContractError("polyq family arguments out of range");
    rings = family_polyq(static_cast<std::uint32_t>(m),
                         static_cast<std::uint32_t>(d),
                         st.limits.enumeration);
  } else if (st.family == "table") {
    need(1, "a JSON file path");
    rings = family_from_table_file(fa[0], st.limits.enumeration);
  } else {
    throw ContractError("unknown family " + st.family +
                        " (expected zn, prime-powers, products, polyq, or "
                        "table)");
  }
  std::vector<SweepRow> rows = run_sweep(rings, st.limits, st.jobs);
  std::string fmt = st.format.empty() ? "md" : st.format;
  int rc;
  if (fmt == "csv") {
    rc = emit(st, comment_meta(st, "# ", "") + sweep_csv(rows), out, err);
  } else if (fmt == "json") {
    std::string head;
    if (st.meta) {
      nlohmann::ordered_json m;
      m["meta"] = meta_json(st);
      head = m.dump() + "\n";
    }
    rc = emit(st, head + sweep_jsonl(rows), out, err);
  } else {
    rc = emit(st, comment_meta(st, "<!-- ", " -->") + sweep_md(rows), out,
              err);
  }
  if (rc != 0) return rc;
  for (const auto& row : rows)
    if (row.checks_failed > 0) return 1;
  return 0;
}

}  // namespace detail

// Entry point shared by the binary and the tests; returns the process exit
// code: 0 success, 1 check failure, 2 usage or parse error, 3 resource limit.
inline int run_cli(int argc, const char* const* argv, std::ostream& out,
                   std::ostream& err) {
  detail::CliState st;
  {
    std::ostringstream inv;
    for (int i = 0; i < argc; ++i) inv << (i ? " " : "") << argv[i];
    st.invocation = inv.str();
  }

  CLI::App app{"unit-zero divisor graphs of finite commutative rings"};
  app.set_version_flag("--version", std::string("uzg ") + kVersion);
  app.require_subcommand(1);

  CLI::App* info = app.add_subcommand(
      "info", "ring facts: units, zero divisors, ideals, radical");
  info->add_option("spec", st.spec, "ring spec, e.g. zn:12")->required();
  detail::add_format_flag(info, st.format, {"json"});
  detail::add_common_flags(info, st);
  detail::add_limit_flags(info, st.limits);

  CLI::App* build =
      app.add_subcommand("build", "construct the graph and export it");
  build->add_option("spec", st.spec, "ring spec, e.g. zn:12")->required();
  detail::add_format_flag(build, st.format, {"dot", "csv", "json"});
  build
      ->add_option("--label", st.label_mode,
                   "vertex labels: indices or residues")
      ->check(CLI::IsMember({"indices", "residues"}))
      ->envname("UZG_LABEL");
  detail::add_common_flags(build, st);
  detail::add_limit_flags(build, st.limits);

  CLI::App* analyze =
      app.add_subcommand("analyze", "compute the graph invariants");
  analyze->add_option("spec", st.spec, "ring spec, e.g. zn:12")->required();
  detail::add_format_flag(analyze, st.format, {"json", "csv", "md"});
  detail::add_common_flags(analyze, st);
  detail::add_limit_flags(analyze, st.limits);

  CLI::App* verify = app.add_subcommand(
      "verify", "machine-check every applicable statement on one ring");
  verify->add_option("spec", st.spec, "ring spec, e.g. zn:12")->required();
  detail::add_format_flag(verify, st.format, {"md", "json", "csv"});
  detail::add_common_flags(verify, st);
  detail::add_limit_flags(verify, st.limits);

  CLI::App* sweep = app.add_subcommand(
      "sweep", "verify a whole family: zn LO HI | prime-powers LO HI | "
               "products LO HI | polyq M D | table FILE");
  sweep->add_option("family", st.family, "family name")->required();
  sweep->add_option("args", st.family_args, "family arguments");
  detail::add_format_flag(sweep, st.format, {"md", "csv", "json"});
  sweep->add_option("--jobs", st.jobs, "worker threads")
      ->check(CLI::Range(1u, 256u))
      ->envname("UZG_JOBS")
      ->capture_default_str();
  detail::add_common_flags(sweep, st);
  detail::add_limit_flags(sweep, st.limits);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(info)) return detail::cmd_info(st, out, err);
    if (app.got_subcommand(build)) return detail::cmd_build(st, out, err);
    if (app.got_subcommand(analyze)) return detail::cmd_analyze(st, out, err);
    if (app.got_subcommand(verify)) return detail::cmd_verify(st, out, err);
    return detail::cmd_sweep(st, out, err);
  } catch (const LimitError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ContractError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace uzg
