#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "uzg/errors.hpp"
#include "uzg/numtheory.hpp"
#include "uzg/serialize.hpp"
#include "uzg/theorems.hpp"

namespace uzg {

inline std::vector<FiniteRing> family_zn(std::uint64_t lo, std::uint64_t hi,
                                         std::uint32_t limit) {
  if (lo < 1 || lo > hi) throw ContractError("empty zn range");
  std::vector<FiniteRing> out;
  for (std::uint64_t n = lo; n <= hi; ++n) {
    if (n > limit)
      throw LimitError("ring order " + std::to_string(n) +
                       " exceeds the enumeration limit " +
                       std::to_string(limit));
    out.push_back(FiniteRing::zn(n));
  }
  return out;
}

inline std::vector<FiniteRing> family_prime_powers(std::uint64_t lo,
                                                   std::uint64_t hi,
                                                   std::uint32_t limit) {
  if (lo < 1 || lo > hi) throw ContractError("empty prime-power range");
  std::vector<FiniteRing> out;
  for (std::uint64_t n = lo; n <= hi; ++n) {
    if (!prime_power(n)) continue;
    if (n > limit)
      throw LimitError("ring order " + std::to_string(n) +
                       " exceeds the enumeration limit " +
                       std::to_string(limit));
    out.push_back(FiniteRing::zn(n));
  }
  return out;
}

// Z_p x Z_q over primes p <= q with pq in range, ordered by (pq, p).
inline std::vector<FiniteRing> family_products(std::uint64_t lo,
                                               std::uint64_t hi,
                                               std::uint32_t limit) {
  if (lo < 1 || lo > hi) throw ContractError("empty product range");
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
  for (std::uint64_t p = 2; p * p <= hi; ++p) {
    if (!is_prime(p)) continue;
    for (std::uint64_t q = p; p * q <= hi; ++q) {
      if (!is_prime(q) || p * q < lo) continue;
      pairs.emplace_back(p, q);
    }
  }
  std::sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) {
    return a.first * a.second != b.first * b.second
               ? a.first * a.second < b.first * b.second
               : a.first < b.first;
  });
  std::vector<FiniteRing> out;
  for (const auto& [p, q] : pairs) {
    if (p * q > limit)
      throw LimitError("ring order " + std::to_string(p * q) +
                       " exceeds the enumeration limit " +
                       std::to_string(limit));
    std::vector<FiniteRing> fs;
    fs.push_back(FiniteRing::zn(p));
    fs.push_back(FiniteRing::zn(q));
    out.push_back(FiniteRing::product(std::move(fs)));
  }
  return out;
}

// Every monic degree-deg polynomial over Z_m, constant coefficient counting
// fastest.
inline std::vector<FiniteRing> family_polyq(std::uint32_t m, std::uint32_t deg,
                                            std::uint32_t limit) {
  if (m < 2) throw ContractError("polyq family needs modulus at least 2");
  if (deg < 1) throw ContractError("polyq family needs degree at least 1");
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < deg; ++i) {
    count *= m;
    if (count > limit)
      throw LimitError("ring order " + std::to_string(count) +
                       " exceeds the enumeration limit " +
                       std::to_string(limit));
  }
  std::vector<FiniteRing> out;
  out.reserve(count);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::vector<std::uint32_t> coeffs(deg + 1, 0);
    std::uint64_t t = idx;
    for (std::uint32_t i = 0; i < deg; ++i) {
      coeffs[i] = static_cast<std::uint32_t>(t % m);
      t /= m;
    }
    coeffs[deg] = 1;
    out.push_back(FiniteRing::poly_quotient(m, coeffs, limit));
  }
  return out;
}

// JSON array of {"label", "add", "mul", optional "names"}; tables are
// verified at construction.
inline std::vector<FiniteRing> family_from_table_file(const std::string& path,
                                                      std::uint32_t limit) {
  std::ifstream in(path);
  if (!in) throw ContractError("cannot open table file " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("table file ") + path + ": " + e.what(), 0);
  }
  if (!doc.is_array())
    throw ParseError("table file " + path + ": expected a JSON array", 0);
  std::vector<FiniteRing> out;
  for (const auto& entry : doc) {
    if (!entry.is_object() || !entry.contains("label") ||
        !entry.contains("add") || !entry.contains("mul"))
      throw ParseError(
          "table file " + path + ": entries need label, add, and mul", 0);
    std::string label = entry["label"].get<std::string>();
    auto add = entry["add"].get<std::vector<std::vector<Elem>>>();
    auto mul = entry["mul"].get<std::vector<std::vector<Elem>>>();
    FiniteRing r = FiniteRing::from_tables(label, add, mul, true, limit);
    if (entry.contains("names"))
      r.set_element_names(entry["names"].get<std::vector<std::string>>());
    out.push_back(std::move(r));
  }
  return out;
}

struct SweepRow {
  std::string ring_label;
  std::uint32_t order = 0;
  std::uint32_t unit_count = 0;
  std::uint32_t zero_divisor_count = 0;
  std::uint32_t maximal_ideal_count = 0;
  bool regular = false;
  bool bipartite = false;
  bool planar = false;
  bool eulerian = false;
  Tristate hamiltonian = Tristate::Skipped;
  std::optional<std::uint32_t> diameter;
  std::optional<std::uint32_t> girth;
  bool has_c3 = false;
  bool has_c4 = false;
  std::uint32_t checks_passed = 0, checks_failed = 0, checks_skipped = 0;
  std::vector<std::string> failed_checks;
};

inline SweepRow sweep_row(const FiniteRing& r, const Limits& limits) {
  RingAnalysis a = analyze_ring(r, limits);
  SweepRow row;
  row.ring_label = r.label();
  row.order = r.order();
  row.unit_count = a.theorems.unit_count;
  row.zero_divisor_count = a.theorems.zero_divisor_count;
  row.maximal_ideal_count = a.theorems.maximal_ideal_count;
  row.regular = a.invariants.regular;
  row.bipartite = a.invariants.bipartite;
  row.planar = a.invariants.planar;
  row.eulerian = a.invariants.eulerian;
  row.hamiltonian = a.invariants.hamiltonian;
  row.diameter = a.invariants.diameter;
  row.girth = a.invariants.girth;
  row.has_c3 = a.invariants.has_c3;
  row.has_c4 = a.invariants.has_c4;
  row.checks_passed = a.theorems.passed;
  row.checks_failed = a.theorems.failed;
  row.checks_skipped = a.theorems.skipped;
  for (const auto& c : a.theorems.checks)
    if (c.status == CheckStatus::Fail) row.failed_checks.push_back(c.id);
  return row;
}

// Workers pull ring indices from a shared counter; rows land at their index,
// so the output is identical for every job count.
inline std::vector<SweepRow> run_sweep(const std::vector<FiniteRing>& rings,
                                       const Limits& limits, unsigned jobs) {
  std::vector<SweepRow> rows(rings.size());
  if (rings.empty()) return rows;
  jobs = std::max(1u, std::min<unsigned>(
                          jobs, static_cast<unsigned>(rings.size())));
  if (jobs == 1) {
    for (std::size_t i = 0; i < rings.size(); ++i)
      rows[i] = sweep_row(rings[i], limits);
    return rows;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(rings.size());
  std::vector<std::thread> pool;
  pool.reserve(jobs);
  for (unsigned t = 0; t < jobs; ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < rings.size();
           i = next.fetch_add(1)) {
        try {
          rows[i] = sweep_row(rings[i], limits);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return rows;
}

inline std::string sweep_md(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << "| ring | |R| | |U| | |Z| | #maxideals | regular | bipartite | "
        "planar | eulerian | hamiltonian | diameter | girth | C3 | C4 | "
        "checks_passed | checks_failed | checks_skipped |\n";
  os << "|------|-----|-----|-----|------------|---------|-----------|"
        "--------|----------|-------------|----------|-------|----|----|"
        "---------------|---------------|----------------|\n";
  auto b = [](bool v) { return v ? "true" : "false"; };
  for (const auto& r : rows) {
    os << "| " << detail::md_escape(r.ring_label) << " | " << r.order
       << " | " << r.unit_count << " | " << r.zero_divisor_count << " | "
       << r.maximal_ideal_count << " | " << b(r.regular) << " | "
       << b(r.bipartite) << " | " << b(r.planar) << " | " << b(r.eulerian)
       << " | " << to_string(r.hamiltonian) << " | "
       << detail::md_opt(r.diameter) << " | " << detail::md_opt(r.girth)
       << " | " << b(r.has_c3) << " | " << b(r.has_c4) << " | "
       << r.checks_passed << " | " << r.checks_failed << " | "
       << r.checks_skipped << " |\n";
  }
  return os.str();
}

inline std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << "ring,order,units,zero_divisors,maximal_ideals,regular,bipartite,"
        "planar,eulerian,hamiltonian,diameter,girth,has_c3,has_c4,"
        "checks_passed,checks_failed,checks_skipped\n";
  auto b = [](bool v) { return v ? "true" : "false"; };
  for (const auto& r : rows) {
    std::string label = r.ring_label;
    if (label.find(',') != std::string::npos) {
      std::string quoted = "\"";
      quoted += label;
      quoted += '"';
      label = quoted;
    }
    os << label << ',' << r.order << ',' << r.unit_count << ','
       << r.zero_divisor_count << ',' << r.maximal_ideal_count << ','
       << b(r.regular) << ',' << b(r.bipartite) << ',' << b(r.planar) << ','
       << b(r.eulerian) << ',' << to_string(r.hamiltonian) << ','
       << detail::csv_opt(r.diameter) << ',' << detail::csv_opt(r.girth)
       << ',' << b(r.has_c3) << ',' << b(r.has_c4) << ',' << r.checks_passed
       << ',' << r.checks_failed << ',' << r.checks_skipped << '\n';
  }
  return os.str();
}

inline std::string sweep_jsonl(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  for (const auto& r : rows) {
    nlohmann::ordered_json j;
    j["ring"] = r.ring_label;
    j["order"] = r.order;
    j["units"] = r.unit_count;
    j["zero_divisors"] = r.zero_divisor_count;
    j["maximal_ideals"] = r.maximal_ideal_count;
    j["regular"] = r.regular;
    j["bipartite"] = r.bipartite;
    j["planar"] = r.planar;
    j["eulerian"] = r.eulerian;
    if (r.hamiltonian == Tristate::Skipped)
      j["hamiltonian"] = nullptr;
    else
      j["hamiltonian"] = r.hamiltonian == Tristate::Yes;
    j["diameter"] = detail::json_opt(r.diameter);
    j["girth"] = detail::json_opt(r.girth);
    j["has_c3"] = r.has_c3;
    j["has_c4"] = r.has_c4;
    j["checks_passed"] = r.checks_passed;
    j["checks_failed"] = r.checks_failed;
    j["checks_skipped"] = r.checks_skipped;
    j["failed_checks"] = r.failed_checks;
    os << j.dump() << '\n';
  }
  return os.str();
}

}  // namespace uzg
