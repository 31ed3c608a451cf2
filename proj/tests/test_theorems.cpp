#include "uzg/theorems.hpp"

#include <gtest/gtest.h>

#include <map>

#include "uzg/serialize.hpp"

namespace {

using uzg::CheckStatus;
using uzg::FiniteRing;
using uzg::Graph;
using uzg::TheoremCheck;
using uzg::TheoremReport;

const TheoremCheck& find_check(const std::vector<TheoremCheck>& checks,
                               const std::string& id) {
  for (const auto& c : checks)
    if (c.id == id) return c;
  throw std::runtime_error("check not found: " + id);
}

TEST(Report, Z12Tally) {
  TheoremReport rep = uzg::run_checks(FiniteRing::zn(12));
  EXPECT_EQ(rep.ring_label, "zn:12");
  EXPECT_EQ(rep.order, 12u);
  EXPECT_EQ(rep.unit_count, 4u);
  EXPECT_EQ(rep.zero_divisor_count, 8u);
  EXPECT_EQ(rep.maximal_ideal_count, 2u);
  EXPECT_FALSE(rep.is_local);
  EXPECT_FALSE(rep.is_field);
  EXPECT_EQ(rep.checks.size(), 28u);
  EXPECT_EQ(rep.passed, 20u);
  EXPECT_EQ(rep.failed, 0u);
  EXPECT_EQ(rep.skipped, 8u);
  for (const char* id : {"T05-local-complete-bipartite",
                         "T06-complete-bipartite-local", "T08-local-eulerian",
                         "T09-local-hamiltonian", "T10-local-planar",
                         "T11-local-parameters",
                         "Z03-prime-power-complete-bipartite",
                         "Z06-prime-power-four-cycle"})
    EXPECT_EQ(find_check(rep.checks, id).status, CheckStatus::Skipped) << id;
  EXPECT_EQ(find_check(rep.checks, "T01-max-degree").status,
            CheckStatus::Pass);
  EXPECT_EQ(find_check(rep.checks, "T15-coset-independence").status,
            CheckStatus::Pass);
  EXPECT_EQ(find_check(rep.checks, "T15-coset-independence").converse_holds,
            true);
  EXPECT_EQ(find_check(rep.checks, "Z05-triangle-characterization").status,
            CheckStatus::Pass);
}

TEST(Report, NonModularRingHasNoResidueChecks) {
  TheoremReport rep = uzg::run_checks(
      FiniteRing::product({FiniteRing::zn(2), FiniteRing::zn(3)}));
  EXPECT_EQ(rep.checks.size(), 18u);
  for (const auto& c : rep.checks) EXPECT_EQ(c.id.substr(0, 1), "T");
}

TEST(Report, ResidueChecksRejectNonModular) {
  FiniteRing r = FiniteRing::product({FiniteRing::zn(2), FiniteRing::zn(3)});
  auto a = uzg::analyze_ring(r);
  EXPECT_THROW(uzg::residue_checks(r, a.facts, a.graph, a.invariants),
               uzg::ContractError);
}

TEST(Report, NoFailuresAcrossFamilies) {
  std::vector<FiniteRing> rings;
  for (std::uint64_t n = 1; n <= 60; ++n) rings.push_back(FiniteRing::zn(n));
  for (auto [p, q] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 5},
                      std::pair{4, 9}, std::pair{5, 5}, std::pair{8, 3}})
    rings.push_back(
        FiniteRing::product({FiniteRing::zn(p), FiniteRing::zn(q)}));
  rings.push_back(FiniteRing::poly_quotient(2, {0, 0, 1}));
  rings.push_back(FiniteRing::poly_quotient(2, {1, 1, 1}));
  rings.push_back(FiniteRing::poly_quotient(3, {0, 0, 1}));
  rings.push_back(FiniteRing::poly_quotient(2, {1, 1, 0, 1}));
  rings.push_back(FiniteRing::poly_quotient(5, {0, 0, 1}));
  for (const auto& r : rings) {
    TheoremReport rep = uzg::run_checks(r);
    EXPECT_EQ(rep.failed, 0u) << r.label() << ": "
                              << uzg::theorem_report_md(rep);
  }
}

TEST(Report, FieldAndLocalPositiveCases) {
  // Z_49 is local and not a field; the local checks actually run on it once
  // the exact-search caps admit 49 vertices.
  uzg::Limits wide;
  wide.clique = wide.chromatic = 49;
  wide.independence = wide.domination = 49;
  TheoremReport rep = uzg::run_checks(FiniteRing::zn(49), wide);
  EXPECT_TRUE(rep.is_local);
  EXPECT_FALSE(rep.is_field);
  EXPECT_EQ(find_check(rep.checks, "T05-local-complete-bipartite").status,
            CheckStatus::Pass);
  EXPECT_EQ(find_check(rep.checks, "T10-local-planar").status,
            CheckStatus::Pass);
  EXPECT_EQ(find_check(rep.checks, "T11-local-parameters").status,
            CheckStatus::Pass);
  EXPECT_EQ(rep.failed, 0u);
  TheoremReport fld = uzg::run_checks(FiniteRing::zn(13));
  EXPECT_TRUE(fld.is_field);
  EXPECT_EQ(find_check(fld.checks, "T07-star-field").status,
            CheckStatus::Pass);
  EXPECT_EQ(fld.failed, 0u);
}

// Doctored graphs: feed the checks a graph that differs from the real
// unit-zero graph and make sure the right checks actually fail.

struct Doctored {
  FiniteRing ring;
  uzg::RingFacts facts;
  Graph graph;
  uzg::InvariantReport inv;
  std::vector<TheoremCheck> structure;

  explicit Doctored(FiniteRing r, const std::vector<std::pair<uzg::Elem, uzg::Elem>>& extra)
      : ring(std::move(r)), facts(uzg::ring_facts(ring)),
        graph(uzg::build_uz(ring, facts.units, facts.zero_divisors)) {
    for (auto [u, v] : extra) graph.add_edge(u, v);
    inv = uzg::compute_invariants(graph);
    structure = uzg::structure_checks(ring, facts, graph, inv);
  }
};

TEST(DoctoredGraphs, ExtraUnitEdgeBreaksDegreeAndPartition) {
  // 1 and 5 are both units of Z_6; joining them inflates the maximum degree
  // past |U| and puts an edge inside the unit block.
  Doctored d(FiniteRing::zn(6), {{1, 5}});
  EXPECT_EQ(find_check(d.structure, "T01-max-degree").status,
            CheckStatus::Fail);
  EXPECT_EQ(find_check(d.structure, "T13-maximal-partition").status,
            CheckStatus::Fail);
  EXPECT_NE(find_check(d.structure, "T13-maximal-partition").detail.find("U(R)"),
            std::string::npos);
}

TEST(DoctoredGraphs, ExtraEdgeBreaksRadicalProjection) {
  // 1 and 5 are units of Z_12 whose images 1, 5 are non-adjacent in the
  // graph of Z_12/J = Z_6, so the doctored edge cannot project.
  Doctored d(FiniteRing::zn(12), {{1, 5}});
  EXPECT_EQ(find_check(d.structure, "T17-radical-project").status,
            CheckStatus::Fail);
  EXPECT_EQ(find_check(d.structure, "T16-radical-lift").status,
            CheckStatus::Pass);
}

TEST(DoctoredGraphs, ShortcutEdgesBreakDiameterEquality) {
  // Turning C_4 into K_4 gives the graph of Z_4 the same diameter as its
  // radical quotient even though |R/J| = 2.
  Doctored d(FiniteRing::zn(4), {{0, 2}, {1, 3}});
  EXPECT_EQ(find_check(d.structure, "T18-diameter-equality").status,
            CheckStatus::Fail);
}

TEST(DoctoredGraphs, UnitUnitEdgeBreaksLocalBipartition) {
  // Z_9 is local; an edge between the units 1 and 4 creates a triangle, so
  // the graph is no longer complete bipartite on units and zero divisors.
  Doctored d(FiniteRing::zn(9), {{1, 4}});
  EXPECT_EQ(find_check(d.structure, "T05-local-complete-bipartite").status,
            CheckStatus::Fail);
}

TEST(DoctoredGraphs, CompleteBipartiteOnNonLocalRing) {
  // Hand-built complete bipartite graph on U(Z_6) | Z(Z_6): the hypothesis
  // of the converse direction holds but Z_6 is not local.
  FiniteRing r = FiniteRing::zn(6);
  auto facts = uzg::ring_facts(r);
  Graph g(6, r.label());
  for (uzg::Elem u : {1, 5})
    for (uzg::Elem z : {0, 2, 3, 4}) g.add_edge(u, z);
  auto inv = uzg::compute_invariants(g);
  auto checks = uzg::structure_checks(r, facts, g, inv);
  EXPECT_EQ(find_check(checks, "T06-complete-bipartite-local").status,
            CheckStatus::Fail);
}

TEST(DoctoredGraphs, NonHamiltonianLocalGraph) {
  // Z_4 is local with |U| = |Z| = 2, so its graph must span a cycle; a bare
  // path does not.
  FiniteRing r = FiniteRing::zn(4);
  auto facts = uzg::ring_facts(r);
  Graph g(4, r.label());
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  auto inv = uzg::compute_invariants(g);
  auto checks = uzg::structure_checks(r, facts, g, inv);
  EXPECT_EQ(find_check(checks, "T09-local-hamiltonian").status,
            CheckStatus::Fail);
}

TEST(DoctoredGraphs, LeafEdgeBreaksStarAndTriangleChecks) {
  FiniteRing r = FiniteRing::zn(7);
  auto facts = uzg::ring_facts(r);
  Graph g = uzg::build_uz(r, facts.units, facts.zero_divisors);
  g.add_edge(1, 2);
  auto inv = uzg::compute_invariants(g);
  auto checks = uzg::residue_checks(r, facts, g, inv);
  EXPECT_EQ(find_check(checks, "Z01-star-prime").status, CheckStatus::Fail);
  EXPECT_EQ(find_check(checks, "Z05-triangle-characterization").status,
            CheckStatus::Fail);
}

TEST(DoctoredGraphs, ChordBreaksCycleCheck) {
  FiniteRing r = FiniteRing::zn(4);
  auto facts = uzg::ring_facts(r);
  Graph g = uzg::build_uz(r, facts.units, facts.zero_divisors);
  g.add_edge(0, 2);
  auto inv = uzg::compute_invariants(g);
  auto checks = uzg::residue_checks(r, facts, g, inv);
  EXPECT_EQ(find_check(checks, "Z08-cycle-graph").status, CheckStatus::Fail);
}

TEST(Report, SkipReasonsAreInformative) {
  TheoremReport rep = uzg::run_checks(FiniteRing::zn(21));
  EXPECT_EQ(find_check(rep.checks, "T02-unit-sum").status,
            CheckStatus::Skipped);
  EXPECT_EQ(find_check(rep.checks, "T02-unit-sum").detail, "2 is a unit");
  EXPECT_EQ(find_check(rep.checks, "T05-local-complete-bipartite").detail,
            "ring is not local");
  EXPECT_EQ(find_check(rep.checks, "T15-coset-independence").detail,
            "no proper ideal satisfies the hypothesis");
  EXPECT_EQ(find_check(rep.checks, "T15-coset-independence").converse_holds,
            false);
}

TEST(Report, HamiltonianSkipPropagates) {
  // A real local unit-zero graph is complete bipartite and thus always
  // decided by a fast path, so the undecided branch needs a doctored graph:
  // C_8 plus two crossing chords dodges every shortcut.
  FiniteRing r = FiniteRing::zn(8);
  auto facts = uzg::ring_facts(r);
  Graph g(8, r.label());
  for (std::uint32_t i = 0; i < 8; ++i) g.add_edge(i, (i + 1) % 8);
  g.add_edge(0, 4);
  g.add_edge(1, 5);
  uzg::Limits tight;
  tight.hamiltonian = 4;
  auto inv = uzg::compute_invariants(g, tight);
  ASSERT_EQ(inv.hamiltonian, uzg::Tristate::Skipped);
  auto checks = uzg::structure_checks(r, facts, g, inv, tight);
  EXPECT_EQ(find_check(checks, "T09-local-hamiltonian").status,
            CheckStatus::Skipped);
}

TEST(Report, DeterministicAcrossRuns) {
  TheoremReport a = uzg::run_checks(FiniteRing::zn(30));
  TheoremReport b = uzg::run_checks(FiniteRing::zn(30));
  EXPECT_EQ(uzg::theorem_report_json(a).dump(2),
            uzg::theorem_report_json(b).dump(2));
  EXPECT_EQ(uzg::theorem_report_md(a), uzg::theorem_report_md(b));
  EXPECT_EQ(uzg::theorem_report_csv(a), uzg::theorem_report_csv(b));
}

TEST(Report, CheckIdsAreOrderedAndUnique) {
  TheoremReport rep = uzg::run_checks(FiniteRing::zn(10));
  std::map<std::string, int> seen;
  for (const auto& c : rep.checks) ++seen[c.id];
  for (const auto& [id, count] : seen) EXPECT_EQ(count, 1) << id;
  ASSERT_GE(rep.checks.size(), 2u);
  EXPECT_EQ(rep.checks.front().id, "T01-max-degree");
  EXPECT_EQ(rep.checks.back().id, "Z10-four-cycle-condition");
}

}  // namespace
