#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "uzg/facts.hpp"
#include "uzg/graph.hpp"
#include "uzg/ideals.hpp"
#include "uzg/invariants.hpp"
#include "uzg/limits.hpp"
#include "uzg/numtheory.hpp"
#include "uzg/ring.hpp"

namespace uzg {

enum class CheckStatus { Pass, Fail, Skipped };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "fail";
    default:
      return "skipped";
  }
}

struct TheoremCheck {
  std::string id;
  std::string statement;
  CheckStatus status = CheckStatus::Skipped;
  std::string detail;  // failure witness, skip reason, or informative note
  std::optional<bool> converse_holds;  // observed converse on this ring
};

struct TheoremReport {
  std::string ring_label;
  std::uint32_t order = 0;
  std::uint32_t unit_count = 0;
  std::uint32_t zero_divisor_count = 0;
  std::uint32_t maximal_ideal_count = 0;
  bool is_local = false;
  bool is_field = false;
  std::vector<TheoremCheck> checks;
  std::uint32_t passed = 0, failed = 0, skipped = 0;

  void tally() {
    passed = failed = skipped = 0;
    for (const auto& c : checks) {
      if (c.status == CheckStatus::Pass) ++passed;
      if (c.status == CheckStatus::Fail) ++failed;
      if (c.status == CheckStatus::Skipped) ++skipped;
    }
  }
};

namespace detail {

inline TheoremCheck check_stub(const char* id, const char* statement) {
  TheoremCheck c;
  c.id = id;
  c.statement = statement;
  return c;
}

inline void conclude(TheoremCheck& c, bool ok, const std::string& witness) {
  c.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
  if (!ok) c.detail = witness;
}

inline void skip(TheoremCheck& c, const std::string& reason) {
  c.status = CheckStatus::Skipped;
  c.detail = reason;
}

inline std::string edge_witness(const FiniteRing& r, Elem u, Elem v) {
  return r.element_name(u) + " -- " + r.element_name(v);
}

}  // namespace detail

// Checks that apply to every finite commutative ring with identity.
inline std::vector<TheoremCheck> structure_checks(const FiniteRing& r,
                                                  const RingFacts& facts,
                                                  const Graph& g,
                                                  const InvariantReport& inv,
                                                  const Limits& limits = {}) {
  std::vector<TheoremCheck> out;
  const std::uint32_t n = r.order();
  const std::uint32_t uc = static_cast<std::uint32_t>(facts.units.count());
  const std::uint32_t zc =
      static_cast<std::uint32_t>(facts.zero_divisors.count());
  const Elem two = r.add(r.one(), r.one());
  const bool two_unit = facts.units.test(two);
  // A maximal ideal of index two yields a homomorphism onto the two-element
  // field; that map, not merely "2 is a non-unit", drives the unit-sum,
  // regularity, and bipartiteness arguments. The two conditions coincide on
  // residue rings but not on characteristic-2 extension fields such as F_4.
  bool index_two_maximal = false;
  for (std::uint32_t i : facts.maximal_idx)
    if (facts.ideals[i].members.count() * 2 == n) index_two_maximal = true;
  const char* no_index_two_reason =
      two_unit ? "2 is a unit" : "no maximal ideal has index two";
  (void)limits;

  {  // T01: degree bound attained at zero
    auto c = detail::check_stub(
        "T01-max-degree",
        "the maximum degree equals the number of units and the zero element "
        "attains it");
    if (n < 2) {
      detail::skip(c, "ring has a single element");
    } else {
      bool ok = inv.max_degree == uc && g.degree(r.zero()) == uc;
      std::ostringstream w;
      w << "max degree " << inv.max_degree << ", deg(0) "
        << g.degree(r.zero()) << ", units " << uc;
      detail::conclude(c, ok, w.str());
    }
    out.push_back(std::move(c));
  }

  {  // T02: sums of units when the ring maps onto the two-element field
    auto c = detail::check_stub(
        "T02-unit-sum",
        "when some maximal ideal has index two, the sum of any two units is "
        "a non-unit");
    bool claim = true;
    std::string wit;
    for (int x = facts.units.find_first(); x >= 0 && claim;
         x = facts.units.find_next(x))
      for (int y = x; y >= 0; y = facts.units.find_next(y)) {
        Elem s = r.add(static_cast<Elem>(x), static_cast<Elem>(y));
        if (facts.units.test(s)) {
          claim = false;
          wit = r.element_name(x) + " + " + r.element_name(y) + " = " +
                r.element_name(s) + " is a unit";
          break;
        }
      }
    c.converse_holds = !claim || index_two_maximal;
    if (!index_two_maximal)
      detail::skip(c, no_index_two_reason);
    else
      detail::conclude(c, claim, wit);
    out.push_back(std::move(c));
  }

  {  // T03: regularity under the same index-two hypothesis
    auto c = detail::check_stub(
        "T03-regularity",
        "when some maximal ideal has index two, the graph is regular of "
        "degree the number of units");
    bool claim = inv.regular && inv.max_degree == uc;
    c.converse_holds = !claim || index_two_maximal;
    if (!index_two_maximal) {
      detail::skip(c, no_index_two_reason);
    } else {
      std::ostringstream w;
      w << "degrees range " << inv.min_degree << ".." << inv.max_degree
        << ", units " << uc;
      detail::conclude(c, claim, w.str());
    }
    out.push_back(std::move(c));
  }

  {  // T04: eulerian under the regularity and parity hypotheses
    auto c = detail::check_stub(
        "T04-eulerian-corollary",
        "when some maximal ideal has index two, the unit count is even, and "
        "the graph is connected, the graph is eulerian");
    bool hyp = index_two_maximal && uc % 2 == 0 && inv.connected;
    c.converse_holds = !inv.eulerian || hyp;
    if (!hyp) {
      std::string why = !index_two_maximal ? no_index_two_reason
                        : uc % 2 != 0      ? "odd number of units"
                        : !inv.connected   ? "graph is disconnected"
                                           : "";
      detail::skip(c, why);
    } else {
      detail::conclude(c, inv.eulerian, "graph is not eulerian");
    }
    out.push_back(std::move(c));
  }

  bool blocks_are_uz =
      inv.bipartite && ((inv.part_left == facts.zero_divisors &&
                         inv.part_right == facts.units) ||
                        (inv.part_left == facts.units &&
                         inv.part_right == facts.zero_divisors));

  {  // T05: local rings give complete bipartite graphs
    auto c = detail::check_stub(
        "T05-local-complete-bipartite",
        "over a local ring the graph is complete bipartite on the "
        "zero-divisors and the units");
    bool claim = inv.complete_bipartite && blocks_are_uz;
    c.converse_holds = !claim || facts.is_local;
    if (!facts.is_local) {
      detail::skip(c, "ring is not local");
    } else {
      std::ostringstream w;
      w << "complete bipartite: " << (inv.complete_bipartite ? "yes" : "no")
        << ", blocks match units/zero-divisors: "
        << (blocks_are_uz ? "yes" : "no");
      detail::conclude(c, claim, w.str());
    }
    out.push_back(std::move(c));
  }

  {  // T06: complete bipartite forces local
    auto c = detail::check_stub(
        "T06-complete-bipartite-local",
        "a complete bipartite graph on the zero-divisors and the units "
        "forces the ring to be local");
    bool hyp = inv.complete_bipartite && blocks_are_uz;
    c.converse_holds = !facts.is_local || hyp;
    if (!hyp)
      detail::skip(c, "graph is not complete bipartite on units and "
                      "zero-divisors");
    else
      detail::conclude(c, facts.is_local, "ring is not local");
    out.push_back(std::move(c));
  }

  {  // T07: stars are exactly the fields
    auto c = detail::check_stub(
        "T07-star-field", "the graph is a star exactly when the ring is a "
                          "field");
    if (n < 2) {
      detail::skip(c, "ring has a single element");
    } else {
      std::ostringstream w;
      w << "star: " << (inv.star ? "yes" : "no")
        << ", field: " << (facts.is_field ? "yes" : "no");
      detail::conclude(c, inv.star == facts.is_field, w.str());
    }
    out.push_back(std::move(c));
  }

  {  // T08: eulerian characterization over local rings
    auto c = detail::check_stub(
        "T08-local-eulerian",
        "over a local ring the graph is eulerian exactly when both the ring "
        "order and the unit count are even");
    if (!facts.is_local) {
      detail::skip(c, "ring is not local");
    } else {
      bool rhs = n % 2 == 0 && uc % 2 == 0;
      std::ostringstream w;
      w << "eulerian: " << (inv.eulerian ? "yes" : "no") << ", |R| " << n
        << ", |U| " << uc;
      detail::conclude(c, inv.eulerian == rhs, w.str());
    }
    out.push_back(std::move(c));
  }

  {  // T09: hamiltonian characterization over local rings
    auto c = detail::check_stub(
        "T09-local-hamiltonian",
        "over a local ring the graph is hamiltonian exactly when units and "
        "zero-divisors are equinumerous with at least two of each");
    if (!facts.is_local) {
      detail::skip(c, "ring is not local");
    } else if (inv.hamiltonian == Tristate::Skipped) {
      detail::skip(c, "hamiltonicity undecided at this order");
    } else {
      bool lhs = inv.hamiltonian == Tristate::Yes;
      bool rhs = uc == zc && zc >= 2;
      std::ostringstream w;
      w << "hamiltonian: " << (lhs ? "yes" : "no") << ", |U| " << uc
        << ", |Z| " << zc;
      detail::conclude(c, lhs == rhs, w.str());
    }
    out.push_back(std::move(c));
  }

  {  // T10: planarity characterization over local rings
    auto c = detail::check_stub(
        "T10-local-planar",
        "over a local ring the graph is planar exactly when there are at "
        "most two units or at most two zero-divisors");
    if (!facts.is_local) {
      detail::skip(c, "ring is not local");
    } else {
      bool rhs = uc <= 2 || zc <= 2;
      std::ostringstream w;
      w << "planar: " << (inv.planar ? "yes" : "no") << ", |U| " << uc
        << ", |Z| " << zc;
      detail::conclude(c, inv.planar == rhs, w.str());
    }
    out.push_back(std::move(c));
  }

  {  // T11: the six exact parameters over local rings
    auto c = detail::check_stub(
        "T11-local-parameters",
        "over a local ring with at least two units and two zero-divisors the "
        "graph has diameter 2, girth 4, clique number 2, chromatic number 2, "
        "independence number max(|U|,|Z|), and domination number 2");
    bool hyp = facts.is_local && uc >= 2 && zc >= 2;
    bool exact_known = inv.clique_number && inv.chromatic_number &&
                       inv.independence_number && inv.domination_number;
    std::optional<bool> claim;
    if (exact_known) {
      claim = inv.diameter == 2u && inv.girth == 4u &&
              inv.clique_number == 2u && inv.chromatic_number == 2u &&
              inv.independence_number == std::max(uc, zc) &&
              inv.domination_number == 2u;
    }
    if (claim) c.converse_holds = !*claim || hyp;
    if (!hyp) {
      detail::skip(c, facts.is_local ? "fewer than two units or two "
                                       "zero-divisors"
                                     : "ring is not local");
    } else if (!exact_known) {
      detail::skip(c, "exact parameters skipped at this order");
    } else {
      std::ostringstream w;
      w << "diameter " << (inv.diameter ? std::to_string(*inv.diameter) : "-")
        << ", girth " << (inv.girth ? std::to_string(*inv.girth) : "-")
        << ", clique " << *inv.clique_number << ", chromatic "
        << *inv.chromatic_number << ", independence "
        << *inv.independence_number << " (expected " << std::max(uc, zc)
        << "), domination " << *inv.domination_number;
      detail::conclude(c, *claim, w.str());
    }
    out.push_back(std::move(c));
  }

  {  // T12: bipartiteness from either hypothesis
    auto c = detail::check_stub(
        "T12-bipartite-condition",
        "if the ring is local or some maximal ideal has index two, the graph "
        "is bipartite");
    bool hyp = facts.is_local || index_two_maximal;
    c.converse_holds = !inv.bipartite || hyp;
    if (!hyp)
      detail::skip(c, std::string("ring is not local and ") +
                          no_index_two_reason);
    else
      detail::conclude(c, inv.bipartite,
                       "graph is not bipartite; odd cycle through " +
                           (inv.odd_cycle.empty()
                                ? std::string("?")
                                : r.element_name(inv.odd_cycle.front())));
    out.push_back(std::move(c));
  }

  {  // T13: the maximal-ideal residue blocks are independent
    auto c = detail::check_stub(
        "T13-maximal-partition",
        "the units and the maximal-ideal residue classes partition the "
        "vertices into independent sets");
    if (facts.maximal_idx.empty()) {
      detail::skip(c, "ring has no maximal ideal");
    } else {
      VertexPartition vp = maximal_ideal_partition(r, facts);
      vp.validate(n);
      auto w = is_partition_independent(g, vp.blocks);
      detail::conclude(c, w.independent,
                       w.independent
                           ? ""
                           : "block " + vp.labels[w.block] +
                                 " contains the edge " +
                                 detail::edge_witness(r, w.u, w.v));
    }
    out.push_back(std::move(c));
  }

  {  // T14: quotients by maximal ideals give stars
    auto c = detail::check_stub(
        "T14-quotient-star",
        "the graph of the quotient by any maximal ideal is a star");
    if (facts.maximal_idx.empty()) {
      detail::skip(c, "ring has no maximal ideal");
    } else {
      bool ok = true;
      std::string wit;
      for (std::uint32_t mi : facts.maximal_idx) {
        const Ideal& m = facts.ideals[mi];
        QuotientRing q = quotient_ring(r, m.members);
        Graph gq = build_uz(q.ring);
        if (!is_star(gq)) {
          ok = false;
          wit = "quotient by the maximal ideal of size " +
                std::to_string(m.members.count()) + " is not a star";
          break;
        }
      }
      detail::conclude(c, ok, wit);
    }
    out.push_back(std::move(c));
  }

  {  // T15: coset independence under the invertibility hypothesis
    auto c = detail::check_stub(
        "T15-coset-independence",
        "for a proper ideal I with 2+I not invertible in the quotient, the "
        "cosets of I are independent sets");
    bool any_proper = false, any_hyp = false, ok = true, conv = true;
    std::string wit;
    for (const Ideal& idl : facts.ideals) {
      if (!idl.proper) continue;
      any_proper = true;
      // 2+I invertible in R/I  <=>  some y has 2y-1 in I
      bool invertible = false;
      for (Elem y = 0; y < n && !invertible; ++y) {
        Elem t = r.add(r.mul(two, y), r.neg(r.one()));
        if (idl.members.test(t)) invertible = true;
      }
      VertexPartition vp = coset_blocks(r, idl.members);
      auto w = is_partition_independent(g, vp.blocks);
      if (!invertible) {
        any_hyp = true;
        if (!w.independent && ok) {
          ok = false;
          wit = "cosets of the ideal of size " +
                std::to_string(idl.members.count()) +
                " contain the edge " + detail::edge_witness(r, w.u, w.v) +
                " inside " + vp.labels[w.block];
        }
      }
      if (w.independent && invertible) conv = false;
    }
    c.converse_holds = conv;
    if (!any_proper) {
      detail::skip(c, "ring has no proper ideal");
    } else if (!any_hyp) {
      c.status = CheckStatus::Pass;
      c.detail = "no proper ideal satisfies the hypothesis";
    } else {
      detail::conclude(c, ok, wit);
    }
    out.push_back(std::move(c));
  }

  // T16/T17/T18 share the quotient by the Jacobson radical.
  QuotientRing rad = quotient_ring(r, facts.jacobson, r.label() + "/J");
  Graph gq = build_uz(rad.ring);
  std::vector<std::vector<Elem>> coset_members(rad.ring.order());
  for (Elem x = 0; x < n; ++x) coset_members[rad.projection[x]].push_back(x);

  {  // T16: edges of the radical quotient lift to complete joins
    auto c = detail::check_stub(
        "T16-radical-lift",
        "adjacent cosets modulo the Jacobson radical lift to complete joins "
        "between the cosets");
    bool ok = true;
    std::string wit;
    for (const auto& [a, b] : gq.edges()) {
      for (Elem x : coset_members[a]) {
        for (Elem y : coset_members[b]) {
          if (!g.adjacent(x, y)) {
            ok = false;
            wit = "cosets " + rad.ring.element_name(a) + " -- " +
                  rad.ring.element_name(b) + " are adjacent but " +
                  detail::edge_witness(r, x, y) + " is not an edge";
            break;
          }
        }
        if (!ok) break;
      }
      if (!ok) break;
    }
    detail::conclude(c, ok, wit);
    out.push_back(std::move(c));
  }

  {  // T17: edges project to edges between distinct cosets
    auto c = detail::check_stub(
        "T17-radical-project",
        "every edge projects onto an edge between distinct cosets modulo the "
        "Jacobson radical");
    bool ok = true;
    std::string wit;
    for (const auto& [x, y] : g.edges()) {
      Elem a = rad.projection[x], b = rad.projection[y];
      if (a == b || !gq.adjacent(a, b)) {
        ok = false;
        wit = "edge " + detail::edge_witness(r, x, y) +
              " projects to cosets " + rad.ring.element_name(a) + ", " +
              rad.ring.element_name(b);
        break;
      }
    }
    detail::conclude(c, ok, wit);
    out.push_back(std::move(c));
  }

  {  // T18: diameter transfer across the radical quotient
    auto c = detail::check_stub(
        "T18-diameter-equality",
        "for rings of order above two the diameter is preserved by the "
        "radical quotient exactly when that quotient has order above two");
    auto dq = diameter(gq);
    if (n == 2) {
      detail::skip(c, "ring has order two");
    } else if (!inv.diameter || !dq) {
      detail::skip(c, !inv.diameter
                          ? "diameter undefined for the graph"
                          : "diameter undefined for the radical quotient");
    } else {
      bool equal = *inv.diameter == *dq;
      bool rhs = rad.ring.order() != 2;
      std::ostringstream w;
      w << "diameter " << *inv.diameter << ", quotient diameter " << *dq
        << ", quotient order " << rad.ring.order();
      detail::conclude(c, equal == rhs, w.str());
    }
    out.push_back(std::move(c));
  }

  return out;
}

// Checks specific to the rings of integers modulo n.
inline std::vector<TheoremCheck> residue_checks(const FiniteRing& r,
                                                const RingFacts& facts,
                                                const Graph& g,
                                                const InvariantReport& inv) {
  if (r.kind() != RingKind::Modular)
    throw ContractError("residue checks apply only to zn rings, got " +
                        r.label());
  std::vector<TheoremCheck> out;
  const std::uint64_t n = r.order();
  auto pp = prime_power(n);
  const std::uint64_t phi = n >= 1 ? euler_phi(n) : 0;

  {  // Z01: stars at precisely the primes
    auto c = detail::check_stub(
        "Z01-star-prime", "the graph is a star exactly when n is prime");
    if (n < 2) {
      detail::skip(c, "n below two");
    } else {
      std::ostringstream w;
      w << "star: " << (inv.star ? "yes" : "no") << ", n " << n
        << (is_prime(n) ? " prime" : " composite");
      detail::conclude(c, inv.star == is_prime(n), w.str());
    }
    out.push_back(std::move(c));
  }

  {  // Z02: even modulus forces bipartite
    auto c = detail::check_stub("Z02-even-bipartite",
                                "for even n the graph is bipartite");
    c.converse_holds = !inv.bipartite || n % 2 == 0;
    if (n % 2 != 0)
      detail::skip(c, "n is odd");
    else
      detail::conclude(c, inv.bipartite, "graph is not bipartite");
    out.push_back(std::move(c));
  }

  {  // Z03: prime powers give complete bipartite on the expected blocks
    auto c = detail::check_stub(
        "Z03-prime-power-complete-bipartite",
        "for n a power of a prime p the graph is complete bipartite on the "
        "multiples of p and the units");
    bool claim = false;
    std::string wit = "graph is not complete bipartite on those blocks";
    if (pp) {
      Bitset mult(static_cast<std::size_t>(n));
      for (Elem x = 0; x < n; ++x)
        if (x % pp->first == 0) mult.set(x);
      bool blocks_match =
          inv.bipartite && ((inv.part_left == mult &&
                             inv.part_right == facts.units) ||
                            (inv.part_left == facts.units &&
                             inv.part_right == mult));
      std::uint64_t small = n / pp->first;  // p^{k-1}
      claim = inv.complete_bipartite && blocks_match &&
              mult.count() == small && facts.units.count() == phi;
      std::ostringstream w;
      w << "complete bipartite: " << (inv.complete_bipartite ? "yes" : "no")
        << ", blocks match: " << (blocks_match ? "yes" : "no");
      wit = w.str();
    }
    c.converse_holds = !inv.complete_bipartite || pp.has_value();
    if (!pp)
      detail::skip(c, "n is not a prime power");
    else
      detail::conclude(c, claim, wit);
    out.push_back(std::move(c));
  }

  {  // Z04: one block per prime factor plus the units
    auto c = detail::check_stub(
        "Z04-prime-block-partition",
        "the vertices split into at most one more independent block than n "
        "has distinct prime factors");
    if (n < 2) {
      detail::skip(c, "n below two");
    } else {
      auto fac = factorize(n);
      VertexPartition vp;
      vp.blocks.push_back(facts.units);
      vp.labels.push_back("U(R)");
      Bitset used = facts.units;
      for (const auto& [p, k] : fac) {
        (void)k;
        Bitset blk(static_cast<std::size_t>(n));
        for (Elem x = 0; x < n; ++x)
          if (x % p == 0 && !used.test(x)) blk.set(x);
        if (blk.any()) {
          used |= blk;
          vp.blocks.push_back(blk);
          vp.labels.push_back("multiples of " + std::to_string(p));
        }
      }
      vp.validate(static_cast<std::uint32_t>(n));
      auto w = is_partition_independent(g, vp.blocks);
      bool claim = vp.blocks.size() <= fac.size() + 1 && w.independent;
      detail::conclude(c, claim,
                       w.independent
                           ? "too many blocks"
                           : "block " + vp.labels[w.block] +
                                 " contains the edge " +
                                 detail::edge_witness(r, w.u, w.v));
    }
    out.push_back(std::move(c));
  }

  {  // Z05: triangles exactly at odd composite non-prime-powers
    auto c = detail::check_stub(
        "Z05-triangle-characterization",
        "a triangle exists exactly when n is odd, composite, and not a "
        "prime power");
    bool rhs = n % 2 == 1 && n >= 2 && !is_prime(n) && !pp.has_value();
    std::ostringstream w;
    w << "triangle: " << (inv.has_c3 ? "yes" : "no") << ", n " << n;
    detail::conclude(c, inv.has_c3 == rhs, w.str());
    out.push_back(std::move(c));
  }

  {  // Z06: explicit four-cycle in proper prime powers
    auto c = detail::check_stub(
        "Z06-prime-power-four-cycle",
        "for n a proper prime power a four-cycle runs through 0, a unit, p, "
        "and a second unit");
    bool hyp = pp && n / pp->first >= 2 && phi >= 2;
    c.converse_holds = !inv.has_c4 || hyp;
    if (!hyp) {
      detail::skip(c, pp ? "fewer than two units or p is the whole modulus"
                         : "n is not a prime power");
    } else {
      Elem p = static_cast<Elem>(pp->first);
      Elem u1 = 1;
      Elem u2 = static_cast<Elem>(facts.units.find_next(1));
      bool cycle = g.adjacent(0, u1) && g.adjacent(u1, p) &&
                   g.adjacent(p, u2) && g.adjacent(u2, 0);
      std::ostringstream w;
      w << "cycle 0 - " << static_cast<std::uint32_t>(u1) << " - "
        << static_cast<std::uint32_t>(p) << " - "
        << static_cast<std::uint32_t>(u2) << " incomplete";
      detail::conclude(c, cycle && inv.has_c4, w.str());
    }
    out.push_back(std::move(c));
  }

  {  // Z07: four-cycles in all even n from eight up
    auto c = detail::check_stub(
        "Z07-even-four-cycle",
        "for even n of at least eight a four-cycle exists and "
        "(phi(n)-1)^2 > n/2");
    bool hyp = n % 2 == 0 && n >= 8;
    c.converse_holds =
        !(inv.has_c4 && kst_c4_condition(phi, n / 2)) || hyp;
    if (!hyp) {
      detail::skip(c, "n is odd or below eight");
    } else {
      bool cond = kst_c4_condition(phi, n / 2);
      std::ostringstream w;
      w << "four-cycle: " << (inv.has_c4 ? "yes" : "no") << ", phi " << phi
        << ", n/2 " << n / 2 << ", condition " << (cond ? "holds" : "fails");
      detail::conclude(c, inv.has_c4 && cond, w.str());
    }
    out.push_back(std::move(c));
  }

  {  // Z08: cycles exactly at 4 and 6
    auto c = detail::check_stub(
        "Z08-cycle-graph", "the graph is a cycle exactly for n in {4, 6}");
    bool rhs = n == 4 || n == 6;
    std::ostringstream w;
    w << "cycle graph: " << (inv.cycle_graph ? "yes" : "no") << ", n " << n;
    detail::conclude(c, inv.cycle_graph == rhs, w.str());
    out.push_back(std::move(c));
  }

  {  // Z09: paths exactly at 2 and 3
    auto c = detail::check_stub(
        "Z09-path-graph", "the graph is a path exactly for n in {2, 3}");
    if (n < 2) {
      detail::skip(c, "n below two");
    } else {
      bool rhs = n == 2 || n == 3;
      std::ostringstream w;
      w << "path graph: " << (inv.path_graph ? "yes" : "no") << ", n " << n;
      detail::conclude(c, inv.path_graph == rhs, w.str());
    }
    out.push_back(std::move(c));
  }

  {  // Z10: the unit-count condition forces a four-cycle
    auto c = detail::check_stub(
        "Z10-four-cycle-condition",
        "for even n with (phi(n)-1)^2 > n/2 a four-cycle exists");
    bool hyp = n % 2 == 0 && kst_c4_condition(phi, n / 2);
    c.converse_holds = !inv.has_c4 || hyp;
    if (!hyp)
      detail::skip(c, "n is odd or the unit-count condition fails");
    else
      detail::conclude(c, inv.has_c4, "no four-cycle found");
    out.push_back(std::move(c));
  }

  return out;
}

struct RingAnalysis {
  RingFacts facts;
  Graph graph;
  InvariantReport invariants;
  TheoremReport theorems;
};

inline RingAnalysis analyze_ring(const FiniteRing& r,
                                 const Limits& limits = {}) {
  RingAnalysis a;
  a.facts = ring_facts(r, limits.enumeration);
  a.graph = build_uz(r, a.facts.units, a.facts.zero_divisors);
  a.invariants = compute_invariants(a.graph, limits);
  TheoremReport rep;
  rep.ring_label = r.label();
  rep.order = r.order();
  rep.unit_count = static_cast<std::uint32_t>(a.facts.units.count());
  rep.zero_divisor_count =
      static_cast<std::uint32_t>(a.facts.zero_divisors.count());
  rep.maximal_ideal_count =
      static_cast<std::uint32_t>(a.facts.maximal_idx.size());
  rep.is_local = a.facts.is_local;
  rep.is_field = a.facts.is_field;
  rep.checks = structure_checks(r, a.facts, a.graph, a.invariants, limits);
  if (r.kind() == RingKind::Modular) {
    auto zc = residue_checks(r, a.facts, a.graph, a.invariants);
    rep.checks.insert(rep.checks.end(), zc.begin(), zc.end());
  }
  rep.tally();
  a.theorems = std::move(rep);
  return a;
}

inline TheoremReport run_checks(const FiniteRing& r,
                                const Limits& limits = {}) {
  return analyze_ring(r, limits).theorems;
}

}  // namespace uzg
