#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "uzg/bitset.hpp"
#include "uzg/errors.hpp"
#include "uzg/limits.hpp"
#include "uzg/ring.hpp"

namespace uzg {

struct Ideal {
  Bitset members;
  std::vector<Elem> generators;  // informational; members = closure of these
  bool proper = false;           // one not a member
  bool maximal = false;
};

// Checks the ideal axioms for `members`, writing a concrete witness of the
// first violation into *why when given.
inline bool is_ideal(const FiniteRing& r, const Bitset& members,
                     std::string* why = nullptr) {
  auto explain = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (members.size() != r.order())
    return explain("member set sized for order " +
                   std::to_string(members.size()) + " but ring " + r.label() +
                   " has order " + std::to_string(r.order()));
  if (!members.test(r.zero())) return explain("0 is not a member");
  for (int i = members.find_first(); i >= 0; i = members.find_next(i)) {
    Elem a = static_cast<Elem>(i);
    for (int j = members.find_next(i); j >= 0; j = members.find_next(j)) {
      Elem b = static_cast<Elem>(j);
      if (!members.test(r.add(a, b)))
        return explain("not closed under addition: " + std::to_string(a) +
                       " + " + std::to_string(b) + " = " +
                       std::to_string(r.add(a, b)) + " is not a member");
    }
    Elem s = r.add(a, a);
    if (!members.test(s))
      return explain("not closed under addition: " + std::to_string(a) +
                     " + " + std::to_string(a) + " = " + std::to_string(s) +
                     " is not a member");
    if (!members.test(r.neg(a)))
      return explain("not closed under negation: -" + std::to_string(a) +
                     " = " + std::to_string(r.neg(a)) + " is not a member");
    for (Elem x = 0; x < r.order(); ++x)
      if (!members.test(r.mul(x, a)))
        return explain("not closed under ring multiplication: " +
                       std::to_string(x) + " * " + std::to_string(a) + " = " +
                       std::to_string(r.mul(x, a)) + " is not a member");
  }
  return true;
}

// Members of the principal ideal <a> = R*a.
inline Bitset principal_ideal_members(const FiniteRing& r, Elem a) {
  Bitset m(r.order());
  for (Elem x = 0; x < r.order(); ++x) m.set(r.mul(x, a));
  return m;
}

// Every ideal of r: all principal ideals closed under pairwise ideal sums
// until fixpoint. Output is sorted by (cardinality, member order) and always
// contains {0} and R. Guarded by the enumeration limit.
inline std::vector<Ideal> ideals(const FiniteRing& r,
                                 std::uint32_t enumeration_limit =
                                     Limits{}.enumeration) {
  if (r.order() > enumeration_limit)
    throw LimitError("ideals: ring order " + std::to_string(r.order()) +
                     " exceeds the enumeration limit " +
                     std::to_string(enumeration_limit));
  std::vector<Ideal> found;
  std::unordered_set<Bitset, BitsetHash> seen;
  auto add_ideal = [&](Bitset m, std::vector<Elem> gens) {
    if (seen.insert(m).second) {
      Ideal id;
      id.proper = !m.test(r.one());
      id.members = std::move(m);
      std::sort(gens.begin(), gens.end());
      gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
      id.generators = std::move(gens);
      found.push_back(std::move(id));
      return true;
    }
    return false;
  };
  for (Elem a = 0; a < r.order(); ++a)
    add_ideal(principal_ideal_members(r, a), {a});
  // Pairwise sums I+J = {i+j} until no new ideal appears. Only pairs
  // involving a newly added ideal need revisiting.
  std::size_t fresh_from = 0;
  while (fresh_from < found.size()) {
    std::size_t fresh_to = found.size();
    for (std::size_t i = fresh_from; i < fresh_to; ++i)
      for (std::size_t j = 0; j < fresh_to; ++j) {
        const Bitset& a = found[i].members;
        const Bitset& b = found[j].members;
        if (a.is_subset_of(b) || b.is_subset_of(a)) continue;
        Bitset sum(r.order());
        for (int x = a.find_first(); x >= 0; x = a.find_next(x))
          for (int y = b.find_first(); y >= 0; y = b.find_next(y))
            sum.set(r.add(static_cast<Elem>(x), static_cast<Elem>(y)));
        std::vector<Elem> gens = found[i].generators;
        gens.insert(gens.end(), found[j].generators.begin(),
                    found[j].generators.end());
        add_ideal(std::move(sum), std::move(gens));
      }
    fresh_from = fresh_to;
  }
  std::sort(found.begin(), found.end(), [](const Ideal& a, const Ideal& b) {
    return Bitset::set_order_less(a.members, b.members);
  });
  return found;
}

// Marks and returns the proper ideals maximal under inclusion, preserving
// the (size, member order) sorting of `all`.
inline std::vector<Ideal> maximal_ideals(std::vector<Ideal>& all) {
  std::vector<Ideal> out;
  for (auto& cand : all) {
    if (!cand.proper) continue;
    bool maximal = true;
    for (const auto& other : all) {
      if (!other.proper || &other == &cand) continue;
      if (cand.members.is_subset_of(other.members) &&
          cand.members != other.members) {
        maximal = false;
        break;
      }
    }
    cand.maximal = maximal;
    if (maximal) out.push_back(cand);
  }
  return out;
}

// Intersection of all maximal ideals; {0} for the trivial ring, which has
// none.
inline Bitset jacobson_radical(const FiniteRing& r,
                               const std::vector<Ideal>& maximals) {
  if (maximals.empty()) {
    Bitset z(r.order());
    z.set(r.zero());
    return z;
  }
  Bitset j = maximals.front().members;
  for (std::size_t i = 1; i < maximals.size(); ++i) j &= maximals[i].members;
  return j;
}

// Additive cosets of an ideal's member set, ordered by their least element;
// block k's representative is reps[k] = min(blocks[k]).
struct CosetPartition {
  std::vector<Bitset> blocks;
  std::vector<Elem> reps;
};

inline CosetPartition cosets(const FiniteRing& r, const Bitset& members) {
  if (members.size() != r.order())
    throw ContractError("cosets: ideal sized for order " +
                        std::to_string(members.size()) + " but ring " +
                        r.label() + " has order " +
                        std::to_string(r.order()));
  CosetPartition out;
  Bitset seen(r.order());
  for (Elem x = 0; x < r.order(); ++x) {
    if (seen.test(x)) continue;
    Bitset block(r.order());
    for (int i = members.find_first(); i >= 0; i = members.find_next(i))
      block.set(r.add(x, static_cast<Elem>(i)));
    seen |= block;
    out.blocks.push_back(std::move(block));
    out.reps.push_back(x);
  }
  return out;
}

struct QuotientRing {
  FiniteRing ring;
  std::vector<Elem> projection;  // element of R -> coset index in R/I
  std::vector<Elem> reps;        // coset index -> least representative in R
};

// R/I with the canonical projection. I must be an ideal; the first violated
// closure is reported otherwise. Cosets are indexed by ascending least
// representative and the induced tables are re-verified as ring axioms.
inline QuotientRing quotient_ring(const FiniteRing& r, const Bitset& members,
                                  std::string label = "") {
  std::string why;
  if (!is_ideal(r, members, &why))
    throw ContractError("quotient_ring: not an ideal of " + r.label() + ": " +
                        why);
  CosetPartition parts = cosets(r, members);
  std::uint32_t q = static_cast<std::uint32_t>(parts.blocks.size());
  std::vector<Elem> proj(r.order());
  for (std::uint32_t k = 0; k < q; ++k) {
    const Bitset& b = parts.blocks[k];
    for (int i = b.find_first(); i >= 0; i = b.find_next(i))
      proj[static_cast<Elem>(i)] = k;
  }
  std::vector<std::vector<Elem>> add(q, std::vector<Elem>(q));
  std::vector<std::vector<Elem>> mul(q, std::vector<Elem>(q));
  for (std::uint32_t i = 0; i < q; ++i)
    for (std::uint32_t j = 0; j < q; ++j) {
      add[i][j] = proj[r.add(parts.reps[i], parts.reps[j])];
      mul[i][j] = proj[r.mul(parts.reps[i], parts.reps[j])];
    }
  if (label.empty()) label = r.label() + "/quot";
  QuotientRing out{FiniteRing::from_tables(std::move(label), add, mul,
                                           /*verify=*/true),
                   std::move(proj), std::move(parts.reps)};
  std::vector<std::string> names(q);
  for (std::uint32_t k = 0; k < q; ++k)
    names[k] = r.element_name(out.reps[k]);
  out.ring.set_element_names(std::move(names));
  return out;
}

}  // namespace uzg
