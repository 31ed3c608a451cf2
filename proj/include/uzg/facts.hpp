#pragma once

#include <cstdint>
#include <vector>

#include "uzg/bitset.hpp"
#include "uzg/ideals.hpp"
#include "uzg/limits.hpp"
#include "uzg/ring.hpp"

namespace uzg {

// {x : exists y with x*y = 1}. In the trivial ring 0 = 1 is a unit.
inline Bitset units(const FiniteRing& r) {
  Bitset u(r.order());
  for (Elem x = 0; x < r.order(); ++x)
    for (Elem y = x; y < r.order(); ++y)
      if (r.mul(x, y) == r.one()) {
        u.set(x);
        u.set(y);
        break;
      }
  return u;
}

// {x : exists y != 0 with x*y = 0}. Zero itself qualifies whenever the ring
// has a nonzero element, so 0 is a zero divisor for every |R| >= 2 and the
// trivial ring has none.
inline Bitset zero_divisors(const FiniteRing& r) {
  Bitset z(r.order());
  for (Elem x = 0; x < r.order(); ++x)
    for (Elem y = 0; y < r.order(); ++y) {
      if (y == r.zero()) continue;
      if (r.mul(x, y) == r.zero()) {
        z.set(x);
        break;
      }
    }
  return z;
}

// Full algebraic anatomy of a ring, computed once and shared by the graph
// builder and the theorem checks.
struct RingFacts {
  Bitset units;
  Bitset zero_divisors;
  std::vector<Ideal> ideals;                // size asc, {0} first, R last
  std::vector<std::uint32_t> maximal_idx;   // indices into `ideals`
  Bitset jacobson;
  bool is_local = false;
  bool is_field = false;

  std::vector<Ideal> maximal_ideals_list() const {
    std::vector<Ideal> out;
    out.reserve(maximal_idx.size());
    for (auto i : maximal_idx) out.push_back(ideals[i]);
    return out;
  }
};

inline RingFacts ring_facts(const FiniteRing& r,
                            std::uint32_t enumeration_limit =
                                Limits{}.enumeration) {
  RingFacts f;
  f.units = units(r);
  f.zero_divisors = zero_divisors(r);
  f.ideals = ideals(r, enumeration_limit);
  std::vector<Ideal> maxi = maximal_ideals(f.ideals);
  for (std::uint32_t i = 0; i < f.ideals.size(); ++i)
    if (f.ideals[i].maximal) f.maximal_idx.push_back(i);
  f.jacobson = jacobson_radical(r, maxi);
  f.is_local = maxi.size() == 1;
  // A field is a nontrivial ring whose nonzero elements are all units.
  if (r.order() >= 2) {
    Bitset nonzero(r.order());
    for (Elem x = 0; x < r.order(); ++x)
      if (x != r.zero()) nonzero.set(x);
    f.is_field = f.units == nonzero;
  }
  return f;
}

}  // namespace uzg
