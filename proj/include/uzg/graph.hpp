#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "uzg/bitset.hpp"
#include "uzg/errors.hpp"
#include "uzg/facts.hpp"
#include "uzg/ring.hpp"

namespace uzg {

// Simple undirected graph on vertices 0..n-1, dense symmetric bitset
// adjacency. Rows double as neighborhood sets for the invariant algorithms.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::uint32_t n, std::string label = "")
      : n_(n), adj_(n, Bitset(n)), label_(std::move(label)) {}

  std::uint32_t vertex_count() const { return n_; }
  std::uint64_t edge_count() const { return edges_; }
  const std::string& label() const { return label_; }

  void add_edge(std::uint32_t u, std::uint32_t v) {
    if (u >= n_ || v >= n_)
      throw ContractError("add_edge: vertex out of range");
    if (u == v) throw ContractError("add_edge: loops are not allowed");
    if (adj_[u].test(v)) return;
    adj_[u].set(v);
    adj_[v].set(u);
    ++edges_;
  }

  bool adjacent(std::uint32_t u, std::uint32_t v) const {
    return adj_[u].test(v);
  }
  const Bitset& neighbors(std::uint32_t u) const { return adj_[u]; }
  std::uint32_t degree(std::uint32_t u) const { return adj_[u].count(); }

  // Edges as (u, v) with u < v, ascending.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges() const {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    out.reserve(edges_);
    for (std::uint32_t u = 0; u < n_; ++u)
      for (int v = adj_[u].find_next(u); v >= 0; v = adj_[u].find_next(v))
        out.emplace_back(u, static_cast<std::uint32_t>(v));
    return out;
  }

 private:
  std::uint32_t n_ = 0;
  std::vector<Bitset> adj_;
  std::uint64_t edges_ = 0;
  std::string label_;
};

// The unit-zero divisor graph: vertices are all ring elements, and distinct
// x, y are adjacent iff x + y is a unit and x * y is a zero divisor. Edges
// come straight from the definition, one pair at a time, so this builder is
// its own ground truth.
inline Graph build_uz(const FiniteRing& r, const Bitset& units_set,
                      const Bitset& zdivs_set) {
  if (units_set.size() != r.order() || zdivs_set.size() != r.order())
    throw ContractError("build_uz: unit/zero-divisor sets sized for a "
                        "different ring than " + r.label());
  Graph g(r.order(), r.label());
  for (Elem x = 0; x < r.order(); ++x)
    for (Elem y = x + 1; y < r.order(); ++y)
      if (units_set.test(r.add(x, y)) && zdivs_set.test(r.mul(x, y)))
        g.add_edge(x, y);
  return g;
}

inline Graph build_uz(const FiniteRing& r) {
  return build_uz(r, units(r), zero_divisors(r));
}

// Labeled partition of a vertex set; blocks are disjoint and nonempty and
// together cover 0..n-1.
struct VertexPartition {
  std::vector<Bitset> blocks;
  std::vector<std::string> labels;

  void validate(std::uint32_t n) const {
    Bitset seen(n);
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      if (blocks[i].none())
        throw ContractError("vertex partition: block " + labels[i] +
                            " is empty");
      if (seen.intersects(blocks[i]))
        throw ContractError("vertex partition: block " + labels[i] +
                            " overlaps an earlier block");
      seen |= blocks[i];
    }
    if (seen.count() != n)
      throw ContractError("vertex partition: blocks do not cover the vertex "
                          "set");
  }
};

// Blocks: U(R); the largest maximal ideal in full; every further maximal
// ideal minus everything already placed. Empty residual blocks are dropped.
// Maximal ideals are taken largest first (ties by member order) so the block
// list is deterministic. The trivial ring has no maximal ideal and is
// rejected.
inline VertexPartition maximal_ideal_partition(const FiniteRing& r,
                                               const RingFacts& facts) {
  if (facts.maximal_idx.empty())
    throw ContractError("maximal_ideal_partition: " + r.label() +
                        " has no maximal ideal");
  std::vector<Ideal> maxi = facts.maximal_ideals_list();
  std::sort(maxi.begin(), maxi.end(), [](const Ideal& a, const Ideal& b) {
    return Bitset::set_order_less(b.members, a.members);
  });
  VertexPartition p;
  p.blocks.push_back(facts.units);
  p.labels.push_back("U(R)");
  Bitset used = facts.units;
  for (std::size_t k = 0; k < maxi.size(); ++k) {
    Bitset block = maxi[k].members;
    block.subtract(used);
    if (block.none()) continue;
    used |= block;
    p.blocks.push_back(std::move(block));
    p.labels.push_back("M" + std::to_string(k + 1) + (k == 0 ? "" : "*"));
  }
  p.validate(r.order());
  return p;
}

// Additive cosets of an ideal as a vertex partition, blocks by ascending
// least representative, labeled "<rep>+I".
inline VertexPartition coset_blocks(const FiniteRing& r, const Bitset& ideal_members) {
  std::string why;
  if (!is_ideal(r, ideal_members, &why))
    throw ContractError("coset_blocks: not an ideal of " + r.label() + ": " +
                        why);
  CosetPartition parts = cosets(r, ideal_members);
  VertexPartition p;
  for (std::size_t k = 0; k < parts.blocks.size(); ++k) {
    p.blocks.push_back(parts.blocks[k]);
    p.labels.push_back(r.element_name(parts.reps[k]) + "+I");
  }
  p.validate(r.order());
  return p;
}

}  // namespace uzg
