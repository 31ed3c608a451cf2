#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "uzg/errors.hpp"
#include "uzg/graph.hpp"
#include "uzg/limits.hpp"
#include "uzg/planarity.hpp"

namespace uzg {

enum class Tristate { No, Yes, Skipped };

inline const char* to_string(Tristate t) {
  switch (t) {
    case Tristate::No:
      return "false";
    case Tristate::Yes:
      return "true";
    default:
      return "skipped";
  }
}

inline std::vector<std::uint32_t> degree_sequence(const Graph& g) {
  std::vector<std::uint32_t> deg(g.vertex_count());
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) deg[v] = g.degree(v);
  std::sort(deg.rbegin(), deg.rend());
  return deg;
}

inline bool is_connected(const Graph& g) {
  std::uint32_t n = g.vertex_count();
  if (n == 0) return true;
  Bitset seen(n);
  seen.set(0);
  std::queue<std::uint32_t> q;
  q.push(0);
  std::uint32_t reached = 1;
  while (!q.empty()) {
    std::uint32_t x = q.front();
    q.pop();
    const Bitset& nb = g.neighbors(x);
    for (int w = nb.find_first(); w >= 0; w = nb.find_next(w))
      if (!seen.test(w)) {
        seen.set(w);
        ++reached;
        q.push(static_cast<std::uint32_t>(w));
      }
  }
  return reached == n;
}

namespace detail {

// Single-source distances; unreachable vertices stay at kUnreached.
inline constexpr std::uint32_t kUnreached = 0xffffffffu;

inline std::vector<std::uint32_t> bfs_distances(const Graph& g,
                                                std::uint32_t s) {
  std::vector<std::uint32_t> dist(g.vertex_count(), kUnreached);
  dist[s] = 0;
  std::queue<std::uint32_t> q;
  q.push(s);
  while (!q.empty()) {
    std::uint32_t x = q.front();
    q.pop();
    const Bitset& nb = g.neighbors(x);
    for (int w = nb.find_first(); w >= 0; w = nb.find_next(w))
      if (dist[w] == kUnreached) {
        dist[w] = dist[x] + 1;
        q.push(static_cast<std::uint32_t>(w));
      }
  }
  return dist;
}

}  // namespace detail

// Longest shortest path; empty when the graph is disconnected or has fewer
// than two vertices.
inline std::optional<std::uint32_t> diameter(const Graph& g) {
  std::uint32_t n = g.vertex_count();
  if (n < 2) return std::nullopt;
  std::uint32_t best = 0;
  for (std::uint32_t s = 0; s < n; ++s) {
    auto dist = detail::bfs_distances(g, s);
    for (std::uint32_t v = 0; v < n; ++v) {
      if (dist[v] == detail::kUnreached) return std::nullopt;
      best = std::max(best, dist[v]);
    }
  }
  return best;
}

// Shortest cycle length; empty when the graph is acyclic. BFS from every
// root: each non-tree edge closes a walk of length dist[x]+dist[y]+1, and the
// minimum over all roots is exact.
inline std::optional<std::uint32_t> girth(const Graph& g) {
  std::uint32_t n = g.vertex_count();
  std::uint32_t best = detail::kUnreached;
  for (std::uint32_t s = 0; s < n; ++s) {
    std::vector<std::uint32_t> dist(n, detail::kUnreached);
    std::vector<std::uint32_t> parent(n, detail::kUnreached);
    dist[s] = 0;
    std::queue<std::uint32_t> q;
    q.push(s);
    while (!q.empty()) {
      std::uint32_t x = q.front();
      q.pop();
      if (2 * dist[x] >= best) continue;  // no shorter cycle reachable
      const Bitset& nb = g.neighbors(x);
      for (int w = nb.find_first(); w >= 0; w = nb.find_next(w)) {
        if (dist[w] == detail::kUnreached) {
          dist[w] = dist[x] + 1;
          parent[w] = x;
          q.push(static_cast<std::uint32_t>(w));
        } else if (parent[x] != static_cast<std::uint32_t>(w) &&
                   parent[w] != x) {
          best = std::min(best, dist[x] + dist[w] + 1);
        }
      }
    }
  }
  if (best == detail::kUnreached) return std::nullopt;
  return best;
}

struct TwoColoring {
  bool bipartite = true;
  Bitset left, right;                  // color classes when bipartite
  std::vector<std::uint32_t> odd_cycle;  // witness cycle otherwise
};

// BFS two-coloring, component roots ascending, root colored left.
inline TwoColoring two_coloring(const Graph& g) {
  std::uint32_t n = g.vertex_count();
  TwoColoring out;
  out.left = Bitset(n);
  out.right = Bitset(n);
  std::vector<int> color(n, -1);
  std::vector<std::uint32_t> parent(n, 0);
  for (std::uint32_t s = 0; s < n && out.bipartite; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    parent[s] = s;
    std::queue<std::uint32_t> q;
    q.push(s);
    while (!q.empty() && out.bipartite) {
      std::uint32_t x = q.front();
      q.pop();
      const Bitset& nb = g.neighbors(x);
      for (int w = nb.find_first(); w >= 0; w = nb.find_next(w)) {
        if (color[w] == -1) {
          color[w] = 1 - color[x];
          parent[w] = x;
          q.push(static_cast<std::uint32_t>(w));
        } else if (color[w] == color[x]) {
          // ancestor chains up to the root, then strip the shared suffix so
          // the lists meet exactly at the lowest common ancestor
          std::vector<std::uint32_t> a, b;
          for (std::uint32_t t = x;; t = parent[t]) {
            a.push_back(t);
            if (parent[t] == t) break;
          }
          for (std::uint32_t t = static_cast<std::uint32_t>(w);;
               t = parent[t]) {
            b.push_back(t);
            if (parent[t] == t) break;
          }
          while (a.size() > 1 && b.size() > 1 &&
                 a[a.size() - 2] == b[b.size() - 2]) {
            a.pop_back();
            b.pop_back();
          }
          out.odd_cycle.assign(a.begin(), a.end());
          for (std::size_t i = b.size() - 1; i-- > 0;)
            out.odd_cycle.push_back(b[i]);
          out.bipartite = false;
          break;
        }
      }
    }
  }
  if (!out.bipartite) {
    out.left.clear();
    out.right.clear();
    return out;
  }
  for (std::uint32_t v = 0; v < n; ++v)
    (color[v] == 0 ? out.left : out.right).set(v);
  return out;
}

// Connected and every cross pair joined; single vertices and disconnected
// graphs do not qualify.
inline bool is_complete_bipartite(const Graph& g, const TwoColoring& c,
                                  bool connected) {
  if (g.vertex_count() < 2 || !connected || !c.bipartite) return false;
  return g.edge_count() ==
         static_cast<std::uint64_t>(c.left.count()) * c.right.count();
}

inline bool is_complete_bipartite(const Graph& g) {
  return is_complete_bipartite(g, two_coloring(g), is_connected(g));
}

// One center joined to all leaves and nothing else; K_1 and K_2 count.
inline bool is_star(const Graph& g, const TwoColoring& c, bool connected) {
  if (g.vertex_count() == 1) return true;
  if (!is_complete_bipartite(g, c, connected)) return false;
  return std::min(c.left.count(), c.right.count()) == 1;
}

inline bool is_star(const Graph& g) {
  return is_star(g, two_coloring(g), is_connected(g));
}

inline bool is_path_graph(const Graph& g) {
  std::uint32_t n = g.vertex_count();
  if (n == 0) return false;
  if (g.edge_count() != n - 1 || !is_connected(g)) return false;
  for (std::uint32_t v = 0; v < n; ++v)
    if (g.degree(v) > 2) return false;
  return true;
}

inline bool is_cycle_graph(const Graph& g) {
  std::uint32_t n = g.vertex_count();
  if (n < 3 || !is_connected(g)) return false;
  for (std::uint32_t v = 0; v < n; ++v)
    if (g.degree(v) != 2) return false;
  return true;
}

// Closed walk through every edge: at least one edge, connected as a whole
// (isolated vertices disqualify), all degrees even.
inline bool is_eulerian(const Graph& g) {
  if (g.vertex_count() < 2 || g.edge_count() == 0 || !is_connected(g))
    return false;
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) % 2 != 0) return false;
  return true;
}

namespace detail {

class HamiltonSearch {
 public:
  explicit HamiltonSearch(const Graph& g) : g_(g), n_(g.vertex_count()) {}

  // empty result: node budget exhausted, answer unknown
  std::optional<bool> run() {
    visited_ = Bitset(n_);
    visited_.set(0);
    nodes_ = 0;
    int res = extend(0, 1);
    if (res < 0) return std::nullopt;
    return res != 0;
  }

 private:
  static constexpr std::uint64_t kNodeBudget = 20000000;

  // 1 found, 0 exhausted without success, -1 budget blown
  int extend(std::uint32_t cur, std::uint32_t len) {
    if (++nodes_ > kNodeBudget) return -1;
    if (len == n_) return g_.adjacent(cur, 0) ? 1 : 0;
    if (!viable(cur)) return 0;
    const Bitset& nb = g_.neighbors(cur);
    for (int w = nb.find_first(); w >= 0; w = nb.find_next(w)) {
      if (visited_.test(w)) continue;
      visited_.set(w);
      int res = extend(static_cast<std::uint32_t>(w), len + 1);
      visited_.reset(w);
      if (res != 0) return res;
    }
    return 0;
  }

  // Every unvisited vertex still needs two usable neighbors (unvisited, the
  // current endpoint, or the start), and the unvisited region plus both
  // endpoints must be connected.
  bool viable(std::uint32_t cur) {
    Bitset usable = visited_;
    usable.reset(cur);
    usable.reset(0);
    for (std::uint32_t v = 0; v < n_; ++v) {
      if (visited_.test(v)) continue;
      Bitset nb = g_.neighbors(v);
      nb.subtract(usable);
      if (nb.count() < 2) return false;
    }
    Bitset region(n_);
    std::queue<std::uint32_t> q;
    q.push(cur);
    region.set(cur);
    while (!q.empty()) {
      std::uint32_t x = q.front();
      q.pop();
      const Bitset& nb = g_.neighbors(x);
      for (int w = nb.find_first(); w >= 0; w = nb.find_next(w))
        if (!region.test(w) && !usable.test(w)) {
          region.set(w);
          q.push(static_cast<std::uint32_t>(w));
        }
    }
    for (std::uint32_t v = 0; v < n_; ++v)
      if (!visited_.test(v) && !region.test(v)) return false;
    return region.test(0) || visited_.count() == 1;
  }

  const Graph& g_;
  std::uint32_t n_;
  Bitset visited_;
  std::uint64_t nodes_ = 0;
};

class MaxCliqueSearch {
 public:
  explicit MaxCliqueSearch(const Graph& g) : g_(g), n_(g.vertex_count()) {}

  std::uint32_t run() {
    Bitset r(n_), p(n_), x(n_);
    for (std::uint32_t v = 0; v < n_; ++v) p.set(v);
    expand(r, p, x);
    return best_;
  }

 private:
  void expand(Bitset& r, Bitset p, Bitset x) {
    if (p.none() && x.none()) {
      best_ = std::max(best_, static_cast<std::uint32_t>(r.count()));
      return;
    }
    if (r.count() + p.count() <= best_) return;
    // pivot: vertex of p|x covering the most of p
    Bitset px = p | x;
    int pivot = -1;
    std::size_t cover = 0;
    for (int u = px.find_first(); u >= 0; u = px.find_next(u)) {
      std::size_t c = (p & g_.neighbors(u)).count();
      if (pivot < 0 || c > cover) {
        pivot = u;
        cover = c;
      }
    }
    Bitset cands = p;
    if (pivot >= 0) cands.subtract(g_.neighbors(pivot));
    for (int v = cands.find_first(); v >= 0; v = cands.find_next(v)) {
      r.set(v);
      expand(r, p & g_.neighbors(v), x & g_.neighbors(v));
      r.reset(v);
      p.reset(v);
      x.set(v);
    }
  }

  const Graph& g_;
  std::uint32_t n_;
  std::uint32_t best_ = 0;
};

inline std::uint32_t greedy_coloring_bound(const Graph& g) {
  std::uint32_t n = g.vertex_count(), used = 0;
  std::vector<int> color(n, -1);
  for (std::uint32_t v = 0; v < n; ++v) {
    std::vector<bool> taken(used + 1, false);
    const Bitset& nb = g.neighbors(v);
    for (int w = nb.find_first(); w >= 0; w = nb.find_next(w))
      if (color[w] >= 0) taken[color[w]] = true;
    std::uint32_t c = 0;
    while (taken[c]) ++c;
    color[v] = static_cast<int>(c);
    used = std::max(used, c + 1);
  }
  return used;
}

class KColoringSearch {
 public:
  KColoringSearch(const Graph& g, std::uint32_t k)
      : g_(g), n_(g.vertex_count()), k_(k) {
    order_.resize(n_);
    for (std::uint32_t v = 0; v < n_; ++v) order_[v] = v;
    std::sort(order_.begin(), order_.end(),
              [&](std::uint32_t a, std::uint32_t b) {
                return g_.degree(a) != g_.degree(b)
                           ? g_.degree(a) > g_.degree(b)
                           : a < b;
              });
    color_.assign(n_, -1);
  }

  bool run() { return place(0, 0); }

 private:
  bool place(std::uint32_t idx, std::uint32_t used) {
    if (idx == n_) return true;
    std::uint32_t v = order_[idx];
    std::uint32_t cap = std::min(k_, used + 1);  // symmetry break
    for (std::uint32_t c = 0; c < cap; ++c) {
      bool ok = true;
      const Bitset& nb = g_.neighbors(v);
      for (int w = nb.find_first(); w >= 0; w = nb.find_next(w))
        if (color_[w] == static_cast<int>(c)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      color_[v] = static_cast<int>(c);
      if (place(idx + 1, std::max(used, c + 1))) return true;
      color_[v] = -1;
    }
    return false;
  }

  const Graph& g_;
  std::uint32_t n_, k_;
  std::vector<std::uint32_t> order_;
  std::vector<int> color_;
};

}  // namespace detail

inline std::optional<std::uint32_t> clique_number(const Graph& g,
                                                  std::uint32_t limit) {
  if (g.vertex_count() > limit) return std::nullopt;
  if (g.vertex_count() == 0) return 0;
  return detail::MaxCliqueSearch(g).run();
}

inline std::optional<std::uint32_t> chromatic_number(const Graph& g,
                                                     std::uint32_t limit) {
  std::uint32_t n = g.vertex_count();
  if (n == 0) return 0;
  if (g.edge_count() == 0) return 1;
  TwoColoring c = two_coloring(g);
  if (c.bipartite) return 2;
  if (n > limit) return std::nullopt;
  std::uint32_t lb = detail::MaxCliqueSearch(g).run();
  std::uint32_t ub = detail::greedy_coloring_bound(g);
  for (std::uint32_t k = std::max<std::uint32_t>(lb, 3); k < ub; ++k)
    if (detail::KColoringSearch(g, k).run()) return k;
  return ub;
}

inline Graph complement_graph(const Graph& g) {
  Graph c(g.vertex_count(), g.label());
  for (std::uint32_t u = 0; u < g.vertex_count(); ++u)
    for (std::uint32_t v = u + 1; v < g.vertex_count(); ++v)
      if (!g.adjacent(u, v)) c.add_edge(u, v);
  return c;
}

inline std::optional<std::uint32_t> independence_number(const Graph& g,
                                                        std::uint32_t limit) {
  if (g.vertex_count() > limit) return std::nullopt;
  if (g.vertex_count() == 0) return 0;
  return detail::MaxCliqueSearch(complement_graph(g)).run();
}

// Spanning cycle decision with structural fast paths; exhaustive search only
// below the vertex limit, above it (or past the node budget) the answer is
// Skipped.
inline Tristate hamiltonian_decision(const Graph& g, std::uint32_t limit) {
  std::uint32_t n = g.vertex_count();
  if (n < 3) return Tristate::No;
  if (!is_connected(g)) return Tristate::No;
  std::uint32_t min_deg = g.degree(0);
  for (std::uint32_t v = 1; v < n; ++v)
    min_deg = std::min(min_deg, g.degree(v));
  if (min_deg < 2) return Tristate::No;
  TwoColoring c = two_coloring(g);
  if (c.bipartite) {
    if (c.left.count() != c.right.count()) return Tristate::No;
    if (is_complete_bipartite(g, c, true)) return Tristate::Yes;
  }
  if (is_cycle_graph(g)) return Tristate::Yes;
  if (2 * min_deg >= n) return Tristate::Yes;  // Dirac bound
  if (n > limit) return Tristate::Skipped;
  // a spanning cycle tolerates no independent set beyond half the vertices
  std::uint32_t alpha = detail::MaxCliqueSearch(complement_graph(g)).run();
  if (2 * alpha > n) return Tristate::No;
  auto res = detail::HamiltonSearch(g).run();
  if (!res) return Tristate::Skipped;
  return *res ? Tristate::Yes : Tristate::No;
}

namespace detail {

class DominationSearch {
 public:
  explicit DominationSearch(const Graph& g) : g_(g), n_(g.vertex_count()) {
    closed_.reserve(n_);
    for (std::uint32_t v = 0; v < n_; ++v) {
      Bitset b = g_.neighbors(v);
      b.set(v);
      max_cover_ = std::max(max_cover_, static_cast<std::uint32_t>(b.count()));
      closed_.push_back(std::move(b));
    }
  }

  // iterative deepening from the covering lower bound
  std::uint32_t run() {
    std::uint32_t k = (n_ + max_cover_ - 1) / max_cover_;
    for (;; ++k) {
      Bitset dominated(n_);
      if (attempt(dominated, k)) return k;
    }
  }

 private:
  bool attempt(const Bitset& dominated, std::uint32_t budget) {
    std::uint32_t covered = static_cast<std::uint32_t>(dominated.count());
    if (covered == n_) return true;
    if (budget == 0) return false;
    if (static_cast<std::uint64_t>(budget) * max_cover_ < n_ - covered)
      return false;
    std::uint32_t v = 0;  // first undominated vertex; branch on its dominators
    while (dominated.test(v)) ++v;
    const Bitset& nb = closed_[v];
    for (int u = nb.find_first(); u >= 0; u = nb.find_next(u))
      if (attempt(dominated | closed_[u], budget - 1)) return true;
    return false;
  }

  const Graph& g_;
  std::uint32_t n_;
  std::vector<Bitset> closed_;
  std::uint32_t max_cover_ = 1;
};

}  // namespace detail

inline std::optional<std::uint32_t> domination_number(const Graph& g,
                                                      std::uint32_t limit) {
  if (g.vertex_count() > limit) return std::nullopt;
  if (g.vertex_count() == 0) return 0;
  return detail::DominationSearch(g).run();
}

// Vertices of some triangle, least such triple in lexicographic order.
inline std::optional<std::array<std::uint32_t, 3>> find_triangle(
    const Graph& g) {
  for (std::uint32_t u = 0; u < g.vertex_count(); ++u) {
    const Bitset& nu = g.neighbors(u);
    for (int v = nu.find_next(u); v >= 0; v = nu.find_next(v)) {
      Bitset common = nu & g.neighbors(v);
      int w = common.find_next(v);
      if (w >= 0)
        return std::array<std::uint32_t, 3>{u, static_cast<std::uint32_t>(v),
                                            static_cast<std::uint32_t>(w)};
    }
  }
  return std::nullopt;
}

inline bool has_c3(const Graph& g) { return find_triangle(g).has_value(); }

// Vertices of some four-cycle in cyclic order u, w1, v, w2: any pair with two
// common neighbours closes one.
inline std::optional<std::array<std::uint32_t, 4>> find_c4(const Graph& g) {
  for (std::uint32_t u = 0; u < g.vertex_count(); ++u)
    for (std::uint32_t v = u + 1; v < g.vertex_count(); ++v) {
      Bitset common = g.neighbors(u) & g.neighbors(v);
      int w1 = common.find_first();
      if (w1 < 0) continue;
      int w2 = common.find_next(w1);
      if (w2 < 0) continue;
      return std::array<std::uint32_t, 4>{u, static_cast<std::uint32_t>(w1), v,
                                          static_cast<std::uint32_t>(w2)};
    }
  return std::nullopt;
}

inline bool has_c4(const Graph& g) { return find_c4(g).has_value(); }

// Zarankiewicz-type sufficient condition: t >= 2 and (t-1)^2 > r forces a
// four-cycle in any K_{t,r}-free-violating bipartite incidence; exact integer
// arithmetic.
inline bool kst_c4_condition(std::uint64_t t, std::uint64_t r) {
  if (t < 2) return false;
  return (t - 1) * (t - 1) > r;
}

struct IndependenceWitness {
  bool independent = true;
  std::uint32_t u = 0, v = 0;  // offending edge when not independent
  std::size_t block = 0;       // block containing it
};

// Checks that every block spans no edge.
inline IndependenceWitness is_partition_independent(
    const Graph& g, const std::vector<Bitset>& blocks) {
  IndependenceWitness w;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const Bitset& blk = blocks[b];
    for (int u = blk.find_first(); u >= 0; u = blk.find_next(u)) {
      Bitset inside = g.neighbors(u) & blk;
      int v = inside.find_next(u);
      if (v >= 0) {
        w.independent = false;
        w.u = static_cast<std::uint32_t>(u);
        w.v = static_cast<std::uint32_t>(v);
        w.block = b;
        return w;
      }
    }
  }
  return w;
}

struct InvariantReport {
  std::uint32_t vertex_count = 0;
  std::uint64_t edge_count = 0;
  std::vector<std::uint32_t> degree_sequence;  // descending
  std::uint32_t max_degree = 0, min_degree = 0;
  bool regular = false;
  bool connected = false;
  std::optional<std::uint32_t> diameter;  // empty: disconnected or < 2 vertices
  std::optional<std::uint32_t> girth;     // empty: acyclic
  bool bipartite = false;
  Bitset part_left, part_right;            // color classes when bipartite
  std::vector<std::uint32_t> odd_cycle;    // witness when not bipartite
  bool complete_bipartite = false;
  bool star = false;
  bool path_graph = false;
  bool cycle_graph = false;
  bool eulerian = false;
  bool planar = false;
  Tristate hamiltonian = Tristate::Skipped;
  std::optional<std::uint32_t> clique_number;        // empty above limit
  std::optional<std::uint32_t> chromatic_number;     // empty above limit
  std::optional<std::uint32_t> independence_number;  // empty above limit
  std::optional<std::uint32_t> domination_number;    // empty above limit
  bool has_c3 = false;
  bool has_c4 = false;
};

inline InvariantReport compute_invariants(const Graph& g,
                                          const Limits& limits = {}) {
  InvariantReport r;
  r.vertex_count = g.vertex_count();
  r.edge_count = g.edge_count();
  r.degree_sequence = degree_sequence(g);
  if (!r.degree_sequence.empty()) {
    r.max_degree = r.degree_sequence.front();
    r.min_degree = r.degree_sequence.back();
  }
  r.regular = r.max_degree == r.min_degree && r.vertex_count > 0;
  r.connected = is_connected(g);
  r.diameter = diameter(g);
  r.girth = girth(g);
  TwoColoring c = two_coloring(g);
  r.bipartite = c.bipartite;
  r.part_left = c.left;
  r.part_right = c.right;
  r.odd_cycle = c.odd_cycle;
  r.complete_bipartite = is_complete_bipartite(g, c, r.connected);
  r.star = is_star(g, c, r.connected);
  r.path_graph = is_path_graph(g);
  r.cycle_graph = is_cycle_graph(g);
  r.eulerian = is_eulerian(g);
  r.planar = is_planar(g);
  r.hamiltonian = hamiltonian_decision(g, limits.hamiltonian);
  r.clique_number = clique_number(g, limits.clique);
  r.chromatic_number = chromatic_number(g, limits.chromatic);
  r.independence_number = independence_number(g, limits.independence);
  r.domination_number = domination_number(g, limits.domination);
  r.has_c3 = has_c3(g);
  r.has_c4 = has_c4(g);
  return r;
}

}  // namespace uzg
