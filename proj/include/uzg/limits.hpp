#pragma once

#include <cstdint>

namespace uzg {

// Size caps for every enumeration or exponential search. Exceeding
// `enumeration` is a LimitError; exceeding a per-invariant vertex cap makes
// the invariant report "skipped" instead of a value.
struct Limits {
  std::uint32_t enumeration = 512;  // ring materialization / ideal listing
  std::uint32_t hamiltonian = 32;   // backtracking Hamiltonian search
  std::uint32_t clique = 40;
  std::uint32_t chromatic = 40;
  std::uint32_t independence = 40;
  std::uint32_t domination = 32;
  std::uint32_t planarity_subdivision = 64;  // exhaustive subdivision search
};

}  // namespace uzg
