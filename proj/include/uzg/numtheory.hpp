#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "uzg/errors.hpp"

namespace uzg {

// Prime factorization by trial division, ascending primes.
inline std::vector<std::pair<std::uint64_t, std::uint32_t>> factorize(
    std::uint64_t n) {
  if (n == 0) throw ContractError("factorize: n must be positive");
  std::vector<std::pair<std::uint64_t, std::uint32_t>> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      std::uint32_t k = 0;
      while (n % p == 0) {
        n /= p;
        ++k;
      }
      out.emplace_back(p, k);
    }
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

// (p, k) with n = p^k and k >= 1, or nullopt when n is not a prime power.
inline std::optional<std::pair<std::uint64_t, std::uint32_t>> prime_power(
    std::uint64_t n) {
  if (n < 2) return std::nullopt;
  auto f = factorize(n);
  if (f.size() != 1) return std::nullopt;
  return f[0];
}

// Euler totient via the product formula phi(n) = prod p^(k-1) (p-1).
inline std::uint64_t euler_phi(std::uint64_t n) {
  if (n == 0) throw ContractError("euler_phi: n must be positive");
  std::uint64_t phi = 1;
  for (auto [p, k] : factorize(n)) {
    std::uint64_t pk = 1;
    for (std::uint32_t i = 1; i < k; ++i) pk *= p;
    phi *= pk * (p - 1);
  }
  return phi;
}

}  // namespace uzg
