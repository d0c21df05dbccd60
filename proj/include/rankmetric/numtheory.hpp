#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace rankmetric::nt {

inline std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  while (exp--) r *= base;
  return r;
}

// Non-negative residue of a mod m (m > 0).
inline std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

inline std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  unsigned __int128 r = 1 % m, x = b % m;
  while (e) {
    if (e & 1) r = r * x % m;
    x = x * x % m;
    e >>= 1;
  }
  return static_cast<std::uint64_t>(r);
}

// Inverse of a modulo a prime p (a != 0 mod p).
inline std::uint32_t inv_mod_prime(std::uint32_t a, std::uint32_t p) {
  return static_cast<std::uint32_t>(powmod(a, p - 2, p));
}

bool is_prime(std::uint64_t v);
std::vector<std::uint64_t> prime_factors(std::uint64_t v);  // distinct, ascending
std::vector<std::uint64_t> divisors(std::uint64_t v);       // ascending

// gcd over a list (gcd of the empty list is 0).
inline std::int64_t gcd_all(const std::vector<std::int64_t>& xs) {
  std::int64_t g = 0;
  for (auto x : xs) g = std::gcd(g, x < 0 ? -x : x);
  return g;
}

}  // namespace rankmetric::nt
