#pragma once

#include <bit>
#include <cstdint>

// Single-word bitmask arithmetic over Z_n for n <= 64. This is the hot
// path shared by the search oracle and the exhaustive verification
// sweeps; semantics match ResidueSet bit for bit.
namespace sumset::mask64 {

constexpr std::uint64_t all(int n) {
  return n >= 64 ? ~0ULL : ((1ULL << n) - 1);
}

constexpr std::uint64_t bit(int r) { return 1ULL << r; }

/// Rotate the low n bits left by s (residue shift by +s mod n).
constexpr std::uint64_t rot(std::uint64_t m, int s, int n) {
  s %= n;
  if (s == 0) return m;
  return ((m << s) | (m >> (n - s))) & all(n);
}

/// Restricted self-sumset of the set encoded by m, as a mask over Z_n.
constexpr std::uint64_t restricted_sumset(std::uint64_t m, int n) {
  std::uint64_t out = 0;
  std::uint64_t rest = m;
  while (rest != 0) {
    const int a = std::countr_zero(rest);
    rest &= rest - 1;
    out |= rot(m & ~bit(a), a, n);
  }
  return out;
}

inline int popcount(std::uint64_t m) { return std::popcount(m); }

}  // namespace sumset::mask64
