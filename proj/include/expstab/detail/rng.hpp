#pragma once

// detail/rng.hpp — splitmix64-based deterministic draws. Keyed by
// (seed, n, slot) so access is total and order-independent; identical output
// on any platform.

#include <cstdint>

namespace expstab::detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline double unit_double(std::uint64_t seed, std::uint64_t n,
                          std::uint64_t slot) {
  std::uint64_t x = splitmix64(seed ^ 0x243f6a8885a308d3ULL);
  x = splitmix64(x ^ n);
  x = splitmix64(x ^ (slot * 0x9e3779b97f4a7c15ULL + 1));
  return double(x >> 11) * 0x1.0p-53;  // 53 mantissa bits -> [0, 1)
}

}  // namespace expstab::detail
