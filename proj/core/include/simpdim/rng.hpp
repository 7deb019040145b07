#pragma once

#include <cstdint>

namespace simpdim {

// Counter-based generator: one 64-bit word per (seed, stream, index) key,
// splitmix64 finalizer over the mixed key. Stateless, so parallel consumers
// produce identical streams regardless of scheduling.
inline std::uint64_t counter_rng(std::uint64_t seed, std::uint64_t stream,
                                 std::uint64_t index) {
  std::uint64_t z = seed;
  z += 0x9e3779b97f4a7c15ULL * (stream + 1);
  z += 0xbf58476d1ce4e5b9ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  z = z ^ (z >> 31);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace simpdim
