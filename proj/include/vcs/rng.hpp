#pragma once
#include <cstdint>
#include <random>

namespace vcs {

// splitmix64 step; used to derive independent component seeds from one root
// seed so that every sketch sees its own deterministic randomness.
inline uint64_t splitmix64(uint64_t& state) {
  uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Stable seed derivation: same (root, tag, index) always yields the same
// value, distinct tags decorrelate component streams.
inline uint64_t derive_seed(uint64_t root, uint64_t tag, uint64_t index = 0) {
  uint64_t s = root;
  splitmix64(s);
  s ^= 0x5851f42d4c957f2dULL * (tag + 1);
  splitmix64(s);
  s ^= 0x14057b7ef767814fULL * (index + 1);
  return splitmix64(s);
}

inline std::mt19937_64 make_rng(uint64_t seed) {
  return std::mt19937_64(seed);
}

}  // namespace vcs
