#pragma once
#include <cstdint>

namespace vcs {

// Arithmetic over the Mersenne prime field GF(2^61 - 1). Elements live in [0, P).
// The 61-bit modulus keeps products inside __uint128_t and admits a cheap
// fold-based reduction, while still leaving room for 60-bit id domains.
struct Field {
  static constexpr uint64_t P = (uint64_t(1) << 61) - 1;

  static uint64_t reduce(unsigned __int128 x) {
    uint64_t lo = static_cast<uint64_t>(x & P);
    uint64_t hi = static_cast<uint64_t>(x >> 61);
    uint64_t s = lo + hi;
    if (s >= P) s -= P;
    return s;
  }

  static uint64_t add(uint64_t a, uint64_t b) {
    uint64_t s = a + b;
    if (s >= P) s -= P;
    return s;
  }

  static uint64_t sub(uint64_t a, uint64_t b) {
    return a >= b ? a - b : a + P - b;
  }

  static uint64_t mul(uint64_t a, uint64_t b) {
    return reduce(static_cast<unsigned __int128>(a) * b);
  }

  static uint64_t pow(uint64_t base, uint64_t exp) {
    uint64_t acc = 1;
    uint64_t b = base;
    while (exp > 0) {
      if (exp & 1) acc = mul(acc, b);
      b = mul(b, b);
      exp >>= 1;
    }
    return acc;
  }
};

}  // namespace vcs
