#pragma once

#include <cstdint>

namespace pointsep {

// splitmix64; identical output on every platform.
struct Rng {
  uint64_t state;
  explicit Rng(uint64_t seed) : state(seed) {}

  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 2^nbits), 1 <= nbits <= 64.
  uint64_t bits(int nbits) { return next() >> (64 - nbits); }
};

inline uint64_t mix_seed(uint64_t seed, uint64_t stream) {
  Rng r(seed ^ (0x517cc1b727220a95ull * (stream + 1)));
  return r.next();
}

}  // namespace pointsep
