#pragma once

#include <cstdint>

#include "qbrick/fp.hpp"

namespace qbrick {

/// Counter-based deterministic randomness.  Every random draw in the
/// library is a pure function of (seed, key words, counter), so results
/// are reproducible across runs and independent of evaluation order.
namespace rng {

inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

/// Derive a child seed from a parent seed and up to three key words.
inline uint64_t derive(uint64_t seed, uint64_t a = 0, uint64_t b = 0,
                       uint64_t c = 0) {
  uint64_t h = splitmix64(seed ^ 0x5bf03635e52b7e21ull);
  h = splitmix64(h ^ splitmix64(a ^ 0xd6e8feb86659fd93ull));
  h = splitmix64(h ^ splitmix64(b ^ 0xa5a5a5a5a5a5a5a5ull));
  h = splitmix64(h ^ splitmix64(c ^ 0x0f0f0f0f0f0f0f0full));
  return h;
}

/// Uniform element of [0, p) from a keyed counter, bias-free by rejection.
inline uint64_t uniform(uint64_t key, uint64_t counter, uint64_t p) {
  uint64_t limit = UINT64_MAX - UINT64_MAX % p;
  uint64_t h = splitmix64(key ^ splitmix64(counter));
  while (h >= limit) h = splitmix64(h);
  return h % p;
}

}  // namespace rng
}  // namespace qbrick
