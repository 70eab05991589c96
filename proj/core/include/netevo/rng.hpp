// Copyright 2026 The netevo Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace netevo {

/// SplitMix64 finalizer. Used to decorrelate user seeds and to derive
/// child stream seeds.
inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Seed for a child stream identified by `path` components (e.g. the
/// per-round streams of a sweep are keyed by {pressure, tolerance bits,
/// round index}). The derivation is part of the reproducibility contract:
/// changing it changes every simulation output.
inline uint64_t derive_seed(uint64_t master, std::initializer_list<uint64_t> path) {
  uint64_t s = splitmix64(master);
  for (uint64_t component : path) {
    s = splitmix64(s ^ splitmix64(component));
  }
  return s;
}

/// Deterministic random stream. mt19937_64 output is pinned by the
/// standard; the helpers below avoid <random> distribution objects, whose
/// output is implementation-defined, so equal seeds give equal draws on
/// every platform.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t next_u64() { return engine_(); }

  /// Uniform integer in [0, n). Rejection sampling, no modulo bias.
  uint64_t bounded(uint64_t n) {
    const uint64_t threshold = (0 - n) % n;  // 2^64 mod n
    for (;;) {
      const uint64_t r = next_u64();
      if (r >= threshold) return r % n;
    }
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  bool coin() { return (next_u64() & 1) != 0; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace netevo
