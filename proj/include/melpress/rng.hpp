#pragma once

#include <cstdint>

namespace melpress {

// xoshiro256++ seeded through splitmix64. Self-contained so that streams are
// bit-reproducible across standard libraries and platforms.
class Rng {
 public:
  explicit Rng(uint64_t seed);

  uint64_t next_u64();

  // Uniform in [0, 1), 53-bit resolution.
  double uniform();

  // Standard normal via Box-Muller (two uniforms per draw, no cached value).
  double gaussian();

  // Uniform integer in [0, n), n > 0. Rejection sampling, bias-free.
  int64_t uniform_int(int64_t n);

  // Independent child stream; deterministic function of (current seed, key).
  Rng fork(uint64_t key) const;

 private:
  uint64_t s_[4];
  uint64_t seed_;
};

}  // namespace melpress
