#pragma once

#include <cstdint>
#include <random>

#include "nshift/bigint.hpp"

namespace nshift {

// Seeded generator. Bounded sampling is done by rejection on raw 64-bit
// outputs so sequences are identical across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  // Uniform in [lo, hi].
  BigInt between(const BigInt& lo, const BigInt& hi);

  // Derive an independent child seed (for per-trial isolation).
  std::uint64_t fork() { return engine_() ^ 0x9e3779b97f4a7c15ULL; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace nshift
