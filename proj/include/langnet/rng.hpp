#pragma once

#include <cstdint>

namespace langnet {

/// Counter-based SplitMix64 stream. Draw i of stream s is
/// mix64(s + (i+1) * 0x9E3779B97F4A7C15), so every value is a pure function
/// of (seed, counter) and identical on all platforms. Streams fork into
/// statistically independent children without sharing state.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t next_u64();

  /// Uniform double in [0, 1), 53 mantissa bits.
  double uniform();
  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi);
  /// Uniform integer in [lo, hi], both inclusive.
  int uniform_int(int lo, int hi);

  /// Independent child stream; fork(t) of equal seeds is reproducible.
  Rng fork(std::uint64_t tag) const;

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

/// SplitMix64 finalizer, exposed for seed derivation.
std::uint64_t mix64(std::uint64_t z);

}  // namespace langnet
