// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>

namespace frontier {

/// SplitMix64 finaliser; a bijective 64-bit mixer.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Seed of replication `replication` derived from a base seed: seed XOR mix64(replication).
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t replication) noexcept;

/// Seedable 64-bit generator (MT19937-64, whose output sequence is fixed by the C++
/// standard) with portable conversions to doubles.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  /// Uniform on (0, 1).
  double uniform_open() {
    double u;
    do u = uniform();
    while (u == 0.0);
    return u;
  }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  std::mt19937_64 engine_;
};

/// Poisson variate: sequential inversion for mean < 30, Hormann's PTRS transformed
/// rejection otherwise.
std::uint64_t poisson(Rng& rng, double mean);

}  // namespace frontier
