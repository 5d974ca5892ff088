#pragma once

#include <cstdint>
#include <random>

namespace wtangle {

// Seeded random stream used by every measurement and every random input.
//
// Engine: std::mt19937_64 (MT19937-64, fully specified by the C++ standard, so
// the raw 64-bit output sequence is identical on every conforming platform).
// Doubles are built from the top 53 bits of one engine draw, and normals use
// Box-Muller, so no implementation-defined distribution is involved.
//
// Stream splitting: stream k of master seed s is seeded with
//   splitmix64(s + (k + 1) * 0x9E3779B97F4A7C15)
// where splitmix64 is the standard SplitMix64 output finalizer.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }

  // Uniform in [0, 1).
  double uniform();
  // Standard normal.
  double normal();
  std::uint64_t next_u64() { return engine_(); }

  static std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream);
  Rng split(std::uint64_t stream) const { return Rng(derive_seed(seed_, stream)); }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace wtangle
