#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace geocp {

// Counter-based pseudorandom generator (SplitMix64 over an incrementing
// counter). One seed per run; independent substreams are derived by label
// so that adding a consumer never perturbs the draws of another.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
      : base_(mix(seed ^ mix(stream + 0x9e3779b97f4a7c15ull))), counter_(0) {}

  // Substream derivation; stable for a given (seed, label) pair.
  Rng derive(std::uint64_t label) const { return Rng(base_, label + 1); }

  std::uint64_t next_u64() { return mix(base_ + (++counter_) * 0x9e3779b97f4a7c15ull); }

  // Uniform in [0, 1): 53 mantissa bits.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform_in(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [0, n). n must be > 0; modulo bias is negligible
  // for the n used here (n << 2^64).
  std::uint64_t below(std::uint64_t n) { return next_u64() % n; }

  // Standard normal via Box-Muller on fresh uniforms (no pair caching, so
  // the draw sequence is a pure function of the counter).
  double normal() {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::uint64_t base_;
  std::uint64_t counter_;
};

}  // namespace geocp
