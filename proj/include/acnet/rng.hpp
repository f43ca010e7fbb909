#pragma once

#include <cstdint>
#include <random>

namespace acnet {

/// Seeded generator with platform-independent output. Doubles are derived
/// from raw engine bits, not from std::uniform_real_distribution, whose
/// results vary between standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t bits() { return engine_(); }

  /// Uniform in [0, 1) with 53-bit resolution.
  double unit() { return static_cast<double>(bits() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

  /// Uniform integer in [lo, hi], inclusive.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<std::int64_t>(bits() % span);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace acnet
