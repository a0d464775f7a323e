#pragma once

#include <cstdint>
#include <random>

#include "liereach/representation.hpp"

namespace liereach {

/// Seeded generator whose derived streams (uniform, normal) depend only on
/// the raw 64-bit output of mt19937_64, which the standard pins down. The
/// library distributions are implementation-defined, so they are avoided.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t bits() { return gen_(); }
  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [lo, hi].
  int integer(int lo, int hi) { return lo + static_cast<int>(gen_() % static_cast<std::uint64_t>(hi - lo + 1)); }
  double normal();

  /// Unit vector with Gaussian amplitudes on levels 0..top, zero above.
  StateVector state(int size, int top);

 private:
  std::mt19937_64 gen_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace liereach
