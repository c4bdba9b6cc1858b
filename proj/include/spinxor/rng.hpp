// Seeded uniform generator with a fully specified bit-to-double mapping, so
// identical seeds give identical streams on every platform.
#pragma once

#include <cstdint>
#include <random>

namespace spinxor {

class SeededUniform {
 public:
  explicit SeededUniform(std::uint64_t seed) : eng_(seed) {}

  // uniform in [0, 1) using the top 53 bits
  double next01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * next01(); }

 private:
  std::mt19937_64 eng_;
};

}  // namespace spinxor
