#pragma once

#include <cstdint>
#include <cstdio>
#include <random>
#include <string>

namespace l3lab {

// Seeded RNG wrapper. We scale raw mt19937_64 output ourselves instead of
// going through std::uniform_*_distribution so that a given seed produces the
// same stream on every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // uniform in [0, 1)
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  // uniform integer in [lo, hi], inclusive
  int uniform_int(int lo, int hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % span;
    std::uint64_t x;
    do {
      x = eng_();
    } while (x >= limit);
    return lo + static_cast<int>(x % span);
  }

  bool bernoulli(double p) { return uniform() < p; }

 private:
  std::mt19937_64 eng_;
};

// 12 significant digits, the format every CLI report uses.
inline std::string fmt12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

}  // namespace l3lab
