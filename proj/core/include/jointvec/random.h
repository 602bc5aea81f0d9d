#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace jointvec {

// Portable draws on top of std::mt19937_64. The standard distributions are
// implementation defined, so these are used wherever results must be
// reproducible bit for bit.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // [0, 1) with 53 random bits.
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
  // Unbiased integer in [0, bound). bound > 0.
  std::uint64_t below(std::uint64_t bound);

  template <typename T>
  void shuffle(std::span<T> items) {
    for (std::size_t k = items.size(); k > 1; --k) {
      std::swap(items[k - 1], items[below(k)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace jointvec
