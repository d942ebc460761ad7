#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace semkg {

// Deterministic random source. Every draw is derived from the raw engine
// output with explicit arithmetic, so the stream does not depend on the
// standard library's distribution implementations.
class SeededRng {
 public:
  explicit SeededRng(uint64_t seed) : engine_(seed) {}

  uint64_t next_u64() { return engine_(); }

  // Uniform double in [0, 1), 53 bits of randomness.
  double next_double() {
    return static_cast<double>(engine_() >> 11) * (1.0 / 9007199254740992.0);
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  // Uniform integer in [0, n), unbiased via rejection. Requires n >= 1.
  uint64_t next_below(uint64_t n) {
    const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return x % n;
  }

  // Fisher-Yates shuffle driven by next_below.
  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[next_below(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace semkg
