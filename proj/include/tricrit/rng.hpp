#pragma once

#include <cstdint>
#include <random>

namespace tricrit {

/// Deterministic, platform-independent randomness for the property suites.
/// mt19937_64 output is pinned by the standard; the uniform draws below avoid
/// std distributions, whose algorithms are implementation-defined. The slight
/// modulo bias is irrelevant for test-instance generation.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : eng_() % n; }

  /// Inclusive range.
  unsigned range(unsigned lo, unsigned hi) {
    return lo + static_cast<unsigned>(below(hi - lo + 1));
  }

  bool chance(unsigned numerator, unsigned denominator) {
    return below(denominator) < numerator;
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace tricrit
