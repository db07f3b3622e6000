#pragma once

#include <cstddef>
#include <cstdint>

namespace tricrit {

/// FNV-1a over an explicit byte/word feed. Used by the value types so closure
/// enumeration can hash them without pulling in std::hash specializations.
class Fnv1a {
 public:
  void feed(std::uint64_t word) {
    for (int i = 0; i < 8; ++i) {
      state_ ^= (word >> (8 * i)) & 0xffu;
      state_ *= 0x100000001b3ull;
    }
  }

  void feed_byte(std::uint8_t b) {
    state_ ^= b;
    state_ *= 0x100000001b3ull;
  }

  std::size_t digest() const { return static_cast<std::size_t>(state_); }

 private:
  std::uint64_t state_ = 0xcbf29ce484222325ull;
};

}  // namespace tricrit
