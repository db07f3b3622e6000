#pragma once

#include <stdexcept>

namespace tricrit {

/// Thrown when an automorphism image exceeds the configured letter budget.
/// Distinct from invalid_argument so callers can tell "your input is malformed"
/// from "this composition grew past the bound you allowed".
class ImageOverflowError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tricrit
