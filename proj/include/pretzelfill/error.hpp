#pragma once

#include <stdexcept>
#include <string>

namespace pretzelfill {

/// Raised when an input violates a mathematical invariant (bad polynomial,
/// slope out of range, index that is not a Spin^c representative, ...).
/// The CLI maps this to exit code 2.
class invalid_input : public std::invalid_argument {
 public:
  explicit invalid_input(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace pretzelfill
