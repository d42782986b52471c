#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "pretzelfill/error.hpp"

namespace pretzelfill {

/// Half-open interval [lower, upper) of integers.
struct IntegerInterval {
  std::int64_t lower;
  std::int64_t upper;

  IntegerInterval(std::int64_t lo, std::int64_t hi) : lower(lo), upper(hi) {
    if (!(lo < hi)) {
      throw invalid_input("interval: need lower < upper, got [" + std::to_string(lo) + "," + std::to_string(hi) + ")");
    }
  }

  bool contains(std::int64_t x) const { return lower <= x && x < upper; }
  std::int64_t size() const { return upper - lower; }

  friend bool operator==(const IntegerInterval&, const IntegerInterval&) = default;
};

/// No prime square divides n. Trial division, dividing out each factor found.
inline bool is_squarefree(std::int64_t n) {
  if (n <= 0) throw invalid_input("squarefree test: n must be positive, got " + std::to_string(n));
  for (std::int64_t p = 2; p <= n / p; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return false;
  }
  return true;
}

inline std::optional<std::int64_t> largest_squarefree_in(IntegerInterval interval) {
  for (std::int64_t x = interval.upper - 1; x >= interval.lower && x >= 1; --x) {
    if (is_squarefree(x)) return x;
  }
  return std::nullopt;
}

}  // namespace pretzelfill
