#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pretzelfill/error.hpp"
#include "pretzelfill/knot_poly.hpp"
#include "pretzelfill/rational.hpp"

namespace pretzelfill {

namespace detail {

inline void require_spin_c(std::int64_t n, std::int64_t i) {
  if (n < 1) throw invalid_input("surgery slope n must be >= 1, got " + std::to_string(n));
  const auto k = i < 0 ? -i : i;
  if (2 * k > n) {
    throw invalid_input("index " + std::to_string(i) + " is not a Spin^c representative for n = " +
                        std::to_string(n) + " (need |i| <= n/2)");
  }
}

}  // namespace detail

/// d(U_n, i) = (n - 2|i|)^2 / (4n) - 1/4 for +n surgery on the unknot.
inline Rational d_unknot(std::int64_t n, std::int64_t i) {
  detail::require_spin_c(n, i);
  const BigInt gap = BigInt(n) - 2 * BigInt(i < 0 ? -i : i);
  return Rational(gap * gap - n, 4 * BigInt(n));
}

/// d(K_n, i) = d(U_n, i) - 2 t_|i| for an L-space knot K and n > 0.
inline Rational d_surgery(const TorsionTable& torsion, std::int64_t n, std::int64_t i) {
  return d_unknot(n, i) - Rational(2 * torsion[i]);
}

/// d(K_{-n}, i) = -d(U_n, i). Independent of the knot.
inline Rational d_negative_surgery(std::int64_t n, std::int64_t i) { return -d_unknot(n, i); }

/// d-invariants of +n surgery at the canonical representatives i = 0..n/2.
class DInvariantTable {
 public:
  DInvariantTable(std::int64_t n, std::vector<Rational> entries) : n_(n), entries_(std::move(entries)) {
    if (n_ < 1) throw invalid_input("d-table: slope must be >= 1");
    if (static_cast<std::int64_t>(entries_.size()) != n_ / 2 + 1) {
      throw invalid_input("d-table: expected floor(n/2)+1 entries for n = " + std::to_string(n_));
    }
  }

  std::int64_t slope() const { return n_; }
  std::span<const Rational> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  /// Entry at i or -i.
  const Rational& at(std::int64_t i) const {
    detail::require_spin_c(n_, i);
    return entries_[static_cast<std::size_t>(i < 0 ? -i : i)];
  }

  /// Smallest canonical index attaining the maximum.
  std::int64_t argmax() const {
    return std::max_element(entries_.begin(), entries_.end()) - entries_.begin();
  }

  friend bool operator==(const DInvariantTable&, const DInvariantTable&) = default;

 private:
  std::int64_t n_;
  std::vector<Rational> entries_;
};

inline DInvariantTable d_table(const TorsionTable& torsion, std::int64_t n) {
  if (n < 1) throw invalid_input("surgery slope n must be >= 1, got " + std::to_string(n));
  std::vector<Rational> entries;
  entries.reserve(static_cast<std::size_t>(n / 2 + 1));
  for (std::int64_t i = 0; i <= n / 2; ++i) entries.push_back(d_surgery(torsion, n, i));
  return {n, std::move(entries)};
}

/// max over Spin^c structures of 4d; the +-i pairs contribute identically.
inline Rational max_4d(const DInvariantTable& table) {
  return Rational(4) * table.entries()[static_cast<std::size_t>(table.argmax())];
}

}  // namespace pretzelfill
