#pragma once

#include <charconv>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pretzelfill/error.hpp"

namespace pretzelfill {

/// Index m of the pretzel knot P(-2,3,2m+1), m >= 3. Genus and slice genus
/// are both m+2.
class PretzelParameter {
 public:
  // keeps 16m+13 and the window arithmetic well inside int64
  static constexpr std::int64_t kMaxM = 1'000'000'000;

  explicit PretzelParameter(std::int64_t m) : m_(m) {
    if (m < 3) throw invalid_input("pretzel parameter: m must be >= 3, got " + std::to_string(m));
    if (m > kMaxM) throw invalid_input("pretzel parameter: m must be <= 10^9, got " + std::to_string(m));
  }

  std::int64_t m() const { return m_; }
  std::int64_t genus() const { return m_ + 2; }

  friend bool operator==(PretzelParameter, PretzelParameter) = default;

 private:
  std::int64_t m_;
};

/// Symmetrized Alexander polynomial a_0 + sum_{j>0} a_j (T^j + T^-j), stored
/// as the half-coefficient list a_0..a_g. Negative indices resolve through
/// |j|; indices beyond the genus read as zero.
class SymmetrizedAlexanderPolynomial {
 public:
  explicit SymmetrizedAlexanderPolynomial(std::vector<std::int64_t> half_coeffs)
      : coeffs_(std::move(half_coeffs)) {
    if (coeffs_.empty()) throw invalid_input("alexander polynomial: empty coefficient list");
    if (coeffs_.back() == 0) {
      throw invalid_input("alexander polynomial: leading coefficient a_g must be nonzero");
    }
    __int128 at_one = coeffs_.front();
    for (std::size_t j = 1; j < coeffs_.size(); ++j) at_one += 2 * static_cast<__int128>(coeffs_[j]);
    if (at_one != 1) {
      throw invalid_input("alexander polynomial: normalization a_0 + 2*sum(a_j) = 1 violated");
    }
  }

  /// Parses the literal "a_0,a_1,...,a_g".
  static SymmetrizedAlexanderPolynomial parse(std::string_view literal) {
    std::vector<std::int64_t> coeffs;
    std::size_t pos = 0;
    while (true) {
      const auto comma = literal.find(',', pos);
      std::string_view field = literal.substr(pos, comma == std::string_view::npos ? literal.npos : comma - pos);
      while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
      while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
      std::int64_t value = 0;
      const auto* first = field.data();
      const auto* last = field.data() + field.size();
      auto [ptr, ec] = std::from_chars(first, last, value);
      if (field.empty() || ec != std::errc{} || ptr != last) {
        throw invalid_input("alexander polynomial: bad coefficient '" + std::string(field) + "'");
      }
      coeffs.push_back(value);
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    return SymmetrizedAlexanderPolynomial(std::move(coeffs));
  }

  std::int64_t genus() const { return static_cast<std::int64_t>(coeffs_.size()) - 1; }

  std::int64_t coeff(std::int64_t j) const {
    const auto k = j < 0 ? -j : j;
    return k > genus() ? 0 : coeffs_[static_cast<std::size_t>(k)];
  }

  std::span<const std::int64_t> half_coefficients() const { return coeffs_; }

  /// True when the coefficients are +-1 and alternate in sign from a_g = 1
  /// down to a_0, the shape every L-space knot polynomial in this family has.
  bool is_lspace_shaped() const {
    if (coeffs_.back() != 1) return false;
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
      if (coeffs_[j] != 1 && coeffs_[j] != -1) return false;
      if (j + 1 < coeffs_.size() && coeffs_[j] == coeffs_[j + 1]) return false;
    }
    return true;
  }

  void validate_lspace() const {
    if (!is_lspace_shaped()) {
      throw invalid_input("alexander polynomial: coefficients are not alternating +-1 with a_g = 1");
    }
  }

  std::string str() const {
    std::string out;
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
      if (j) out += ',';
      out += std::to_string(coeffs_[j]);
    }
    return out;
  }

  friend bool operator==(const SymmetrizedAlexanderPolynomial&, const SymmetrizedAlexanderPolynomial&) = default;

 private:
  std::vector<std::int64_t> coeffs_;
};

/// Torsion coefficients t_0..t_g; t_i = 0 for i >= g and t_{-i} = t_i.
class TorsionTable {
 public:
  TorsionTable() : values_{0} {}

  explicit TorsionTable(std::vector<std::int64_t> values) : values_(std::move(values)) {
    if (values_.empty()) throw invalid_input("torsion table: empty");
    for (auto t : values_) {
      if (t < 0) throw invalid_input("torsion table: negative torsion coefficient " + std::to_string(t));
    }
    if (values_.back() != 0) throw invalid_input("torsion table: t_g must be 0");
  }

  std::int64_t operator[](std::int64_t i) const {
    const auto k = i < 0 ? -i : i;
    return k >= static_cast<std::int64_t>(values_.size()) ? 0 : values_[static_cast<std::size_t>(k)];
  }

  std::int64_t genus() const { return static_cast<std::int64_t>(values_.size()) - 1; }
  std::span<const std::int64_t> values() const { return values_; }

  friend bool operator==(const TorsionTable&, const TorsionTable&) = default;

 private:
  std::vector<std::int64_t> values_;
};

/// a_i = (-1)^{i+m} for 0 <= i <= m+2.
inline SymmetrizedAlexanderPolynomial pretzel_alexander(PretzelParameter p) {
  std::vector<std::int64_t> coeffs(static_cast<std::size_t>(p.genus() + 1));
  for (std::int64_t i = 0; i <= p.genus(); ++i) {
    coeffs[static_cast<std::size_t>(i)] = (i + p.m()) % 2 == 0 ? 1 : -1;
  }
  return SymmetrizedAlexanderPolynomial(std::move(coeffs));
}

/// t_i = sum_{j>=1} j * a_{i+j}, for 0 <= i <= g.
inline TorsionTable torsion_coefficients(const SymmetrizedAlexanderPolynomial& poly) {
  const auto g = poly.genus();
  std::vector<std::int64_t> values(static_cast<std::size_t>(g + 1));
  for (std::int64_t i = 0; i <= g; ++i) {
    __int128 sum = 0;
    for (std::int64_t j = 1; i + j <= g; ++j) sum += static_cast<__int128>(j) * poly.coeff(i + j);
    if (sum > std::numeric_limits<std::int64_t>::max() || sum < std::numeric_limits<std::int64_t>::min()) {
      throw invalid_input("torsion coefficients: value exceeds 64-bit range");
    }
    values[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(sum);
  }
  return TorsionTable(std::move(values));
}

/// Closed form for t_i(P(-2,3,2m+1)): 0 for |i| >= m+2, otherwise
/// (m+3-i)/2 when m+i is odd and (m+2-i)/2 when m+i is even.
inline std::int64_t pretzel_torsion_closed_form(PretzelParameter p, std::int64_t i) {
  const auto m = p.m();
  const auto k = i < 0 ? -i : i;
  if (k >= m + 2) return 0;
  return (m + k) % 2 != 0 ? (m + 3 - k) / 2 : (m + 2 - k) / 2;
}

enum class LeadingSign { plus, minus };

/// s*(1 - 2 + 3 - ... +-k) with s the leading sign; for k odd and a leading
/// plus this is (k+1)/2, for k even and a leading minus it is k/2.
inline std::int64_t alternating_sum(std::int64_t k, LeadingSign sign) {
  if (k <= 1) throw invalid_input("alternating sum: k must be > 1, got " + std::to_string(k));
  const std::int64_t plus_sum = k % 2 != 0 ? (k + 1) / 2 : -(k / 2);
  return sign == LeadingSign::plus ? plus_sum : -plus_sum;
}

}  // namespace pretzelfill
