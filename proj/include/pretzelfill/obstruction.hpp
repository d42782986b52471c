#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pretzelfill/error.hpp"
#include "pretzelfill/floer_d.hpp"
#include "pretzelfill/knot_poly.hpp"
#include "pretzelfill/numtheory.hpp"
#include "pretzelfill/rational.hpp"

namespace pretzelfill {

/// Lower bound a negative definite filling forces on max 4d:
/// 1 - 1/delta for delta odd, 1 for delta even.
inline Rational owens_strle_threshold(std::int64_t delta) {
  if (delta <= 0) throw invalid_input("threshold: |H_1| must be positive, got " + std::to_string(delta));
  if (delta % 2 == 0) return Rational(1);
  return Rational(1) - Rational(BigInt(1), BigInt(delta));
}

/// Surgeries with slope r >= 2g_s - 1 = 2m+3 on P(-2,3,2m+1) are L-spaces.
inline std::int64_t lspace_min_slope(PretzelParameter p) { return 2 * p.m() + 3; }

/// Verdict of the negative-definite bounding test for +n surgery.
struct ObstructionReport {
  std::int64_t n = 0;
  std::int64_t delta = 0;  // |H_1| = n
  bool squarefree = false;
  Rational max4d;
  Rational threshold;
  bool inequality_holds = false;
  bool conclusive = false;  // squarefree && !inequality_holds

  friend bool operator==(const ObstructionReport&, const ObstructionReport&) = default;
};

inline ObstructionReport check_slope(const TorsionTable& torsion, std::int64_t n) {
  ObstructionReport r;
  r.n = n;
  r.delta = n;
  r.squarefree = is_squarefree(n);
  r.max4d = max_4d(d_table(torsion, n));
  r.threshold = owens_strle_threshold(n);
  r.inequality_holds = r.max4d >= r.threshold;
  r.conclusive = r.squarefree && !r.inequality_holds;
  return r;
}

/// Human-readable chain of implications behind a report. `lspace_min` is the
/// smallest slope known to give an L-space, when the knot is one of the
/// pretzel family; without it no fillability conclusion is drawn.
inline std::vector<std::string> reasoning_chain(const ObstructionReport& r, std::optional<std::int64_t> lspace_min,
                                                const std::string& manifold) {
  std::vector<std::string> steps;
  const bool lspace = lspace_min && r.n >= *lspace_min;
  if (lspace) {
    steps.push_back(manifold + " is an L-space (n = " + std::to_string(r.n) +
                    " >= " + std::to_string(*lspace_min) + "), so every symplectic filling is negative definite");
  } else if (lspace_min) {
    steps.push_back("n = " + std::to_string(r.n) + " < " + std::to_string(*lspace_min) +
                    ": L-space property not established, no fillability conclusion");
  }
  steps.push_back("|H_1| = " + std::to_string(r.delta) + (r.squarefree ? " is squarefree" : " is not squarefree"));
  steps.push_back("max 4d = " + r.max4d.str() + (r.inequality_holds ? " >= " : " < ") + r.threshold.str() +
                  (r.inequality_holds ? ": inequality holds" : ": inequality fails"));
  if (r.conclusive) {
    steps.push_back(manifold + " cannot bound a negative definite 4-manifold");
    if (lspace) steps.push_back(manifold + " admits no fillable contact structure");
  } else if (!r.squarefree && !r.inequality_holds) {
    steps.push_back("inconclusive: obstruction needs squarefree |H_1|");
  } else {
    steps.push_back("inconclusive: obstruction does not apply");
  }
  return steps;
}

/// Slopes 2m+k covered by the closed-form window: k >= 3 with
/// k^2 - 9k < 4m - 17, i.e. (2k-9)^2 < 16m + 13. `claim1_ks` is the wider
/// guard k^2 - 9k < 18m - 4 under which every entry with |i| < m+2 is negative.
struct LemmaWindow {
  std::int64_t m = 0;
  std::vector<std::int64_t> ks;
  std::vector<std::int64_t> claim1_ks;

  /// Slopes [2m+3, 2m+k_max+1); always nonempty since k = 3 qualifies.
  IntegerInterval slopes() const { return {2 * m + ks.front(), 2 * m + ks.back() + 1}; }

  friend bool operator==(const LemmaWindow&, const LemmaWindow&) = default;
};

inline bool in_lemma_window(PretzelParameter p, std::int64_t k) {
  return k >= 3 && (2 * k - 9) * (2 * k - 9) < 16 * p.m() + 13;
}

inline bool in_claim1_guard(PretzelParameter p, std::int64_t k) { return k >= 3 && k * k - 9 * k < 18 * p.m() - 4; }

inline LemmaWindow lemma_interval_bound(PretzelParameter p) {
  LemmaWindow w;
  w.m = p.m();
  // both conditions are monotone in k once k >= 5
  for (std::int64_t k = 3; in_lemma_window(p, k); ++k) w.ks.push_back(k);
  for (std::int64_t k = 3; in_claim1_guard(p, k); ++k) w.claim1_ks.push_back(k);
  return w;
}

/// Closed interval [lower, upper] of slopes; rational slopes r are covered
/// when lower <= r <= upper.
struct SlopeInterval {
  std::int64_t lower;
  std::int64_t upper;

  bool contains(const Rational& r) const { return Rational(lower) <= r && r <= Rational(upper); }
  friend bool operator==(const SlopeInterval&, const SlopeInterval&) = default;
};

enum class SlopeStatus {
  certified_direct,          // conclusive obstruction at this slope
  certified_by_monotonicity, // below a conclusive slope s, inside [2m+3, s]
  unresolved,
};

inline const char* to_string(SlopeStatus s) {
  switch (s) {
    case SlopeStatus::certified_direct: return "certified_direct";
    case SlopeStatus::certified_by_monotonicity: return "certified_by_monotonicity";
    case SlopeStatus::unresolved: return "unresolved";
  }
  return "unresolved";
}

inline SlopeStatus slope_status_from_string(const std::string& s) {
  if (s == "certified_direct") return SlopeStatus::certified_direct;
  if (s == "certified_by_monotonicity") return SlopeStatus::certified_by_monotonicity;
  if (s == "unresolved") return SlopeStatus::unresolved;
  throw invalid_input("unknown slope status '" + s + "'");
}

struct SlopeEntry {
  ObstructionReport report;
  SlopeStatus status = SlopeStatus::unresolved;

  friend bool operator==(const SlopeEntry&, const SlopeEntry&) = default;
};

struct ScanResult {
  std::int64_t m = 0;
  std::int64_t lspace_min = 0;
  std::int64_t scan_upper = 0;  // exclusive
  std::vector<SlopeEntry> per_slope;
  std::optional<std::int64_t> certified_s;
  std::optional<SlopeInterval> certified_interval;
  LemmaWindow lemma;
  std::vector<std::int64_t> squarefree_slopes;

  IntegerInterval window() const { return {lspace_min, scan_upper}; }

  /// Integer slopes of the window past the certified interval (the whole
  /// window when nothing is certified). Never asserted fillable.
  std::optional<IntegerInterval> unresolved() const {
    const auto lo = certified_s ? *certified_s + 1 : lspace_min;
    if (lo >= scan_upper) return std::nullopt;
    return IntegerInterval{lo, scan_upper};
  }

  friend bool operator==(const ScanResult&, const ScanResult&) = default;
};

/// Default right end of the scan: 4m+6, where the surgery is a small Seifert
/// fibered space bounding a negative definite manifold; 17 for m = 3.
inline std::int64_t default_scan_upper(PretzelParameter p) { return p.m() == 3 ? 17 : 4 * p.m() + 6; }

/// Evaluates every integer slope in [2m+3, scan_upper). The largest conclusive
/// slope s certifies the whole rational interval [2m+3, s]: no rational
/// 0 < r <= s bounds a negative definite manifold (negative definite bounding
/// propagates upward in r), and for r >= 2m+3 the surgery is an L-space, whose
/// fillings would have to be negative definite.
inline ScanResult certify_nonfillable_interval(PretzelParameter p, std::optional<std::int64_t> scan_upper = {}) {
  ScanResult result;
  result.m = p.m();
  result.lspace_min = lspace_min_slope(p);
  result.scan_upper = scan_upper.value_or(default_scan_upper(p));
  if (result.scan_upper <= result.lspace_min) {
    throw invalid_input("scan: upper bound " + std::to_string(result.scan_upper) + " must exceed 2m+3 = " +
                        std::to_string(result.lspace_min));
  }
  result.lemma = lemma_interval_bound(p);

  const TorsionTable torsion = torsion_coefficients(pretzel_alexander(p));
  for (std::int64_t n = result.lspace_min; n < result.scan_upper; ++n) {
    SlopeEntry entry{check_slope(torsion, n), SlopeStatus::unresolved};
    if (entry.report.squarefree) result.squarefree_slopes.push_back(n);
    if (entry.report.conclusive) result.certified_s = n;
    result.per_slope.push_back(std::move(entry));
  }

  if (result.certified_s) {
    result.certified_interval = SlopeInterval{result.lspace_min, *result.certified_s};
    for (auto& entry : result.per_slope) {
      if (entry.report.n > *result.certified_s) break;
      entry.status = entry.report.conclusive ? SlopeStatus::certified_direct : SlopeStatus::certified_by_monotonicity;
    }
  }
  return result;
}

/// Whether the scan certifies that r-surgery admits no fillable contact
/// structure. Slopes below 2m+3 are never reported.
inline bool reports_nonfillable(const ScanResult& scan, const Rational& r) {
  return scan.certified_interval && scan.certified_interval->contains(r);
}

}  // namespace pretzelfill
