#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pretzelfill/report.hpp"

namespace pretzelfill::cli {

// exit codes
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kInvalidInput = 2;

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::int64_t parse_int(std::string_view text, const char* flag) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw usage_error(std::string(flag) + ": expected an integer, got '" + std::string(text) + "'");
  }
  return v;
}

struct MRange {
  std::int64_t first;
  std::int64_t last;
};

inline MRange parse_m(const std::string& text, bool allow_range) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const auto m = parse_int(text, "--m");
    return {m, m};
  }
  if (!allow_range) throw usage_error("--m: ranges are only accepted by 'scan'");
  const auto first = parse_int(std::string_view(text).substr(0, dots), "--m");
  const auto last = parse_int(std::string_view(text).substr(dots + 2), "--m");
  if (first > last) throw usage_error("--m: empty range '" + text + "'");
  return {first, last};
}

inline std::string pretzel_name(const PretzelParameter& p) {
  return "P(-2,3," + std::to_string(2 * p.m() + 1) + ")";
}

/// Knot given either as a pretzel parameter or a raw polynomial literal.
struct KnotInput {
  std::optional<PretzelParameter> pretzel;
  SymmetrizedAlexanderPolynomial poly;

  std::string manifold(std::int64_t n) const {
    if (pretzel) return "M_{" + std::to_string(n) + "," + std::to_string(pretzel->m()) + "}";
    return "S^3_" + std::to_string(n) + "(K)";
  }
};

inline KnotInput resolve_knot(const std::string& m_text, const std::string& coeffs, Json& inputs) {
  if (!m_text.empty() && !coeffs.empty()) throw usage_error("give exactly one of --m or --coeffs");
  if (m_text.empty() && coeffs.empty()) throw usage_error("one of --m or --coeffs is required");
  if (!m_text.empty()) {
    const PretzelParameter p(parse_m(m_text, false).first);
    inputs["m"] = p.m();
    return {p, pretzel_alexander(p)};
  }
  auto poly = SymmetrizedAlexanderPolynomial::parse(coeffs);
  inputs["coeffs"] = std::vector<std::int64_t>(poly.half_coefficients().begin(), poly.half_coefficients().end());
  return {std::nullopt, std::move(poly)};
}

}  // namespace detail

struct Options {
  std::string m;
  std::string coeffs;
  std::int64_t n = 0;
  std::int64_t upper = 0;
  std::string format = "table";
};

inline int cmd_dtable(const Options& o, bool has_n, std::ostream& out) {
  if (!has_n) throw usage_error("dtable: --n is required");
  ReportDocument doc;
  doc.command = "dtable";
  const auto knot = detail::resolve_knot(o.m, o.coeffs, doc.inputs);
  doc.inputs["n"] = o.n;
  doc.inputs["format"] = o.format;
  const auto table = d_table(torsion_coefficients(knot.poly), o.n);
  if (o.format == "json") {
    doc.payload = to_json(table);
    out << doc.dump();
  } else if (o.format == "csv") {
    out << to_csv(table);
  } else {
    out << to_table(table, knot.manifold(o.n));
  }
  return kOk;
}

inline int cmd_torsion(const Options& o, std::ostream& out) {
  ReportDocument doc;
  doc.command = "torsion";
  const auto knot = detail::resolve_knot(o.m, o.coeffs, doc.inputs);
  doc.inputs["format"] = o.format;
  const auto torsion = torsion_coefficients(knot.poly);
  std::optional<bool> agrees;
  if (knot.pretzel) {
    agrees = true;
    for (std::int64_t i = 0; i <= torsion.genus(); ++i) {
      if (pretzel_torsion_closed_form(*knot.pretzel, i) != torsion[i]) agrees = false;
    }
  }
  if (o.format == "json") {
    doc.payload = to_json(torsion);
    doc.payload["closed_form_agrees"] = agrees ? Json(*agrees) : Json(nullptr);
    out << doc.dump();
  } else if (o.format == "csv") {
    out << to_csv(torsion);
  } else {
    out << "knot: " << (knot.pretzel ? detail::pretzel_name(*knot.pretzel) : "alexander " + knot.poly.str()) << '\n';
    out << "genus: " << torsion.genus() << '\n';
    out << "torsion: ";
    for (std::size_t i = 0; i < torsion.values().size(); ++i) out << (i ? "," : "") << torsion.values()[i];
    out << '\n';
    if (agrees) out << "closed_form_agrees: " << bool_text(*agrees) << '\n';
  }
  return kOk;
}

inline int cmd_obstruct(const Options& o, bool has_n, std::ostream& out, std::ostream& err) {
  if (o.m.empty()) throw usage_error("obstruct: --m is required");
  if (!has_n) throw usage_error("obstruct: --n is required");
  const PretzelParameter p(detail::parse_m(o.m, false).first);
  ReportDocument doc;
  doc.command = "obstruct";
  doc.inputs["m"] = p.m();
  doc.inputs["n"] = o.n;
  doc.inputs["format"] = o.format;

  const auto lmin = lspace_min_slope(p);
  if (o.n < lmin) {
    err << "warning: n = " << o.n << " < 2m+3 = " << lmin
        << "; the obstruction is evaluated but no fillability conclusion is drawn\n";
  }
  const auto report = check_slope(torsion_coefficients(pretzel_alexander(p)), o.n);
  const std::string manifold = "M_{" + std::to_string(o.n) + "," + std::to_string(p.m()) + "}";
  const auto steps = reasoning_chain(report, lmin, manifold);

  if (o.format == "json") {
    doc.payload["report"] = to_json(report);
    doc.payload["lspace"] = o.n >= lmin;
    doc.payload["reasoning"] = steps;
    out << doc.dump();
  } else if (o.format == "csv") {
    out << to_csv(report);
  } else {
    out << "manifold: " << manifold << " = " << o.n << "-surgery on " << detail::pretzel_name(p) << '\n';
    out << "delta: " << report.delta << '\n';
    out << "squarefree: " << bool_text(report.squarefree) << '\n';
    out << "max4d: " << report.max4d << '\n';
    out << "threshold: " << report.threshold << '\n';
    out << "inequality_holds: " << bool_text(report.inequality_holds) << '\n';
    out << "conclusive: " << bool_text(report.conclusive) << '\n';
    out << "reasoning:\n";
    for (const auto& s : steps) out << "  - " << s << '\n';
  }
  return kOk;
}

inline int cmd_scan(const Options& o, bool has_upper, std::ostream& out) {
  if (o.m.empty()) throw usage_error("scan: --m is required");
  const auto range = detail::parse_m(o.m, true);
  ReportDocument doc;
  doc.command = "scan";
  doc.inputs["m_first"] = range.first;
  doc.inputs["m_last"] = range.last;
  doc.inputs["upper"] = has_upper ? Json(o.upper) : Json(nullptr);
  doc.inputs["format"] = o.format;

  std::vector<ScanResult> results;
  for (std::int64_t m = range.first; m <= range.last; ++m) {
    results.push_back(certify_nonfillable_interval(PretzelParameter(m), has_upper ? std::optional(o.upper) : std::nullopt));
  }
  if (o.format == "json") {
    doc.payload = Json::array();
    for (const auto& r : results) doc.payload.push_back(to_json(r));
    out << doc.dump();
  } else if (o.format == "csv") {
    out << scan_csv_header();
    for (const auto& r : results) out << to_csv_row(r);
  } else {
    for (const auto& r : results) out << to_table_row(r);
  }
  return kOk;
}

/// Runs the command line `args` (without the program name).
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact d-invariants and non-fillability certificates for surgeries on P(-2,3,2m+1)", "pretzelfill"};
  app.require_subcommand(1);
  Options o;

  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "table|json|csv")->check(CLI::IsMember({"table", "json", "csv"}));
  };

  auto* dtable = app.add_subcommand("dtable", "d-invariants of +n surgery");
  auto* dt_m = dtable->add_option("--m", o.m, "pretzel parameter m >= 3");
  dtable->add_option("--coeffs", o.coeffs, "half-coefficients a_0,...,a_g")->excludes(dt_m);
  auto* dt_n = dtable->add_option("--n", o.n, "surgery slope");
  add_format(dtable);

  auto* torsion = app.add_subcommand("torsion", "torsion coefficients t_0..t_g");
  auto* to_m = torsion->add_option("--m", o.m, "pretzel parameter m >= 3");
  torsion->add_option("--coeffs", o.coeffs, "half-coefficients a_0,...,a_g")->excludes(to_m);
  add_format(torsion);

  auto* obstruct = app.add_subcommand("obstruct", "negative-definite bounding test at slope n");
  obstruct->add_option("--m", o.m, "pretzel parameter m >= 3");
  auto* ob_n = obstruct->add_option("--n", o.n, "surgery slope");
  add_format(obstruct);

  auto* scan = app.add_subcommand("scan", "certify a non-fillable slope interval");
  scan->add_option("--m", o.m, "m or range a..b");
  auto* sc_upper = scan->add_option("--upper", o.upper, "exclusive upper end of the slope window");
  add_format(scan);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (dtable->parsed()) return cmd_dtable(o, dt_n->count() > 0, out);
    if (torsion->parsed()) return cmd_torsion(o, out);
    if (obstruct->parsed()) return cmd_obstruct(o, ob_n->count() > 0, out, err);
    return cmd_scan(o, sc_upper->count() > 0, out);
  } catch (const usage_error& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const invalid_input& e) {
    err << "invalid input: " << e.what() << '\n';
    return kInvalidInput;
  }
}

}  // namespace pretzelfill::cli
