#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "pretzelfill/floer_d.hpp"
#include "pretzelfill/knot_poly.hpp"
#include "pretzelfill/obstruction.hpp"
#include "pretzelfill/rational.hpp"
#include "pretzelfill/version.hpp"

namespace pretzelfill {

using Json = nlohmann::ordered_json;

// JSON encoding. Rationals are always "p/q" strings; key order is fixed by
// insertion order so output is byte-stable.

inline Json to_json(const Rational& r) { return r.str(); }

inline Json to_json(const TorsionTable& t) {
  Json j;
  j["genus"] = t.genus();
  j["values"] = std::vector<std::int64_t>(t.values().begin(), t.values().end());
  return j;
}

inline Json to_json(const DInvariantTable& table) {
  Json j;
  j["n"] = table.slope();
  Json rows = Json::array();
  for (std::size_t i = 0; i < table.size(); ++i) {
    Json row;
    row["i"] = static_cast<std::int64_t>(i);
    row["d"] = table.entries()[i].str();
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
  return j;
}

inline Json to_json(const ObstructionReport& r) {
  Json j;
  j["n"] = r.n;
  j["delta"] = r.delta;
  j["squarefree"] = r.squarefree;
  j["max4d"] = r.max4d.str();
  j["threshold"] = r.threshold.str();
  j["inequality_holds"] = r.inequality_holds;
  j["conclusive"] = r.conclusive;
  return j;
}

inline Json closed_interval_json(std::int64_t lower, std::int64_t upper_inclusive) {
  Json j;
  j["lower"] = lower;
  j["upper_inclusive"] = upper_inclusive;
  return j;
}

inline Json half_open_json(const IntegerInterval& w) {
  Json j;
  j["lower"] = w.lower;
  j["upper_exclusive"] = w.upper;
  return j;
}

inline Json to_json(const LemmaWindow& w) {
  Json j;
  j["ks"] = w.ks;
  j["slopes"] = half_open_json(w.slopes());
  j["claim1_ks"] = w.claim1_ks;
  return j;
}

inline Json to_json(const ScanResult& s) {
  Json j;
  j["m"] = s.m;
  j["lspace_min"] = s.lspace_min;
  j["scan_window"] = half_open_json(s.window());
  j["certified_s"] = s.certified_s ? Json(*s.certified_s) : Json(nullptr);
  j["certified_interval"] = s.certified_interval
                                ? closed_interval_json(s.certified_interval->lower, s.certified_interval->upper)
                                : Json(nullptr);
  const auto unresolved = s.unresolved();
  j["unresolved"] = unresolved ? half_open_json(*unresolved) : Json(nullptr);
  j["lemma_window"] = to_json(s.lemma);
  j["squarefree_slopes"] = s.squarefree_slopes;
  Json rows = Json::array();
  for (const auto& e : s.per_slope) {
    Json row = to_json(e.report);
    row["status"] = to_string(e.status);
    rows.push_back(std::move(row));
  }
  j["per_slope"] = std::move(rows);
  return j;
}

namespace detail {

template <class T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw invalid_input(std::string("json: missing field '") + key + "'");
  return j.at(key).get<T>();
}

inline Rational rational_field(const Json& j, const char* key) { return Rational::parse(field<std::string>(j, key)); }

}  // namespace detail

template <class T>
T from_json(const Json& j);

template <>
inline Rational from_json<Rational>(const Json& j) {
  return Rational::parse(j.get<std::string>());
}

template <>
inline TorsionTable from_json<TorsionTable>(const Json& j) {
  return TorsionTable(detail::field<std::vector<std::int64_t>>(j, "values"));
}

template <>
inline DInvariantTable from_json<DInvariantTable>(const Json& j) {
  const auto n = detail::field<std::int64_t>(j, "n");
  std::vector<Rational> entries;
  std::int64_t expected = 0;
  for (const auto& row : detail::field<Json>(j, "entries")) {
    if (detail::field<std::int64_t>(row, "i") != expected++) throw invalid_input("json: d-table rows out of order");
    entries.push_back(detail::rational_field(row, "d"));
  }
  return {n, std::move(entries)};
}

template <>
inline ObstructionReport from_json<ObstructionReport>(const Json& j) {
  ObstructionReport r;
  r.n = detail::field<std::int64_t>(j, "n");
  r.delta = detail::field<std::int64_t>(j, "delta");
  r.squarefree = detail::field<bool>(j, "squarefree");
  r.max4d = detail::rational_field(j, "max4d");
  r.threshold = detail::rational_field(j, "threshold");
  r.inequality_holds = detail::field<bool>(j, "inequality_holds");
  r.conclusive = detail::field<bool>(j, "conclusive");
  return r;
}

template <>
inline ScanResult from_json<ScanResult>(const Json& j) {
  ScanResult s;
  s.m = detail::field<std::int64_t>(j, "m");
  s.lspace_min = detail::field<std::int64_t>(j, "lspace_min");
  s.scan_upper = detail::field<std::int64_t>(detail::field<Json>(j, "scan_window"), "upper_exclusive");
  const auto& cs = j.at("certified_s");
  if (!cs.is_null()) s.certified_s = cs.get<std::int64_t>();
  const auto& ci = j.at("certified_interval");
  if (!ci.is_null()) {
    s.certified_interval =
        SlopeInterval{detail::field<std::int64_t>(ci, "lower"), detail::field<std::int64_t>(ci, "upper_inclusive")};
  }
  const auto& lw = detail::field<Json>(j, "lemma_window");
  s.lemma.m = s.m;
  s.lemma.ks = detail::field<std::vector<std::int64_t>>(lw, "ks");
  s.lemma.claim1_ks = detail::field<std::vector<std::int64_t>>(lw, "claim1_ks");
  s.squarefree_slopes = detail::field<std::vector<std::int64_t>>(j, "squarefree_slopes");
  for (const auto& row : detail::field<Json>(j, "per_slope")) {
    s.per_slope.push_back({from_json<ObstructionReport>(row), slope_status_from_string(detail::field<std::string>(row, "status"))});
  }
  return s;
}

/// Top-level output object: {tool_version, command, inputs, payload}.
struct ReportDocument {
  std::string tool_version = kToolVersion;
  std::string command;
  Json inputs = Json::object();
  Json payload;

  Json to_json() const {
    Json j;
    j["tool_version"] = tool_version;
    j["command"] = command;
    j["inputs"] = inputs;
    j["payload"] = payload;
    return j;
  }

  std::string dump() const { return to_json().dump(2) + "\n"; }

  static ReportDocument parse(const std::string& text) {
    const Json j = Json::parse(text);
    ReportDocument doc;
    doc.tool_version = detail::field<std::string>(j, "tool_version");
    doc.command = detail::field<std::string>(j, "command");
    doc.inputs = j.at("inputs");
    doc.payload = j.at("payload");
    return doc;
  }
};

// CSV encoding.

inline std::string to_csv(const DInvariantTable& table) {
  std::ostringstream os;
  os << "i,d\n";
  for (std::size_t i = 0; i < table.size(); ++i) os << i << ',' << table.entries()[i] << '\n';
  return os.str();
}

inline std::string to_csv(const TorsionTable& t) {
  std::ostringstream os;
  os << "i,t\n";
  for (std::size_t i = 0; i < t.values().size(); ++i) os << i << ',' << t.values()[i] << '\n';
  return os.str();
}

inline const char* bool_text(bool b) { return b ? "true" : "false"; }

inline std::string to_csv(const ObstructionReport& r) {
  std::ostringstream os;
  os << "n,delta,squarefree,max4d,threshold,inequality_holds,conclusive\n"
     << r.n << ',' << r.delta << ',' << bool_text(r.squarefree) << ',' << r.max4d << ',' << r.threshold << ','
     << bool_text(r.inequality_holds) << ',' << bool_text(r.conclusive) << '\n';
  return os.str();
}

inline std::string scan_csv_header() {
  return "m,lspace_min,scan_upper_exclusive,certified_s,certified_lower,certified_upper_inclusive,"
         "lemma_lower,lemma_upper_exclusive,unresolved_lower,unresolved_upper_exclusive\n";
}

inline std::string to_csv_row(const ScanResult& s) {
  std::ostringstream os;
  const auto opt = [](std::optional<std::int64_t> v) { return v ? std::to_string(*v) : std::string(); };
  const auto unresolved = s.unresolved();
  const auto lemma = s.lemma.slopes();
  os << s.m << ',' << s.lspace_min << ',' << s.scan_upper << ',' << opt(s.certified_s) << ','
     << opt(s.certified_interval ? std::optional(s.certified_interval->lower) : std::nullopt) << ','
     << opt(s.certified_interval ? std::optional(s.certified_interval->upper) : std::nullopt) << ','
     << lemma.lower << ',' << lemma.upper << ','
     << opt(unresolved ? std::optional(unresolved->lower) : std::nullopt) << ','
     << opt(unresolved ? std::optional(unresolved->upper) : std::nullopt) << '\n';
  return os.str();
}

// Plain-text tables.

inline std::string to_table(const DInvariantTable& table, const std::string& manifold) {
  std::ostringstream os;
  os << "d-invariants of " << manifold << " (n = " << table.slope() << ")\n";
  os << "i | d\n";
  for (std::size_t i = 0; i < table.size(); ++i) os << i << " | " << table.entries()[i] << '\n';
  return os.str();
}

inline std::string interval_text(const IntegerInterval& w) {
  return "[" + std::to_string(w.lower) + "," + std::to_string(w.upper) + ")";
}

inline std::string to_table_row(const ScanResult& s) {
  std::ostringstream os;
  os << "m=" << s.m << ": ";
  if (s.certified_interval) {
    os << "non-fillable for all r in [" << s.certified_interval->lower << ',' << s.certified_interval->upper << ']';
  } else {
    os << "no certified interval";
  }
  os << "; lemma window " << interval_text(s.lemma.slopes());
  const auto unresolved = s.unresolved();
  os << "; unresolved " << (unresolved ? interval_text(*unresolved) : std::string("none")) << '\n';
  return os.str();
}

}  // namespace pretzelfill
