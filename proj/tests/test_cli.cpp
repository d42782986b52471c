#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "pretzelfill/cli.hpp"

using namespace pretzelfill;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> result;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) result.push_back(line);
  return result;
}

}  // namespace

TEST(Cli, DTableTable) {
  const auto r = run({"dtable", "--m", "3", "--n", "15", "--format", "table"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 10u);  // title, header, 8 rows
  EXPECT_EQ(ls[2], "0 | -5/2");
  EXPECT_EQ(ls.back(), "7 | -7/30");
}

TEST(Cli, DTableUnknotJson) {
  const auto r = run({"dtable", "--coeffs", "1", "--n", "5", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = ReportDocument::parse(r.out);
  EXPECT_EQ(doc.command, "dtable");
  EXPECT_EQ(doc.inputs["coeffs"], Json::array({1}));
  const auto table = from_json<DInvariantTable>(doc.payload);
  for (std::int64_t i = 0; i <= 2; ++i) EXPECT_EQ(table.at(i), d_unknot(5, i));
}

TEST(Cli, DTableCsv) {
  const auto r = run({"dtable", "--m", "4", "--n", "17", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\n6,2/17\n"), std::string::npos);
}

TEST(Cli, Torsion) {
  const auto r = run({"torsion", "--m", "3"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("torsion: 3,2,2,1,1,0\n"), std::string::npos);
  EXPECT_NE(r.out.find("closed_form_agrees: true"), std::string::npos);

  const auto unknot = run({"torsion", "--coeffs", "1"});
  ASSERT_EQ(unknot.code, 0);
  EXPECT_NE(unknot.out.find("torsion: 0\n"), std::string::npos);

  const auto m6 = run({"torsion", "--m", "6", "--format", "json"});
  const auto doc = ReportDocument::parse(m6.out);
  EXPECT_EQ(doc.payload["values"][1], 4);
  EXPECT_EQ(doc.payload["closed_form_agrees"], true);
}

TEST(Cli, Obstruct) {
  const auto r = run({"obstruct", "--m", "3", "--n", "15"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("conclusive: true"), std::string::npos);
  EXPECT_NE(r.out.find("max4d: 2/3"), std::string::npos);
  EXPECT_NE(r.out.find("threshold: 14/15"), std::string::npos);
  EXPECT_NE(r.out.find("cannot bound a negative definite 4-manifold"), std::string::npos);

  const auto r21 = run({"obstruct", "--m", "3", "--n", "21", "--format", "json"});
  const auto rep = from_json<ObstructionReport>(ReportDocument::parse(r21.out).payload["report"]);
  EXPECT_TRUE(rep.inequality_holds);
  EXPECT_FALSE(rep.conclusive);

  const auto r9 = run({"obstruct", "--m", "3", "--n", "9", "--format", "csv"});
  EXPECT_EQ(lines(r9.out)[1], "9,9,false,-8,8/9,false,false");
}

TEST(Cli, ObstructBelowLSpaceWarns) {
  const auto r = run({"obstruct", "--m", "3", "--n", "7"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.err.find("warning"), std::string::npos);
  EXPECT_EQ(r.out.find("fillable contact"), std::string::npos);
}

TEST(Cli, Scan) {
  const auto r = run({"scan", "--m", "3"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("m=3: non-fillable for all r in [9,15]", 0), 0u);

  const auto range = run({"scan", "--m", "4..6", "--format", "json"});
  ASSERT_EQ(range.code, 0);
  const auto doc = ReportDocument::parse(range.out);
  ASSERT_EQ(doc.payload.size(), 3u);
  const std::int64_t expected_s[] = {17, 19, 22};
  for (std::size_t i = 0; i < 3; ++i) {
    const auto s = from_json<ScanResult>(doc.payload[i]);
    EXPECT_EQ(s.certified_interval->lower, s.lspace_min);
    EXPECT_GE(s.certified_interval->upper, 15);
    EXPECT_EQ(s.certified_s, expected_s[i]);
  }

  const auto narrow = run({"scan", "--m", "3", "--upper", "10", "--format", "json"});
  EXPECT_TRUE(ReportDocument::parse(narrow.out).payload[0]["certified_s"].is_null());

  const auto csv = run({"scan", "--m", "3..4", "--format", "csv"});
  EXPECT_EQ(lines(csv.out).size(), 3u);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, cli::kUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kUsage);
  EXPECT_EQ(run({"dtable", "--m", "3"}).code, cli::kUsage);                       // no --n
  EXPECT_EQ(run({"dtable", "--m", "3", "--coeffs", "1", "--n", "3"}).code, cli::kUsage);
  EXPECT_EQ(run({"dtable", "--n", "3"}).code, cli::kUsage);
  EXPECT_EQ(run({"dtable", "--m", "x", "--n", "3"}).code, cli::kUsage);
  EXPECT_EQ(run({"dtable", "--m", "3..5", "--n", "3"}).code, cli::kUsage);
  EXPECT_EQ(run({"scan", "--m", "3", "--format", "xml"}).code, cli::kUsage);
  EXPECT_EQ(run({"scan", "--m", "5..4"}).code, cli::kUsage);

  const auto bad_poly = run({"torsion", "--coeffs", "1,1"});
  EXPECT_EQ(bad_poly.code, cli::kInvalidInput);
  EXPECT_NE(bad_poly.err.find("normalization"), std::string::npos);
  EXPECT_EQ(run({"dtable", "--m", "2", "--n", "3"}).code, cli::kInvalidInput);
  EXPECT_EQ(run({"dtable", "--m", "3", "--n", "0"}).code, cli::kInvalidInput);
  EXPECT_EQ(run({"scan", "--m", "3", "--upper", "9"}).code, cli::kInvalidInput);
  EXPECT_EQ(run({"--help"}).code, cli::kOk);
}

TEST(Cli, ByteDeterministic) {
  const std::vector<std::vector<std::string>> commands{
      {"dtable", "--m", "3", "--n", "15", "--format", "json"},
      {"torsion", "--m", "7", "--format", "csv"},
      {"obstruct", "--m", "5", "--n", "19", "--format", "json"},
      {"scan", "--m", "3..9", "--format", "json"},
      {"scan", "--m", "3..9"},
  };
  for (const auto& c : commands) EXPECT_EQ(run(c).out, run(c).out);
}
