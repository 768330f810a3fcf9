#include "cli/cli.hpp"

#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

using symcurv::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

int count_lines(const std::string& s) { return static_cast<int>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST(Cli, BoundGJson) {
  auto r = call({"bound", "G", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("\"bound\": \"1/4\""), std::string::npos);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["rank"], 2);
  EXPECT_EQ(j["dim"], 8);
}

TEST(Cli, BoundMarkdown) {
  auto r = call({"bound", "CII", "--p", "1", "--q", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("| bound | 1/10 |"), std::string::npos);
  EXPECT_NE(r.out.find("| lower bound | NOT_COMPUTED |"), std::string::npos);
  EXPECT_NE(r.out.find("| compact type | Sp(4)/Sp(1)xSp(3) |"), std::string::npos);
}

TEST(Cli, BoundGroup) {
  auto a = call({"bound", "GROUP(E8)"});
  auto b = call({"bound", "GROUP", "--type", "E8"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("| bound | 1/30 |"), std::string::npos);
}

TEST(Cli, RootsG2) {
  auto r = call({"roots", "G2"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(count_lines(r.out), 2 + 6);
  auto j = nlohmann::json::parse(call({"roots", "G2", "--format", "json"}).out);
  EXPECT_EQ(j, nlohmann::json::parse("[[1,0],[0,1],[1,1],[2,1],[3,1],[3,2]]"));
}

TEST(Cli, SampsonAIBoundary) {
  auto r = call({"sampson", "AI", "--n", "8", "--criterion", "conservative"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("| AI(n=8) | conservative | 1/8 | 1/2 | pass | 0 |"), std::string::npos);
  auto j = nlohmann::json::parse(call({"sampson", "AI", "--n", "8", "--criterion", "conservative", "--format", "json"}).out);
  EXPECT_EQ(j["verdicts"][0]["passes"], true);
  EXPECT_EQ(j["verdicts"][0]["margin"], "0");
}

TEST(Cli, SampsonGFlagsDiscrepancy) {
  auto r = call({"sampson", "G"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("| G | conservative | 1/4 | 1/2 | fail | -1/2 |"), std::string::npos);
  EXPECT_NE(r.out.find("| G | relaxed | 1/4 | 1/2 | pass | 0 |"), std::string::npos);
  EXPECT_NE(r.out.find("disagree"), std::string::npos);
}

TEST(Cli, SampsonThresholds) {
  auto r = call({"sampson", "BDI", "--criterion", "conservative", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("BDI,rank=1,conservative,p+q,6,"), std::string::npos);
  EXPECT_NE(r.out.find("BDI,rank>1,conservative,p+q,10,"), std::string::npos);
}

TEST(Cli, TableFormats) {
  auto md = call({"table", "--family", "FII"});
  ASSERT_EQ(md.code, 0);
  EXPECT_NE(md.out.find("| FII |  | 1 | 16 | 1/18 |"), std::string::npos);
  auto csv = call({"table", "--max-n", "3", "--max-pq", "5", "--format", "csv"});
  ASSERT_EQ(csv.code, 0);
  EXPECT_EQ(csv.out.substr(0, csv.out.find('\n')), "type,space,rank,dimension,bound");
  auto json = nlohmann::json::parse(call({"table", "--format", "json"}).out);
  EXPECT_TRUE(json.is_array());
}

TEST(Cli, EmptyTableSelectionFails) {
  auto r = call({"table", "--family", "CII", "--max-pq", "1"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("empty"), std::string::npos);
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, InvalidArguments) {
  for (std::vector<std::string> args : std::vector<std::vector<std::string>>{
           {},
           {"nonsense"},
           {"bound", "XYZ"},
           {"bound", "AI"},
           {"bound", "AI", "--n", "1"},
           {"bound", "AI", "--p", "2", "--q", "3"},
           {"bound", "AIII", "--n", "3"},
           {"bound", "EI", "--n", "3"},
           {"bound", "GROUP"},
           {"bound", "GROUP(E9)"},
           {"bound", "AI", "--n", "4", "--format", "xml"},
           {"sampson", "AI", "--n", "8", "--criterion", "strict"},
           {"roots", "B1"},
           {"table", "--max-n", "-2"},
           {"verify", "--expectations", "/nonexistent/file.json"},
       }) {
    auto r = call(args);
    EXPECT_EQ(r.code, 1) << (args.empty() ? "(none)" : args[0] + " " + (args.size() > 1 ? args[1] : ""));
    EXPECT_FALSE(r.err.empty());
  }
}

TEST(Cli, HelpSucceeds) {
  auto r = call({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("verify"), std::string::npos);
}

TEST(Cli, Verify) {
  auto r = call({"verify"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("7/7 checks passed"), std::string::npos);
  auto j = nlohmann::json::parse(call({"verify", "--format", "json"}).out);
  EXPECT_EQ(j["passed"], true);
  EXPECT_EQ(j["checks"].size(), 7u);
}

TEST(Cli, VerifyFailureExitsTwo) {
  std::ifstream in(SYMCURV_EXPECTATIONS_PATH);
  ASSERT_TRUE(in);
  auto j = nlohmann::json::parse(in);
  j["closed_forms"]["G"]["bound"] = "1/3";
  std::string path = testing::TempDir() + "symcurv_bad_expectations.json";
  std::ofstream(path) << j.dump();
  auto r = call({"verify", "--expectations", path});
  std::remove(path.c_str());
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, FileExpectationsMatchEmbedded) {
  auto a = call({"verify", "--expectations", SYMCURV_EXPECTATIONS_PATH});
  auto b = call({"verify"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, ByteIdenticalOutput) {
  for (std::vector<std::string> args : std::vector<std::vector<std::string>>{
           {"table"}, {"bound", "EIV", "--format", "json"}, {"roots", "E8", "--format", "csv"}}) {
    EXPECT_EQ(call(args).out, call(args).out);
  }
}

TEST(Cli, OutputWidthWrapsNotes) {
  ::setenv("SYMCURV_OUTPUT_WIDTH", "30", 1);
  auto narrow = call({"bound", "AII", "--n", "3"});
  ::setenv("SYMCURV_OUTPUT_WIDTH", "0", 1);
  auto wide = call({"bound", "AII", "--n", "3"});
  ::unsetenv("SYMCURV_OUTPUT_WIDTH");
  ASSERT_EQ(narrow.code, 0);
  EXPECT_GT(count_lines(narrow.out), count_lines(wide.out));
  std::istringstream in(narrow.out);
  bool in_notes = false;
  for (std::string l; std::getline(in, l);) {
    if (l.empty()) {
      in_notes = true;
    } else if (in_notes) {
      EXPECT_LE(l.size(), 40u) << l;
    }
  }
}
