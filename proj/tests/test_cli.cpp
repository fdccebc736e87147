#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "deficit/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = deficit::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Compute, Examples) {
  auto r = run({"compute", "5", "--method", "all"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "3 3 3 3 3 MATCH\n");
  EXPECT_EQ(run({"compute", "0"}).out, "0\n");
  EXPECT_EQ(run({"compute", "0", "--method", "all"}).out, "0 0 0 0 0 MATCH\n");
  EXPECT_EQ(run({"compute", "1048576", "--method", "recurrence"}).out, "1048556\n");
  EXPECT_EQ(run({"compute", "1152921504606846976"}).out, "1152921504606846916\n");
}

TEST(Compute, UsageErrors) {
  EXPECT_EQ(run({"compute", "1152921504606846977"}).code, 2);
  EXPECT_EQ(run({"compute", "67108865", "--method", "sets"}).code, 2);
  EXPECT_EQ(run({"compute", "5", "--method", "magic"}).code, 2);
  EXPECT_EQ(run({"compute"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"compute", "-3"}).code, 2);
}

TEST(Range, BFile) {
  auto r = run({"range", "0", "5", "--format", "bfile"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "0 0\n1 1\n2 1\n3 3\n4 2\n5 3\n");
  EXPECT_EQ(run({"range", "1", "1"}).out, "1 1\n");
  EXPECT_EQ(run({"range", "5", "1"}).code, 2);
}

TEST(Range, ByteIdenticalAcrossMethods) {
  const std::string ref = run({"range", "0", "300", "--method", "recurrence"}).out;
  for (const char* m : {"naive", "sets", "lemma2", "takagi", "all"})
    EXPECT_EQ(run({"range", "0", "300", "--method", m}).out, ref) << m;
  const std::string csv = run({"range", "17", "300", "--format", "csv"}).out;
  for (const char* m : {"naive", "sets", "lemma2", "takagi"})
    EXPECT_EQ(run({"range", "17", "300", "--format", "csv", "--method", m}).out, csv) << m;
}

TEST(Range, CsvAndJson) {
  EXPECT_EQ(run({"range", "3", "4", "--format", "csv"}).out, "n,a(n)\n3,3\n4,2\n");
  const auto j = run({"range", "3", "4", "--format", "json"}).out;
  const auto parsed = nlohmann::json::parse(j);
  ASSERT_EQ(parsed.size(), 2u);
  EXPECT_EQ(parsed[1]["n"], 4);
  EXPECT_EQ(parsed[1]["value"], 2);
  EXPECT_EQ(run({"range", "3", "4", "--format", "xml"}).code, 2);
}

TEST(Range, OutFile) {
  const auto path = std::filesystem::temp_directory_path() / "deficit_range_test.b";
  auto r = run({"range", "0", "5", "--out", path.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(ss.str(), "0 0\n1 1\n2 1\n3 3\n4 2\n5 3\n");
  std::filesystem::remove(path);
  EXPECT_EQ(run({"range", "0", "5", "--out", "/nonexistent-dir/x.b"}).code, 2);
}

TEST(Takagi, Examples) {
  EXPECT_EQ(run({"takagi", "1", "--exp", "2"}).out, "1/2\n");
  EXPECT_EQ(run({"takagi", "2", "3"}).out, "2/3\n");
  EXPECT_EQ(run({"takagi", "0", "--exp", "0"}).out, "0\n");
  EXPECT_EQ(run({"takagi", "3", "--exp", "3"}).out, "5/8\n");
  EXPECT_EQ(run({"takagi", "1", "4", "--enclose", "2"}).out, "[1/2, 1]\n");
}

TEST(Takagi, UsageErrors) {
  EXPECT_EQ(run({"takagi", "3", "2"}).code, 2);
  EXPECT_EQ(run({"takagi", "5", "--exp", "2"}).code, 2);
  EXPECT_EQ(run({"takagi", "1", "0"}).code, 2);
  EXPECT_EQ(run({"takagi", "1", "3", "--exp", "2"}).code, 2);
  EXPECT_EQ(run({"takagi", "1", "3", "--enclose", "0"}).code, 2);
}

TEST(Verify, ExitCodes) {
  auto ok = run({"verify", "oeis6", "--kmax", "10"});
  EXPECT_EQ(ok.code, 0);
  EXPECT_EQ(ok.out, "oeis6 PASS cases=2058\n");
  EXPECT_EQ(run({"verify", "bogus"}).code, 2);
  auto bad = run({"verify", "oeis6", "--kmax", "4", "--negative-control"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.out.find("first=(k=0,n=0) 1 | 2 [boundary]"), std::string::npos);
  EXPECT_EQ(run({"verify", "lemma1", "--kmax", "0"}).out, "lemma1 EMPTY cases=0\n");
  EXPECT_EQ(run({"verify", "lemma1", "--kmax", "0"}).code, 1);
  EXPECT_EQ(run({"verify", "oeis6", "--format", "yaml"}).code, 2);
}

TEST(Verify, AllCiProfileOneReportPerEntry) {
  ::setenv("DEFICIT_TAKAGI_PROFILE", "ci", 1);
  auto r = run({"verify", "all", "--format", "json"});
  ::unsetenv("DEFICIT_TAKAGI_PROFILE");
  const auto j = deficit::ordered_json::parse(r.out);
  ASSERT_EQ(j.size(), deficit::catalog().size());
  for (const auto& rep : j) {
    if (rep["id"] == "lemma_half") {
      EXPECT_FALSE(rep["pass"].get<bool>());
      continue;
    }
    EXPECT_TRUE(rep["pass"].get<bool>()) << rep["id"];
  }
  // JSON re-emits byte-identically
  EXPECT_EQ(j.dump(2) + "\n", r.out);
}

TEST(Verify, BadProfileIsUsageError) {
  ::setenv("DEFICIT_TAKAGI_PROFILE", "turbo", 1);
  EXPECT_EQ(run({"verify", "oeis6"}).code, 2);
  ::unsetenv("DEFICIT_TAKAGI_PROFILE");
}

TEST(Special, Examples) {
  EXPECT_EQ(run({"special", "a026644", "--count", "3"}).out, "2 4 10\n");
  EXPECT_EQ(run({"special", "a026644", "--limit", "100"}).out, "2 4 10 20 42 84\n");
  EXPECT_EQ(run({"special", "a000975", "--count", "5"}).out, "1 2 5 10 21\n");
  EXPECT_EQ(run({"special", "power4", "--mmax", "1"}).out, "(1,1) (6,4)\n");
  EXPECT_EQ(run({"special", "minima", "--kmax", "3"}).out, "1 2 1\n2 4 2\n3 8 5\n");
  EXPECT_EQ(run({"special", "minima", "--kmax", "30"}).code, 2);
  EXPECT_EQ(run({"special", "power4", "--mmax", "40"}).code, 2);
  EXPECT_EQ(run({"special", "a026644", "--count", "0"}).code, 2);
  EXPECT_EQ(run({"special", "nope"}).code, 2);
}
