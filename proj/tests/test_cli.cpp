#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"

using dissoc::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "dissoc");
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("dissoc_cli_" + name);
  std::ofstream(path) << text;
  return path.string();
}

const char* kLt8 = "u1 u2\nu2 u3\nu3 u4\nu1 v1\nu2 v2\nu3 v3\nu4 v4\n";

}  // namespace

TEST(Cli, AnalyzeLt8) {
  const auto r = invoke({"analyze", write_temp("lt8.txt", kLt8), "--k", "2,3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::ordered_json::parse(r.out);
  EXPECT_EQ(doc["mds_count"], "3");
  EXPECT_EQ(doc["alpha3"], 6);
  EXPECT_EQ(doc["eta"], 2);
  EXPECT_EQ(doc["static_included"], (std::vector<std::string>{"v1", "v2", "v3", "v4"}));
  EXPECT_EQ(doc["kke"]["3"]["mu_k"], 2);
  EXPECT_TRUE(doc["kke"]["2"]["holds"].get<bool>());
  std::vector<std::string> keys;
  for (const auto& [k, v] : doc.items()) keys.push_back(k);
  EXPECT_EQ(keys.front(), "n");
  EXPECT_EQ(keys[1], "alpha3");
}

TEST(Cli, AnalyzeIsDeterministic) {
  const std::string path = write_temp("det.txt", "a b\nb c\nc d\nd e\nc f\nf g\n");
  EXPECT_EQ(invoke({"analyze", path}).out, invoke({"analyze", path}).out);
}

TEST(Cli, EnumerateLabels) {
  const auto r = invoke({"enumerate", write_temp("p3.txt", "x y\ny z\n")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "x y\nx z\ny z\n");
}

TEST(Cli, EnumerateLimitIsGuard) {
  const auto r = invoke({"enumerate", write_temp("p3b.txt", "x y\ny z\n"), "--limit", "1"});
  EXPECT_EQ(r.code, dissoc::cli::kGuard);
  EXPECT_EQ(r.out, "x y\n");
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(invoke({}).code, dissoc::cli::kUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, dissoc::cli::kUsage);
  EXPECT_EQ(invoke({"analyze", "/nonexistent/file"}).code, dissoc::cli::kUsage);
  EXPECT_EQ(invoke({"analyze", write_temp("cyc.txt", "1 2\n2 3\n3 1\n")}).code, dissoc::cli::kUsage);
  EXPECT_EQ(invoke({"analyze", write_temp("k1.txt", "1 2\n"), "--k", "1"}).code, dissoc::cli::kUsage);
  EXPECT_EQ(invoke({"gen-trees"}).code, dissoc::cli::kUsage);
  EXPECT_EQ(invoke({"--help"}).code, dissoc::cli::kOk);
}

TEST(Cli, GenTrees) {
  EXPECT_EQ(invoke({"gen-trees", "--n", "4", "--count-only"}).out, "2\n");
  const auto r = invoke({"gen-trees", "--n", "5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("# tree 2"), std::string::npos);
  EXPECT_EQ(r.out.find("# tree 3"), std::string::npos);
}

TEST(Cli, ExtremalSweepSeven) {
  const auto r = invoke({"extremal", "--n", "7", "--sweep"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::ordered_json::parse(r.out);
  EXPECT_EQ(doc["formula_value"], "4");
  EXPECT_TRUE(doc["match"].get<bool>());
  EXPECT_EQ(doc["extremal_codes"].size(), 2u);
}

TEST(Cli, ExtremalWithoutSweep) {
  const auto r = invoke({"extremal", "--n", "8"});
  ASSERT_EQ(r.code, 0);
  const auto doc = nlohmann::ordered_json::parse(r.out);
  EXPECT_EQ(doc["formula_value"], "3");
  EXPECT_EQ(doc["family"].size(), 7u);
  EXPECT_FALSE(doc.contains("observed_max"));
  EXPECT_EQ(invoke({"extremal", "--n", "30", "--sweep"}).code, dissoc::cli::kGuard);
}

TEST(Cli, VerifyJobsIndependent) {
  const auto a = invoke({"verify", "--n-max", "9", "--jobs", "1"});
  const auto b = invoke({"verify", "--n-max", "9", "--jobs", "3"});
  ASSERT_EQ(a.code, 0) << a.out;
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("47"), std::string::npos);
}

TEST(Cli, VerifyCsv) {
  const auto path = std::filesystem::temp_directory_path() / "dissoc_cli_verify.csv";
  ASSERT_EQ(invoke({"verify", "--n-max", "6", "--csv", path.string()}).code, 0);
  std::ifstream in(path);
  std::string header, row;
  std::getline(in, header);
  EXPECT_EQ(header, "n,trees,max_count,formula,match,failures");
  for (int i = 0; i < 6; ++i) std::getline(in, row);
  EXPECT_EQ(row, "6,6,6,6,true,0");
}
