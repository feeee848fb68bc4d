// Copyright 2026 The pmatch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <gtest/gtest.h>

#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <vector>

namespace pmatch::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<nlohmann::json> lines(const std::string& text) {
  std::vector<nlohmann::json> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (!line.empty()) out.push_back(nlohmann::json::parse(line));
  }
  return out;
}

TEST(CliTest, ComputePath) {
  Outcome r = run({"compute", "--family", "path", "--n", "8", "--params", "beta1,beta1minus"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  auto js = lines(r.out);
  ASSERT_EQ(js.size(), 1u);
  EXPECT_EQ(js[0]["graph"], "path-n8");
  EXPECT_EQ(js[0]["parameters"][0]["value"], 4);
  EXPECT_EQ(js[0]["parameters"][1]["value"], 3);
}

TEST(CliTest, ComputeSingleEdgeAllParameters) {
  Outcome r = run({"compute", "--family", "complete", "--n", "2"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  auto js = lines(r.out);
  ASSERT_EQ(js.size(), 1u);
  EXPECT_EQ(js[0]["parameters"].size(), 34u);
  for (const auto& row : js[0]["parameters"]) {
    if (row["parameter"] == "beta_v_ir" || row["parameter"] == "beta_e_ir") {
      EXPECT_EQ(row["value"], "undefined");
    }
    if (row["parameter"] == "beta_star") EXPECT_EQ(row["value"], 1);
  }
}

TEST(CliTest, ComputeFromFile) {
  Outcome r = run({"compute", "--input", std::string(PMATCH_TEST_DATA_DIR) + "/fig2l.txt",
                   "--params", "beta_ur"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  auto js = lines(r.out);
  ASSERT_EQ(js.size(), 1u);
  EXPECT_GE(js[0]["parameters"][0]["value"].get<int>(), 4);
}

TEST(CliTest, TsvOutput) {
  Outcome r =
      run({"compute", "--family", "path", "--n", "3", "--params", "beta1", "--format", "tsv"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out,
            "graph\tparameter\tstatus\tvalue\twitness\troute\tnodes\n"
            "path-n3\tbeta1\tok\t1\t0-1\tfast-path\t0\n");
}

TEST(CliTest, VerifyReportsCertificates) {
  Outcome bad = run({"verify", "--family", "path", "--n", "8", "--property", "matching",
                     "--matching", "1-2,2-3"});
  EXPECT_EQ(bad.code, kExitFailure);
  auto j = lines(bad.out).at(0);
  EXPECT_EQ(j["holds"], false);
  EXPECT_EQ(j["certificate"]["shared_vertex"], "2");
  Outcome good = run({"verify", "--family", "path", "--n", "8", "--property", "perfect",
                      "--matching", "0-1,2-3,4-5,6-7"});
  EXPECT_EQ(good.code, kExitOk) << good.out << good.err;
  Outcome not_maximal = run({"verify", "--family", "path", "--n", "8", "--property", "induced",
                             "--matching", "0-1,3-4", "--maximal"});
  EXPECT_EQ(not_maximal.code, kExitFailure);
  Outcome bip = run({"verify", "--family", "FIG4", "--property", "bipartite", "--matching",
                     "1-1',2-2',3-3',4-4'"});
  ASSERT_EQ(bip.code, kExitOk) << bip.out << bip.err;
  EXPECT_TRUE(lines(bip.out).at(0)["certificate"].contains("orientation"));
}

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"compute"}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({"compute", "--family", "path", "--n", "4", "--params", "beta_nope"}).code,
            kExitUsage);
  EXPECT_EQ(run({"verify", "--family", "path", "--n", "4", "--matching", "0-1"}).code, kExitUsage);
  EXPECT_EQ(run({"compute", "--input", "/nonexistent/graph.txt"}).code, kExitUsage);
  EXPECT_EQ(run({"--help"}).code, kExitOk);
}

TEST(CliTest, BudgetExit) {
  Outcome r = run({"compute", "--family", "gnp", "--n", "14", "--p", "0.5", "--seed", "3",
                   "--params", "beta_star", "--budget", "5"});
  EXPECT_EQ(r.code, kExitBudget);
  EXPECT_EQ(lines(r.out).at(0)["parameters"][0]["status"], "budget-exceeded");
}

TEST(CliTest, TheoremsOverCorpus) {
  Outcome r = run({"theorems", "--all-n", "5", "--quiet"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  auto js = lines(r.out);
  ASSERT_FALSE(js.empty());
  EXPECT_EQ(js.back()["type"], "summary");
  EXPECT_EQ(js.back()["graphs"], 1024);
  EXPECT_EQ(js.back()["failed"], 0);
  Outcome k = run({"theorems", "--family", "cycle", "--n", "4", "--check", "konig"});
  ASSERT_EQ(k.code, kExitOk);
  auto kj = lines(k.out);
  ASSERT_EQ(kj.size(), 2u);
  EXPECT_EQ(kj[0]["theorem"], "konig");
  EXPECT_EQ(kj[0]["holds"], true);
}

TEST(CliTest, ScanSummary) {
  Outcome r = run({"scan", "--property", "induced", "--all-n", "5", "--quiet"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  auto js = lines(r.out);
  ASSERT_EQ(js.size(), 1u);
  EXPECT_EQ(js[0]["type"], "nordhaus-gaddum-summary");
  EXPECT_EQ(js[0]["records"], 1024);
}

TEST(CliTest, GenerateRoundTrips) {
  Outcome g = run({"generate", "--family", "cycle", "--n", "5"});
  ASSERT_EQ(g.code, kExitOk);
  EXPECT_EQ(g.out.substr(0, 4), "5 5\n");
}

TEST(CliTest, ThreadsDoNotChangeOutput) {
  std::vector<std::string> base = {"compute", "--random", "6",      "--n", "8",
                                   "--p",     "0.5",      "--seed", "4",   "--threads"};
  auto a = base, b = base;
  a.push_back("1");
  b.push_back("3");
  EXPECT_EQ(run(a).out, run(b).out);
}

}  // namespace
}  // namespace pmatch::cli
