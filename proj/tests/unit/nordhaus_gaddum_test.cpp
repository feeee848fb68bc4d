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

#include "pmatch/nordhaus_gaddum.hpp"

#include <gtest/gtest.h>

#include <limits>

#include "pmatch/corpus.hpp"
#include "pmatch/error.hpp"
#include "pmatch/generators.hpp"
#include "pmatch/oracle.hpp"
#include "pmatch/structure.hpp"

namespace pmatch {
namespace {

TEST(NordhausGaddumTest, SelfComplementaryCycle) {
  // C5 is isomorphic to its complement.
  NordhausGaddumRecord r = nordhaus_gaddum_record(cycle_graph(5), "C5", PropertyId::kPlain);
  EXPECT_EQ(r.beta, 2u);
  EXPECT_EQ(r.beta_complement, 2u);
  EXPECT_EQ(r.sum(), 4u);
  EXPECT_EQ(r.product(), 4u);
  nlohmann::json j = r.to_json();
  EXPECT_EQ(j["type"], "nordhaus-gaddum");
  EXPECT_EQ(j["n_minus_beta"], 3);
  EXPECT_EQ(j["witness"], format_edges(cycle_graph(5), r.witness));
  EXPECT_EQ(j["witness_complement"],
            format_edges(complement(cycle_graph(5)), r.witness_complement));
}

TEST(NordhausGaddumTest, ScanExtremesMatchOracle) {
  for (PropertyId p : {PropertyId::kPlain, PropertyId::kInduced}) {
    Corpus c;
    c.add_all_graphs(5);
    NordhausGaddumScan scan = nordhaus_gaddum_scan(c, p);
    ASSERT_EQ(scan.records.size(), c.size());
    EXPECT_EQ(scan.summary.skipped, 0u);
    std::size_t lo = std::numeric_limits<std::size_t>::max(), hi = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
      NamedGraph item = c.at(i);
      std::size_t a = oracle_parameter(item.graph, beta_parameter(p)).value;
      std::size_t b = oracle_parameter(complement(item.graph), beta_parameter(p)).value;
      ASSERT_EQ(scan.records[i].beta, a) << item.id;
      ASSERT_EQ(scan.records[i].beta_complement, b) << item.id;
      lo = std::min(lo, a + b);
      hi = std::max(hi, a + b);
    }
    ASSERT_TRUE(scan.summary.min_sum && scan.summary.max_sum);
    EXPECT_EQ(scan.summary.min_sum->value, lo);
    EXPECT_EQ(scan.summary.max_sum->value, hi);
    EXPECT_EQ(scan.summary.to_json()["type"], "nordhaus-gaddum-summary");
  }
}

TEST(NordhausGaddumTest, ThreadCountDoesNotChangeRecords) {
  Corpus c;
  c.add_random(30, 8, 0.5, 5);
  NordhausGaddumScan one = nordhaus_gaddum_scan(c, PropertyId::kUniquelyRestricted, {}, 1);
  NordhausGaddumScan four = nordhaus_gaddum_scan(c, PropertyId::kUniquelyRestricted, {}, 4);
  ASSERT_EQ(one.records.size(), four.records.size());
  for (std::size_t i = 0; i < one.records.size(); ++i) {
    EXPECT_EQ(one.records[i].to_json(), four.records[i].to_json());
  }
}

TEST(NordhausGaddumTest, BudgetIsCountedAsSkip) {
  SolverOptions tiny;
  tiny.node_budget = 3;
  tiny.use_fast_paths = false;
  EXPECT_THROW(nordhaus_gaddum_record(random_gnp(12, 0.5, 1), "g", PropertyId::kInduced, tiny),
               Error);
  Corpus c;
  c.add_random(3, 12, 0.5, 1);
  NordhausGaddumScan scan = nordhaus_gaddum_scan(c, PropertyId::kInduced, tiny);
  EXPECT_EQ(scan.summary.skipped, 3u);
  EXPECT_TRUE(scan.records.empty());
}

}  // namespace
}  // namespace pmatch
