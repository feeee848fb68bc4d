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

#include "pmatch/blossom.hpp"

#include <gtest/gtest.h>

#include "pmatch/corpus.hpp"
#include "pmatch/error.hpp"
#include "pmatch/generators.hpp"
#include "pmatch/matching.hpp"
#include "pmatch/oracle.hpp"
#include "pmatch/solver.hpp"

namespace pmatch {
namespace {

std::size_t blossom_size(const Graph& g) {
  BlossomMatcher b(g);
  std::size_t size = b.maximize();
  Matching m = Matching::from_mates(g, b.mates());  // validates the mate table
  EXPECT_EQ(m.size(), size);
  return size;
}

TEST(BlossomTest, AgreesWithOracleOnAllGraphsUpToSix) {
  Corpus c;
  for (std::size_t n = 0; n <= 6; ++n) c.add_all_graphs(n);
  for (std::size_t i = 0; i < c.size(); ++i) {
    NamedGraph item = c.at(i);
    ASSERT_EQ(blossom_size(item.graph), oracle_parameter(item.graph, ParameterId::kBeta1).value)
        << item.id;
  }
}

TEST(BlossomTest, AgreesWithOracleOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    Graph g = random_gnp(10 + seed % 4, 0.25, seed);
    if (g.num_edges() > kOracleMaxEdges) continue;
    ASSERT_EQ(blossom_size(g), oracle_parameter(g, ParameterId::kBeta1).value) << seed;
  }
}

TEST(BlossomTest, KnownValues) {
  EXPECT_EQ(blossom_size(complete_graph(7)), 3u);
  EXPECT_EQ(blossom_size(cycle_graph(9)), 4u);
  EXPECT_EQ(blossom_size(hypercube_graph(6)), 32u);
  EXPECT_EQ(blossom_size(complete_bipartite_graph(3, 8)), 3u);
  EXPECT_EQ(blossom_size(path_graph(100001)), 50000u);
}

TEST(BlossomTest, AugmentsFromAGivenMatching) {
  // Greedy 1-2 on P4 blocks the perfect matching until one augmentation.
  Graph p4 = path_graph(4);
  BlossomMatcher b(p4);
  b.set_mates({kNoVertex, 2, 1, kNoVertex});
  EXPECT_EQ(b.size(), 1u);
  EXPECT_TRUE(b.augment_from(0));
  EXPECT_EQ(b.size(), 2u);
  EXPECT_FALSE(b.augment_from(0));
  EXPECT_THROW(b.set_mates({1, 0, kNoVertex}), Error);
  EXPECT_THROW(b.set_mates({2, kNoVertex, 0, kNoVertex}), Error);
}

TEST(BlossomTest, GreedyInitThenMaximize) {
  Graph g = random_tree(5000, 3);
  BlossomMatcher b(g);
  b.greedy_init();
  std::size_t greedy = b.size();
  std::size_t best = b.maximize();
  EXPECT_LE(greedy, best);
  EXPECT_EQ(best, max_matching(g).value);
}

}  // namespace
}  // namespace pmatch
