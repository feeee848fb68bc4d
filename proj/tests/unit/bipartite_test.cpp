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

#include "pmatch/bipartite.hpp"

#include <gtest/gtest.h>

#include "pmatch/corpus.hpp"
#include "pmatch/error.hpp"
#include "pmatch/generators.hpp"
#include "pmatch/oracle.hpp"
#include "pmatch/structure.hpp"

namespace pmatch {
namespace {

bool covers(const Graph& g, const VertexSet& cover) {
  for (const Edge& e : g.edges()) {
    if (!std::binary_search(cover.begin(), cover.end(), e.u) &&
        !std::binary_search(cover.begin(), cover.end(), e.v)) {
      return false;
    }
  }
  return true;
}

TEST(HopcroftKarpTest, SmallInstance) {
  HopcroftKarp hk(3, {{0, 1}, {0}, {0, 2}});
  EXPECT_EQ(hk.run(), 3u);
  EXPECT_EQ(hk.mate_of_left()[1], 0u);
  HopcroftKarp deficient(2, {{0}, {0}, {1}});
  EXPECT_EQ(deficient.run(), 2u);
  std::vector<char> left, right;
  std::vector<std::uint32_t> free_left;
  for (std::uint32_t l = 0; l < 3; ++l) {
    if (deficient.mate_of_left()[l] == HopcroftKarp::kFree) free_left.push_back(l);
  }
  ASSERT_EQ(free_left.size(), 1u);
  deficient.alternating_reach(free_left, left, right);
  EXPECT_TRUE(left[0] && left[1]);
  EXPECT_TRUE(right[0]);
  EXPECT_FALSE(right[1]);
}

TEST(KonigTest, CoverEqualsMatchingOnBipartiteGraphs) {
  Corpus c;
  for (std::size_t n = 0; n <= 6; ++n) c.add_all_graphs(n);
  std::size_t bipartite = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    NamedGraph item = c.at(i);
    if (!is_bipartite(item.graph)) continue;
    ++bipartite;
    MatchingWithCover r = bipartite_max_matching_with_cover(item.graph);
    ASSERT_EQ(r.matching.size(), oracle_parameter(item.graph, ParameterId::kBeta1).value);
    ASSERT_EQ(r.cover.size(), r.matching.size());
    ASSERT_TRUE(covers(item.graph, r.cover)) << item.id;
  }
  EXPECT_GT(bipartite, 1000u);
}

TEST(KonigTest, LargeGrid) {
  Graph q = hypercube_graph(10);
  MatchingWithCover r = bipartite_max_matching_with_cover(q);
  EXPECT_EQ(r.matching.size(), 512u);
  EXPECT_TRUE(covers(q, r.cover));
}

TEST(KonigTest, RejectsOddCycle) {
  EXPECT_THROW(bipartite_max_matching_with_cover(cycle_graph(5)), Error);
}

}  // namespace
}  // namespace pmatch
