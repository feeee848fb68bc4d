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

#include <gtest/gtest.h>

#include <random>

#include "pmatch/error.hpp"
#include "pmatch/generators.hpp"
#include "pmatch/oracle.hpp"
#include "pmatch/properties.hpp"
#include "pmatch/solver.hpp"

namespace pmatch {
namespace {

TEST(TreeBMatchingTest, UnitBoundsGiveMatchingNumber) {
  Graph p4 = path_graph(4);
  ParameterResult r = tree_b_matching_max(p4, BoundFunction(p4, {1, 1, 1, 1}));
  EXPECT_EQ(r.value, 2u);
}

TEST(TreeBMatchingTest, StarWithCenterBoundTwo) {
  Graph star = complete_bipartite_graph(1, 4);
  ParameterResult r = tree_b_matching_max(star, BoundFunction(star, {2, 1, 1, 1, 1}));
  EXPECT_EQ(r.value, 2u);
  EXPECT_TRUE(is_b_matching(star, r.witness.edges, BoundFunction(star, {2, 1, 1, 1, 1})));
}

TEST(TreeBMatchingTest, RejectsCycles) {
  Graph c5 = cycle_graph(5);
  EXPECT_THROW(tree_b_matching_max(c5, BoundFunction::capped_degree(c5, 1)), Error);
  EXPECT_EQ(compute(c5, ParameterId::kBMatchingMax).status, ResultStatus::kNotApplicable);
}

TEST(TreeBMatchingTest, BoundFunctionValidation) {
  Graph p3 = path_graph(3);
  EXPECT_THROW(BoundFunction(p3, {1, 1}), Error);
  EXPECT_EQ(BoundFunction::capped_degree(p3, 2).values(), (std::vector<std::size_t>{1, 2, 1}));
}

TEST(TreeBMatchingTest, AgreesWithOracleOnRandomForests) {
  std::mt19937_64 rng(42);
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    Graph t = random_tree(2 + seed % 14, seed);
    if (seed % 3 == 0) {
      // Drop an edge to get a forest.
      std::vector<Edge> edges(t.edges().begin(), t.edges().end());
      edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(rng() % edges.size()));
      t = Graph(t.num_vertices(), edges);
    }
    std::vector<std::size_t> b(t.num_vertices());
    for (Vertex v = 0; v < b.size(); ++v) b[v] = rng() % (t.degree(v) + 1);
    BoundFunction bound(t, b);
    ParameterResult got = tree_b_matching_max(t, bound);
    ASSERT_EQ(got.value, oracle_b_matching_max(t, bound).value) << "seed " << seed;
    ASSERT_TRUE(is_b_matching(t, got.witness.edges, bound));
    ASSERT_EQ(got.witness.edges.size(), got.value);
  }
}

TEST(TreeBMatchingTest, LongPathIsLinear) {
  Graph p = path_graph(100000);
  ParameterResult r = tree_b_matching_max(p, BoundFunction::capped_degree(p, 2));
  EXPECT_EQ(r.value, 99999u);
}

}  // namespace
}  // namespace pmatch
