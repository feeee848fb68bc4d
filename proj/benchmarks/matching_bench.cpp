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

#include <benchmark/benchmark.h>

#include "pmatch/bipartite.hpp"
#include "pmatch/blossom.hpp"
#include "pmatch/generators.hpp"
#include "pmatch/solver.hpp"

namespace pmatch {
namespace {

void BM_BlossomGnp(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Graph g = random_gnp(n, 8.0 / static_cast<double>(n), 1);
  for (auto _ : state) {
    BlossomMatcher b(g);
    benchmark::DoNotOptimize(b.maximize());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BlossomGnp)->RangeMultiplier(4)->Range(64, 16384)->Complexity();

void BM_MaxMatchingHypercube(benchmark::State& state) {
  Graph g = hypercube_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(max_matching(g).value);
}
BENCHMARK(BM_MaxMatchingHypercube)->DenseRange(6, 14, 4);

void BM_TreeBMatching(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Graph t = random_tree(n, 7);
  BoundFunction b = BoundFunction::capped_degree(t, 2);
  for (auto _ : state) benchmark::DoNotOptimize(tree_b_matching_max(t, b).value);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_TreeBMatching)->RangeMultiplier(10)->Range(1000, 1000000)->Complexity();

}  // namespace
}  // namespace pmatch

BENCHMARK_MAIN();
