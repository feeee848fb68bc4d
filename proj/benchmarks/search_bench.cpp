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

#include "pmatch/generators.hpp"
#include "pmatch/solver.hpp"

namespace pmatch {
namespace {

// beta_P and beta_P^- by branch and bound on G(n, 0.3).
template <bool kMinus>
void BM_Search(benchmark::State& state) {
  const auto p = static_cast<PropertyId>(state.range(0));
  Graph g = random_gnp(static_cast<std::size_t>(state.range(1)), 0.3, 11);
  SolverOptions o;
  o.use_fast_paths = false;
  for (auto _ : state) {
    ParameterResult r = kMinus ? compute_beta_minus_p(g, p, o) : compute_beta_p(g, p, o);
    benchmark::DoNotOptimize(r.value);
    state.counters["nodes"] = static_cast<double>(r.nodes_explored);
  }
  state.SetLabel(std::string(property_name(p)));
}

void search_args(benchmark::internal::Benchmark* b) {
  for (PropertyId p : kAllProperties) {
    for (int n : {10, 14, 18}) b->Args({static_cast<int>(p), n});
  }
}

BENCHMARK(BM_Search<false>)->Apply(search_args)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Search<true>)->Apply(search_args)->Unit(benchmark::kMillisecond);

void BM_SeparatingHypercube(benchmark::State& state) {
  Graph g = hypercube_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(min_separating_matching(g).value);
}
BENCHMARK(BM_SeparatingHypercube)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace pmatch
