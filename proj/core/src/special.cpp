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

#include <algorithm>

#include "pmatch/error.hpp"
#include "pmatch/solver.hpp"
#include "pmatch/structure.hpp"

namespace pmatch {

ParameterResult tree_b_matching_max(const Graph& g, const BoundFunction& b) {
  if (b.values().size() != g.num_vertices()) {
    throw Error(ErrorKind::kInvalidArgument, "bound function size does not match graph");
  }
  if (!is_forest(g)) throw Error(ErrorKind::kNotApplicable, "graph is not a forest");

  const std::size_t n = g.num_vertices();
  std::vector<EdgeId> parent_edge(n, static_cast<EdgeId>(-1));
  std::vector<char> seen(n, 0);
  std::vector<Vertex> order;
  order.reserve(n);
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = 1;
    std::size_t head = order.size();
    order.push_back(root);
    while (head < order.size()) {
      Vertex v = order[head++];
      auto nbrs = g.neighbors(v);
      auto inc = g.incident_edges(v);
      for (std::size_t i = 0; i < nbrs.size(); ++i) {
        if (seen[nbrs[i]]) continue;
        seen[nbrs[i]] = 1;
        parent_edge[nbrs[i]] = inc[i];
        order.push_back(nbrs[i]);
      }
    }
  }
  // Leaves to root: take the parent edge whenever both ends have room.
  std::vector<std::size_t> room = b.values();
  EdgeSet taken;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Vertex v = *it;
    EdgeId up = parent_edge[v];
    if (up == static_cast<EdgeId>(-1)) continue;
    Vertex p = g.edge(up).other(v);
    if (room[v] > 0 && room[p] > 0) {
      --room[v];
      --room[p];
      taken.push_back(up);
    }
  }
  std::sort(taken.begin(), taken.end());
  ParameterResult r;
  r.parameter = ParameterId::kBMatchingMax;
  r.value = taken.size();
  r.witness = Witness::of_edges(std::move(taken));
  r.route = Route::kFastPath;
  return r;
}

std::optional<ParameterResult> block_class_fast_path(const Graph& g) {
  if (!blocks_are_edges_or_odd_cycles(g)) return std::nullopt;
  // No even cycle exists, so no matching has an alternating cycle.
  ParameterResult r = max_matching(g);
  r.parameter = ParameterId::kBetaUr;
  return r;
}

}  // namespace pmatch
