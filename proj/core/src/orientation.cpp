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

// Orientation search as 2-SAT. Variable i is true when the smaller endpoint
// of the i-th matched edge is the tail.

#include <vector>

#include "pmatch/error.hpp"
#include "pmatch/properties.hpp"

namespace pmatch {
namespace {

class TwoSat {
 public:
  explicit TwoSat(std::size_t vars) : vars_(vars), graph_(2 * vars) {}

  // (a or b) over literal indices; literal 2i is x_i, 2i+1 is not x_i.
  void add_clause(std::size_t a, std::size_t b) {
    graph_[a ^ 1].push_back(b);
    graph_[b ^ 1].push_back(a);
  }

  std::optional<std::vector<bool>> solve() const {
    const std::size_t n = graph_.size();
    std::vector<std::vector<std::size_t>> reverse(n);
    for (std::size_t v = 0; v < n; ++v) {
      for (std::size_t w : graph_[v]) reverse[w].push_back(v);
    }
    // Kosaraju, iteratively.
    std::vector<std::size_t> order;
    std::vector<char> seen(n, 0);
    std::vector<std::pair<std::size_t, std::size_t>> stack;
    for (std::size_t r = 0; r < n; ++r) {
      if (seen[r]) continue;
      seen[r] = 1;
      stack.push_back({r, 0});
      while (!stack.empty()) {
        auto& [v, i] = stack.back();
        if (i < graph_[v].size()) {
          std::size_t w = graph_[v][i++];
          if (!seen[w]) {
            seen[w] = 1;
            stack.push_back({w, 0});
          }
        } else {
          order.push_back(v);
          stack.pop_back();
        }
      }
    }
    constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> comp(n, kUnset);
    std::size_t next = 0;
    std::vector<std::size_t> work;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      if (comp[*it] != kUnset) continue;
      comp[*it] = next;
      work.push_back(*it);
      while (!work.empty()) {
        std::size_t v = work.back();
        work.pop_back();
        for (std::size_t w : reverse[v]) {
          if (comp[w] == kUnset) {
            comp[w] = next;
            work.push_back(w);
          }
        }
      }
      ++next;
    }
    std::vector<bool> value(vars_);
    for (std::size_t i = 0; i < vars_; ++i) {
      if (comp[2 * i] == comp[2 * i + 1]) return std::nullopt;
      value[i] = comp[2 * i] > comp[2 * i + 1];
    }
    return value;
  }

 private:
  std::size_t vars_;
  std::vector<std::vector<std::size_t>> graph_;
};

std::optional<Orientation> solve_orientation(const Graph& g, const Matching& m,
                                             bool heads_independent) {
  if (m.host_vertices() != g.num_vertices()) {
    throw Error(ErrorKind::kInvalidArgument, "matching belongs to a different graph");
  }
  const EdgeSet& edges = m.edges();
  std::vector<std::size_t> owner(g.num_vertices(), edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    owner[g.edge(edges[i]).u] = owner[g.edge(edges[i]).v] = i;
  }
  // Literal meaning "p is a tail".
  auto tail_literal = [&](Vertex p) {
    std::size_t i = owner[p];
    return g.edge(edges[i]).u == p ? 2 * i : 2 * i + 1;
  };
  TwoSat sat(edges.size());
  for (Vertex p : m.saturated()) {
    for (Vertex q : g.neighbors(p)) {
      if (q < p || owner[q] == edges.size() || owner[q] == owner[p]) continue;
      const std::size_t lp = tail_literal(p);
      const std::size_t lq = tail_literal(q);
      sat.add_clause(lp ^ 1, lq ^ 1);
      if (heads_independent) sat.add_clause(lp, lq);
    }
  }
  auto value = sat.solve();
  if (!value) return std::nullopt;
  Orientation o;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = g.edge(edges[i]);
    o.arcs.push_back((*value)[i] ? std::make_pair(e.u, e.v) : std::make_pair(e.v, e.u));
  }
  return o;
}

}  // namespace

std::optional<Orientation> find_independent_orientation(const Graph& g, const Matching& m) {
  return solve_orientation(g, m, false);
}

std::optional<Orientation> find_bipartite_orientation(const Graph& g, const Matching& m) {
  return solve_orientation(g, m, true);
}

}  // namespace pmatch
