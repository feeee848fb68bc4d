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

// Vertex-set parameters (alpha0, beta0, gamma), alpha1, and total matchings.

#include <algorithm>
#include <bit>

#include "pmatch/solver.hpp"
#include "pmatch/structure.hpp"
#include "solver_internal.hpp"

namespace pmatch {
namespace {

class Bits {
 public:
  Bits() = default;
  explicit Bits(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  static Bits full(std::size_t n) {
    Bits b(n);
    for (std::size_t i = 0; i < n; ++i) b.set(i);
    return b;
  }

  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1; }

  bool none() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (std::uint64_t w : words_) c += std::popcount(w);
    return c;
  }
  std::size_t count_and(const Bits& o) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & o.words_[i]);
    return c;
  }
  Bits and_not(const Bits& o) const {
    Bits out = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] &= ~o.words_[i];
    return out;
  }
  Bits operator&(const Bits& o) const {
    Bits out = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] &= o.words_[i];
    return out;
  }
  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        f(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

// Closed neighborhoods as bitsets.
std::vector<Bits> closed_neighborhood_bits(const Graph& g) {
  std::vector<Bits> out(g.num_vertices(), Bits(g.num_vertices()));
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    out[v].set(v);
    for (Vertex w : g.neighbors(v)) out[v].set(w);
  }
  return out;
}

std::size_t max_degree(const Graph& g) {
  std::size_t d = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) d = std::max(d, g.degree(v));
  return d;
}

// Maximum independent set. Some optimum contains a vertex of N[v] for any
// candidate v; branching on the candidate with the fewest candidate
// neighbors keeps the tree narrow. Each branch vertex is dropped from the
// candidates of later siblings.
class MaxIndependentSet {
 public:
  MaxIndependentSet(const Graph& g, std::uint64_t budget)
      : nbr_(closed_neighborhood_bits(g)), counter_(budget) {}

  VertexSet run(std::size_t n) {
    dfs(Bits::full(n));
    std::sort(best_.begin(), best_.end());
    return best_;
  }
  std::uint64_t nodes() const { return counter_.nodes(); }

 private:
  void dfs(Bits cand) {
    counter_.tick();
    if (cand.none()) {
      if (chosen_.size() > best_.size() || best_.empty()) best_ = chosen_;
      return;
    }
    if (chosen_.size() + cand.count() <= best_.size()) return;
    std::size_t pivot = 0;
    std::size_t pivot_degree = static_cast<std::size_t>(-1);
    cand.for_each([&](std::size_t v) {
      std::size_t d = nbr_[v].count_and(cand);
      if (d < pivot_degree) {
        pivot_degree = d;
        pivot = v;
      }
    });
    Bits branch = nbr_[pivot] & cand;
    branch.for_each([&](std::size_t w) {
      if (!cand.test(w)) return;
      chosen_.push_back(static_cast<Vertex>(w));
      dfs(cand.and_not(nbr_[w]));
      chosen_.pop_back();
      cand.reset(w);
    });
  }

  std::vector<Bits> nbr_;
  detail::NodeCounter counter_;
  VertexSet chosen_;
  VertexSet best_;
};

// Minimum dominating set; with `independent`, chosen vertices must also be
// pairwise nonadjacent.
class MinDominatingSet {
 public:
  MinDominatingSet(const Graph& g, bool independent, std::uint64_t budget)
      : nbr_(closed_neighborhood_bits(g)),
        reach_(max_degree(g) + 1),
        independent_(independent),
        counter_(budget) {}

  VertexSet run(std::size_t n) {
    best_size_ = n + 1;
    dfs(Bits::full(n), Bits::full(n));
    std::sort(best_.begin(), best_.end());
    return best_;
  }
  std::uint64_t nodes() const { return counter_.nodes(); }

 private:
  void dfs(Bits undominated, Bits cand) {
    counter_.tick();
    if (undominated.none()) {
      if (chosen_.size() < best_size_) {
        best_size_ = chosen_.size();
        best_ = chosen_;
      }
      return;
    }
    const std::size_t remaining = undominated.count();
    if (chosen_.size() + (remaining + reach_ - 1) / reach_ >= best_size_) return;
    std::size_t pivot = 0;
    std::size_t options = static_cast<std::size_t>(-1);
    undominated.for_each([&](std::size_t u) {
      std::size_t c = nbr_[u].count_and(cand);
      if (c < options) {
        options = c;
        pivot = u;
      }
    });
    if (options == 0) return;
    Bits branch = nbr_[pivot] & cand;
    branch.for_each([&](std::size_t w) {
      chosen_.push_back(static_cast<Vertex>(w));
      Bits next_cand = independent_ ? cand.and_not(nbr_[w]) : cand;
      next_cand.reset(w);
      dfs(undominated.and_not(nbr_[w]), next_cand);
      chosen_.pop_back();
      cand.reset(w);
    });
  }

  std::vector<Bits> nbr_;
  std::size_t reach_;
  bool independent_;
  detail::NodeCounter counter_;
  VertexSet chosen_;
  VertexSet best_;
  std::size_t best_size_ = 0;
};

ParameterResult vertex_result(ParameterId id, VertexSet witness, std::uint64_t nodes) {
  ParameterResult r;
  r.parameter = id;
  r.value = witness.size();
  r.witness = Witness::of_vertices(std::move(witness));
  r.route = Route::kSearch;
  r.nodes_explored = nodes;
  return r;
}

// Total graph: vertices of G first, then one vertex per edge of G.
Graph total_graph(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (EdgeId id = 0; id < g.num_edges(); ++id) {
    const Edge& e = g.edge(id);
    const Vertex x = static_cast<Vertex>(n + id);
    edges.push_back({e.u, x});
    edges.push_back({e.v, x});
    for (Vertex end : {e.u, e.v}) {
      for (EdgeId other : g.incident_edges(end)) {
        if (other > id) edges.push_back({x, static_cast<Vertex>(n + other)});
      }
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph(n + g.num_edges(), std::move(edges));
}

ParameterResult mixed_result(const Graph& g, ParameterId id, const VertexSet& total_set,
                             std::uint64_t nodes) {
  MixedSet mixed;
  for (Vertex x : total_set) {
    if (x < g.num_vertices()) {
      mixed.vertices.push_back(x);
    } else {
      mixed.edges.push_back(static_cast<EdgeId>(x - g.num_vertices()));
    }
  }
  ParameterResult r;
  r.parameter = id;
  r.value = mixed.size();
  r.witness = Witness::of_mixed(std::move(mixed));
  r.route = Route::kSearch;
  r.nodes_explored = nodes;
  return r;
}

}  // namespace

ParameterResult independence_number(const Graph& g, const SolverOptions& options) {
  MaxIndependentSet search(g, options.node_budget);
  VertexSet best = search.run(g.num_vertices());
  return vertex_result(ParameterId::kBeta0, std::move(best), search.nodes());
}

ParameterResult vertex_cover_number(const Graph& g, const SolverOptions& options) {
  ParameterResult independent = independence_number(g, options);
  const VertexSet& set = independent.witness.vertices;
  VertexSet cover;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (!std::binary_search(set.begin(), set.end(), v)) cover.push_back(v);
  }
  return vertex_result(ParameterId::kAlpha0, std::move(cover), independent.nodes_explored);
}

ParameterResult domination_number(const Graph& g, const SolverOptions& options) {
  MinDominatingSet search(g, false, options.node_budget);
  VertexSet best = search.run(g.num_vertices());
  return vertex_result(ParameterId::kGamma, std::move(best), search.nodes());
}

ParameterResult edge_cover_number(const Graph& g) {
  ParameterResult r;
  r.parameter = ParameterId::kAlpha1;
  r.route = Route::kFastPath;
  if (has_isolated_vertex(g)) {
    r.status = ResultStatus::kUndefined;
    r.message = "graph has an isolated vertex";
    return r;
  }
  // Gallai: a maximum matching plus one edge per unsaturated vertex.
  ParameterResult nu = max_matching(g);
  EdgeSet cover = nu.witness.edges;
  Matching m = Matching::from_edges(g, cover);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (!m.is_saturated(v)) cover.push_back(g.incident_edges(v).front());
  }
  std::sort(cover.begin(), cover.end());
  cover.erase(std::unique(cover.begin(), cover.end()), cover.end());
  r.value = cover.size();
  r.witness = Witness::of_edges(std::move(cover));
  return r;
}

ClassicParameters classic_parameters(const Graph& g, const SolverOptions& options) {
  return {vertex_cover_number(g, options), independence_number(g, options), edge_cover_number(g),
          domination_number(g, options)};
}

ParameterResult total_matching_max(const Graph& g, const SolverOptions& options) {
  Graph t = total_graph(g);
  MaxIndependentSet search(t, options.node_budget);
  VertexSet best = search.run(t.num_vertices());
  return mixed_result(g, ParameterId::kTotalMax, best, search.nodes());
}

ParameterResult total_matching_min(const Graph& g, const SolverOptions& options) {
  Graph t = total_graph(g);
  MinDominatingSet search(t, true, options.node_budget);
  VertexSet best = search.run(t.num_vertices());
  return mixed_result(g, ParameterId::kTotalMin, best, search.nodes());
}

TotalMatchingBounds total_matching_bounds(const Graph& g, const SolverOptions& options) {
  return {total_matching_max(g, options), total_matching_min(g, options)};
}

}  // namespace pmatch
