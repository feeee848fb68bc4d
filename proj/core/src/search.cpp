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

// Branch-and-bound over edge subsets for beta_P, beta_P^-, beta1^- and the
// minimum separating matching.

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "pmatch/properties.hpp"
#include "pmatch/solver.hpp"
#include "pmatch/structure.hpp"
#include "solver_internal.hpp"

namespace pmatch {
namespace {

struct EdgeSetHash {
  std::size_t operator()(const std::vector<EdgeId>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (EdgeId e : v) h = (h ^ e) * 1099511628211ull;
    return h;
  }
};

// Memoized property evaluation on sorted edge-id sets.
class PropertyOracle {
 public:
  PropertyOracle(const Graph& g, PropertyId p) : g_(g), p_(p) {}

  bool operator()(const std::vector<EdgeId>& sorted) {
    if (sorted.empty() || p_ == PropertyId::kPlain) return true;
    auto it = memo_.find(sorted);
    if (it != memo_.end()) return it->second;
    if (memo_.size() > kMemoLimit) memo_.clear();
    bool value = has_property(g_, Matching::from_edges(g_, sorted), p_);
    memo_.emplace(sorted, value);
    return value;
  }

 private:
  static constexpr std::size_t kMemoLimit = 1u << 20;
  const Graph& g_;
  PropertyId p_;
  std::unordered_map<std::vector<EdgeId>, bool, EdgeSetHash> memo_;
};

std::vector<EdgeId> degree_order(const Graph& g) {
  std::vector<EdgeId> order(g.num_edges());
  std::iota(order.begin(), order.end(), EdgeId{0});
  auto weight = [&](EdgeId id) { return g.degree(g.edge(id).u) + g.degree(g.edge(id).v); };
  std::stable_sort(order.begin(), order.end(),
                   [&](EdgeId a, EdgeId b) { return weight(a) > weight(b); });
  return order;
}

std::vector<EdgeId> sorted_copy(const std::vector<EdgeId>& v) {
  std::vector<EdgeId> out = v;
  std::sort(out.begin(), out.end());
  return out;
}

// Shared state of one search: the current edge set and its saturated
// vertices.
class SearchBase {
 protected:
  SearchBase(const Graph& g, const SolverOptions& options)
      : g_(g), options_(options), counter_(options.node_budget), used_(g.num_vertices(), 0) {}

  bool free(EdgeId id) const {
    const Edge& e = g_.edge(id);
    return !used_[e.u] && !used_[e.v];
  }
  void push(EdgeId id) {
    used_[g_.edge(id).u] = used_[g_.edge(id).v] = 1;
    cur_.push_back(id);
  }
  void pop() {
    EdgeId id = cur_.back();
    cur_.pop_back();
    used_[g_.edge(id).u] = used_[g_.edge(id).v] = 0;
  }

  // Upper bound on how many edges from candidates[start..] can still join.
  std::size_t residual_bound(const std::vector<EdgeId>& candidates, std::size_t start) {
    residual_.clear();
    for (std::size_t i = start; i < candidates.size(); ++i) {
      if (free(candidates[i])) residual_.push_back(g_.edge(candidates[i]));
    }
    return detail::matching_number(g_.num_vertices(), residual_);
  }

  const Graph& g_;
  SolverOptions options_;
  detail::NodeCounter counter_;
  std::vector<char> used_;
  std::vector<EdgeId> cur_;
  std::vector<Edge> residual_;
};

class MaxSearch : SearchBase {
 public:
  MaxSearch(const Graph& g, PropertyId p, const SolverOptions& options)
      : SearchBase(g, options),
        property_(g, p),
        hereditary_(options.prune_hereditary && is_hereditary(p)),
        order_(degree_order(g)) {}

  // Best witness overall, or the first witness of size `target` when given.
  EdgeSet run(std::optional<std::size_t> target) {
    target_ = target;
    dfs(0);
    return best_;
  }
  std::uint64_t nodes() const { return counter_.nodes(); }

 private:
  void dfs(std::size_t start) {
    counter_.tick();
    std::vector<EdgeId> sorted = sorted_copy(cur_);
    if (property_(sorted)) {
      consider(sorted);
      if (stop_) return;
    } else if (hereditary_) {
      return;
    }
    const std::size_t floor = target_ ? *target_ : best_.size();
    if (options_.prune_bounds) {
      std::size_t count = 0;
      for (std::size_t i = start; i < order_.size(); ++i) count += free(order_[i]);
      if (cur_.size() + count < floor) return;
      if (cur_.size() + residual_bound(order_, start) < floor) return;
    }
    for (std::size_t i = start; i < order_.size(); ++i) {
      if (!free(order_[i])) continue;
      push(order_[i]);
      dfs(i + 1);
      pop();
      if (stop_) return;
    }
  }

  void consider(const std::vector<EdgeId>& sorted) {
    if (target_) {
      if (sorted.size() == *target_) {
        best_ = sorted;
        stop_ = true;
      }
      return;
    }
    if (sorted.size() > best_.size() || (sorted.size() == best_.size() && sorted < best_)) {
      best_ = sorted;
    }
  }

  PropertyOracle property_;
  bool hereditary_;
  std::vector<EdgeId> order_;
  EdgeSet best_;
  std::optional<std::size_t> target_;
  bool stop_ = false;
};

class MinMaximalPSearch : SearchBase {
 public:
  MinMaximalPSearch(const Graph& g, PropertyId p, const SolverOptions& options)
      : SearchBase(g, options),
        property_(g, p),
        hereditary_(options.prune_hereditary && is_hereditary(p)),
        order_(g.num_edges()) {
    std::iota(order_.begin(), order_.end(), EdgeId{0});
  }

  // Lexicographically first maximal P-matching of the smallest size in
  // [1, limit], if any.
  std::optional<EdgeSet> run(std::size_t limit) {
    for (std::size_t k = 1; k <= limit; ++k) {
      if (dfs(0, k)) return cur_;
    }
    return std::nullopt;
  }
  std::uint64_t nodes() const { return counter_.nodes(); }

 private:
  bool dfs(std::size_t start, std::size_t k) {
    counter_.tick();
    if (cur_.size() == k) return property_(cur_) && maximal();
    if (options_.prune_bounds && cur_.size() + residual_bound(order_, start) < k) return false;
    for (std::size_t i = start; i < order_.size(); ++i) {
      if (!free(order_[i])) continue;
      push(order_[i]);
      if (!(hereditary_ && !property_(cur_)) && dfs(i + 1, k)) return true;
      pop();
    }
    return false;
  }

  bool maximal() {
    for (EdgeId id = 0; id < g_.num_edges(); ++id) {
      if (!free(id)) continue;
      std::vector<EdgeId> extended = cur_;
      extended.insert(std::upper_bound(extended.begin(), extended.end(), id), id);
      if (property_(extended)) return false;
    }
    return true;
  }

  PropertyOracle property_;
  bool hereditary_;
  std::vector<EdgeId> order_;
};

// Minimum independent edge dominating set: some maximal matching extending
// the current one must use an edge at an endpoint of the first undominated
// edge.
class MinMaximalMatchingSearch : SearchBase {
 public:
  MinMaximalMatchingSearch(const Graph& g, const SolverOptions& options) : SearchBase(g, options) {}

  EdgeSet run() {
    // Greedy maximal matching in id order seeds the incumbent.
    for (EdgeId id = 0; id < g_.num_edges(); ++id) {
      if (free(id)) push(id);
    }
    best_ = sorted_copy(cur_);
    while (!cur_.empty()) pop();
    dfs();
    return best_;
  }
  std::uint64_t nodes() const { return counter_.nodes(); }

 private:
  void dfs() {
    counter_.tick();
    std::optional<EdgeId> open;
    for (EdgeId id = 0; id < g_.num_edges() && !open; ++id) {
      if (free(id)) open = id;
    }
    if (!open) {
      std::vector<EdgeId> sorted = sorted_copy(cur_);
      if (sorted.size() < best_.size() || (sorted.size() == best_.size() && sorted < best_)) {
        best_ = std::move(sorted);
      }
      return;
    }
    if (cur_.size() + 1 > best_.size()) return;
    if (options_.prune_bounds) {
      residual_.clear();
      for (EdgeId id = 0; id < g_.num_edges(); ++id) {
        if (free(id)) residual_.push_back(g_.edge(id));
      }
      // Each added edge dominates at most two edges of a matching.
      std::size_t nu = detail::matching_number(g_.num_vertices(), residual_);
      if (cur_.size() + (nu + 1) / 2 > best_.size()) return;
    }
    const Edge e = g_.edge(*open);
    std::vector<EdgeId> branches;
    for (Vertex end : {e.u, e.v}) {
      for (EdgeId id : g_.incident_edges(end)) {
        if (free(id)) branches.push_back(id);
      }
    }
    std::sort(branches.begin(), branches.end());
    branches.erase(std::unique(branches.begin(), branches.end()), branches.end());
    for (EdgeId id : branches) {
      push(id);
      dfs();
      pop();
    }
  }

  EdgeSet best_;
};

class SeparatingSearch : SearchBase {
 public:
  SeparatingSearch(const Graph& g, const SolverOptions& options)
      : SearchBase(g, options), base_components_(component_count(g)) {}

  std::optional<EdgeSet> run(std::size_t limit) {
    for (std::size_t k = 1; k <= limit; ++k) {
      if (dfs(0, k)) return cur_;
    }
    return std::nullopt;
  }
  std::uint64_t nodes() const { return counter_.nodes(); }

 private:
  bool dfs(EdgeId start, std::size_t k) {
    counter_.tick();
    if (cur_.size() == k) return component_count_without(g_, cur_) > base_components_;
    for (EdgeId id = start; id < g_.num_edges(); ++id) {
      if (!free(id)) continue;
      push(id);
      if (dfs(id + 1, k)) return true;
      pop();
    }
    return false;
  }

  std::size_t base_components_;
};

ParameterResult edges_result(ParameterId id, EdgeSet witness, Route route, std::uint64_t nodes) {
  ParameterResult r;
  r.parameter = id;
  r.value = witness.size();
  r.witness = Witness::of_edges(std::move(witness));
  r.route = route;
  r.nodes_explored = nodes;
  return r;
}

}  // namespace

ParameterResult min_maximal_matching(const Graph& g, const SolverOptions& options) {
  MinMaximalMatchingSearch search(g, options);
  EdgeSet best = search.run();
  return edges_result(ParameterId::kBeta1Minus, std::move(best), Route::kSearch, search.nodes());
}

ParameterResult compute_beta_p(const Graph& g, PropertyId p, const SolverOptions& options) {
  const ParameterId id = beta_parameter(p);
  if (options.use_fast_paths) {
    if (p == PropertyId::kPlain) return max_matching(g);
    if (p == PropertyId::kUniquelyRestricted) {
      if (auto fast = block_class_fast_path(g)) return *fast;
    }
    if ((p == PropertyId::kConnected || p == PropertyId::kIsolateFree) && is_connected(g)) {
      // Connected graphs have a P-matching of size beta1; find one.
      const std::size_t target = max_matching(g).value;
      MaxSearch search(g, p, options);
      EdgeSet witness = search.run(target);
      if (witness.size() != target) {
        throw Error(ErrorKind::kInvalidArgument, "no connected-graph witness of size beta1");
      }
      return edges_result(id, std::move(witness), Route::kFastPath, search.nodes());
    }
  }
  MaxSearch search(g, p, options);
  EdgeSet best = search.run(std::nullopt);
  return edges_result(id, std::move(best), Route::kSearch, search.nodes());
}

ParameterResult compute_beta_minus_p(const Graph& g, PropertyId p, const SolverOptions& options) {
  const ParameterId id = beta_minus_parameter(p);
  if (g.num_edges() == 0) return edges_result(id, {}, Route::kSearch, 0);
  if (p == PropertyId::kPlain) {
    ParameterResult r = min_maximal_matching(g, options);
    r.parameter = id;
    return r;
  }
  MinMaximalPSearch search(g, p, options);
  auto found = search.run(max_matching(g).value);
  if (!found) {
    ParameterResult r;
    r.parameter = id;
    r.status = ResultStatus::kUndefined;
    r.route = Route::kSearch;
    r.nodes_explored = search.nodes();
    r.message = "no nonempty " + std::string(property_name(p)) + " matching";
    return r;
  }
  return edges_result(id, std::move(*found), Route::kSearch, search.nodes());
}

ParameterResult min_separating_matching(const Graph& g, const SolverOptions& options) {
  SeparatingSearch search(g, options);
  auto found = search.run(max_matching(g).value);
  if (!found) {
    ParameterResult r;
    r.parameter = ParameterId::kSepMin;
    r.status = ResultStatus::kUndefined;
    r.route = Route::kSearch;
    r.nodes_explored = search.nodes();
    r.message = "no matching is an edge cut";
    return r;
  }
  return edges_result(ParameterId::kSepMin, std::move(*found), Route::kSearch, search.nodes());
}

}  // namespace pmatch
