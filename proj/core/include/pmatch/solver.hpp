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

// Exact solvers. Individual solvers throw Error(kBudgetExceeded) when the
// node budget runs out; compute() folds every failure into the result status.

#ifndef PMATCH_SOLVER_HPP_
#define PMATCH_SOLVER_HPP_

#include <cstdint>
#include <optional>

#include "pmatch/graph.hpp"
#include "pmatch/matching.hpp"
#include "pmatch/parameters.hpp"

namespace pmatch {

struct SolverOptions {
  std::uint64_t node_budget = 100'000'000;
  // Residual-matching and remaining-edge bounds.
  bool prune_bounds = true;
  // Skip supersets of non-P matchings for hereditary P.
  bool prune_hereditary = true;
  // Polynomial shortcuts (blossom for plain, connected-graph identity for
  // connected and isolate-free, block class for ur).
  bool use_fast_paths = true;
};

// Blossom; route fast-path.
ParameterResult max_matching(const Graph& g);
// Perfect matching, if one exists.
std::optional<Matching> perfect_matching(const Graph& g);
bool perfect_matching_exists(const Graph& g);

// Minimum maximal matching (minimum independent edge dominating set).
ParameterResult min_maximal_matching(const Graph& g, const SolverOptions& options = {});

// beta_P: maximum size of a P-matching. The witness is the lexicographically
// smallest optimal edge-id set when found by search.
ParameterResult compute_beta_p(const Graph& g, PropertyId p, const SolverOptions& options = {});

// beta_P^-: minimum size of a nonempty P-matching that no single edge extends
// to a P-matching. Undefined when G has edges but no nonempty P-matching; 0 on
// edgeless graphs.
ParameterResult compute_beta_minus_p(const Graph& g, PropertyId p,
                                     const SolverOptions& options = {});

// Classic parameters. alpha1 is undefined when G has an isolated vertex.
ParameterResult vertex_cover_number(const Graph& g, const SolverOptions& options = {});
ParameterResult independence_number(const Graph& g, const SolverOptions& options = {});
ParameterResult edge_cover_number(const Graph& g);
ParameterResult domination_number(const Graph& g, const SolverOptions& options = {});

struct ClassicParameters {
  ParameterResult alpha0;
  ParameterResult beta0;
  ParameterResult alpha1;
  ParameterResult gamma;
};
ClassicParameters classic_parameters(const Graph& g, const SolverOptions& options = {});

// Maximum |F| with deg_F(v) <= b(v), by a leaf-to-root greedy pass. Throws
// Error(kNotApplicable) if g has a cycle.
ParameterResult tree_b_matching_max(const Graph& g, const BoundFunction& b);

struct TotalMatchingBounds {
  ParameterResult max;
  ParameterResult min;
};
// Extreme sizes of maximal total matchings (maximum independent set and
// minimum independent dominating set of the total graph).
TotalMatchingBounds total_matching_bounds(const Graph& g, const SolverOptions& options = {});
ParameterResult total_matching_max(const Graph& g, const SolverOptions& options = {});
ParameterResult total_matching_min(const Graph& g, const SolverOptions& options = {});

// Smallest matching that is an edge cut; undefined when none exists.
ParameterResult min_separating_matching(const Graph& g, const SolverOptions& options = {});

// beta_ur = beta1 when every block is an edge or a chordless odd cycle;
// nullopt otherwise.
std::optional<ParameterResult> block_class_fast_path(const Graph& g);

// Any parameter; never throws for budget or domain failures.
// bmatching_max uses BoundFunction::table_default and is n/a off forests.
ParameterResult compute(const Graph& g, ParameterId id, const SolverOptions& options = {});

}  // namespace pmatch

#endif  // PMATCH_SOLVER_HPP_
