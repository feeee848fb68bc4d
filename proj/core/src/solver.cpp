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

#include "pmatch/solver.hpp"

#include "pmatch/blossom.hpp"
#include "pmatch/error.hpp"
#include "pmatch/structure.hpp"

namespace pmatch {

ParameterResult max_matching(const Graph& g) {
  BlossomMatcher matcher(g);
  matcher.greedy_init();
  matcher.maximize();
  Matching m = Matching::from_mates(g, matcher.mates());
  ParameterResult r;
  r.parameter = ParameterId::kBeta1;
  r.value = m.size();
  r.witness = Witness::of_edges(m.edges());
  r.route = Route::kFastPath;
  return r;
}

std::optional<Matching> perfect_matching(const Graph& g) {
  if (g.num_vertices() % 2 != 0) return std::nullopt;
  ParameterResult r = max_matching(g);
  if (2 * r.value != g.num_vertices()) return std::nullopt;
  return Matching::from_edges(g, r.witness.edges);
}

bool perfect_matching_exists(const Graph& g) { return perfect_matching(g).has_value(); }

ParameterResult compute(const Graph& g, ParameterId id, const SolverOptions& options) {
  try {
    ParameterResult r;
    switch (id) {
      case ParameterId::kBeta1:
        r = max_matching(g);
        break;
      case ParameterId::kBeta1Minus:
        r = min_maximal_matching(g, options);
        break;
      case ParameterId::kAlpha0:
        r = vertex_cover_number(g, options);
        break;
      case ParameterId::kBeta0:
        r = independence_number(g, options);
        break;
      case ParameterId::kAlpha1:
        r = edge_cover_number(g);
        break;
      case ParameterId::kGamma:
        r = domination_number(g, options);
        break;
      case ParameterId::kTotalMax:
        r = total_matching_max(g, options);
        break;
      case ParameterId::kTotalMin:
        r = total_matching_min(g, options);
        break;
      case ParameterId::kSepMin:
        r = min_separating_matching(g, options);
        break;
      case ParameterId::kBMatchingMax:
        r = tree_b_matching_max(g, BoundFunction::table_default(g));
        break;
      default: {
        PropertyId p = *parameter_property(id);
        r = is_minus_parameter(id) ? compute_beta_minus_p(g, p, options)
                                   : compute_beta_p(g, p, options);
        break;
      }
    }
    r.parameter = id;
    return r;
  } catch (const Error& e) {
    ParameterResult r;
    r.parameter = id;
    r.message = e.what();
    switch (e.kind()) {
      case ErrorKind::kBudgetExceeded:
        r.status = ResultStatus::kBudgetExceeded;
        r.nodes_explored = options.node_budget;
        break;
      case ErrorKind::kNotApplicable:
        r.status = ResultStatus::kNotApplicable;
        break;
      default:
        r.status = ResultStatus::kError;
        break;
    }
    return r;
  }
}

}  // namespace pmatch
