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

#ifndef PMATCH_PARAMETERS_HPP_
#define PMATCH_PARAMETERS_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pmatch/graph.hpp"
#include "pmatch/matching.hpp"

namespace pmatch {

enum class ParameterId {
  kBeta1,
  kBeta1Minus,
  kAlpha0,
  kBeta0,
  kAlpha1,
  kGamma,
  kBetaStar,
  kBetaStarMinus,
  kBetaUr,
  kBetaUrMinus,
  kBetaC,
  kBetaCMinus,
  kBetaIf,
  kBetaIfMinus,
  kBetaDc,
  kBetaDcMinus,
  kBetaAc,
  kBetaAcMinus,
  kBetaI,
  kBetaIMinus,
  kBetaB,
  kBetaBMinus,
  kBetaOn,
  kBetaOnMinus,
  kBetaCn,
  kBetaCnMinus,
  kBetaVUpper,  // beta^v_IR
  kBetaVLower,  // beta^v_ir
  kBetaEUpper,  // beta^e_IR
  kBetaELower,  // beta^e_ir
  kTotalMax,
  kTotalMin,
  kSepMin,
  kBMatchingMax,
};

inline constexpr std::size_t kParameterCount = 34;

// Table order, which is also the order of `--params all`.
const std::array<ParameterId, kParameterCount>& all_parameters();

// ASCII tag: "beta1", "beta1minus", "alpha0", "beta0", "alpha1", "gamma",
// "beta_star", "beta_star_minus", ..., "beta_v_IR", "beta_v_ir", "beta_e_IR",
// "beta_e_ir", "beta_total_max", "beta_total_min", "beta_sep_min",
// "bmatching_max".
std::string_view parameter_name(ParameterId id);
// Accepts the tags above plus "beta1_minus".
std::optional<ParameterId> parse_parameter(std::string_view name);

// Property behind a beta_P / beta_P^- parameter (beta1 and beta1minus map to
// plain); nullopt for the others.
std::optional<PropertyId> parameter_property(ParameterId id);
// True for the minimum-over-maximal parameters beta_P^-.
bool is_minus_parameter(ParameterId id);
ParameterId beta_parameter(PropertyId p);
ParameterId beta_minus_parameter(PropertyId p);

enum class ResultStatus {
  kOk,
  kUndefined,       // empty feasible set
  kNotApplicable,   // graph outside the parameter's domain
  kBudgetExceeded,  // node budget hit
  kError,           // any other failure; see message
};
std::string_view status_name(ResultStatus s);  // ok, undefined, n/a, budget-exceeded, error

enum class Route { kFastPath, kSearch, kOracle };
std::string_view route_name(Route r);  // fast-path, search, oracle

// Certificate attached to a result. Mixed witnesses (total matchings) use
// both sets.
struct Witness {
  enum class Kind { kNone, kEdges, kVertices, kMixed };
  Kind kind = Kind::kNone;
  VertexSet vertices;
  EdgeSet edges;

  static Witness of_edges(EdgeSet e) { return {Kind::kEdges, {}, std::move(e)}; }
  static Witness of_vertices(VertexSet v) { return {Kind::kVertices, std::move(v), {}}; }
  static Witness of_mixed(MixedSet s) {
    return {Kind::kMixed, std::move(s.vertices), std::move(s.edges)};
  }
  MixedSet mixed() const { return {vertices, edges}; }
};

struct ParameterResult {
  ParameterId parameter = ParameterId::kBeta1;
  ResultStatus status = ResultStatus::kOk;
  std::size_t value = 0;  // meaningful only when status == kOk
  Witness witness;
  Route route = Route::kSearch;
  std::uint64_t nodes_explored = 0;
  std::string message;

  bool ok() const { return status == ResultStatus::kOk; }
};

}  // namespace pmatch

#endif  // PMATCH_PARAMETERS_HPP_
