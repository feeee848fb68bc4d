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

#include "pmatch/parameters.hpp"

namespace pmatch {
namespace {

struct Entry {
  ParameterId id;
  std::string_view name;
  std::optional<PropertyId> property;
  bool minus;
};

constexpr Entry kEntries[kParameterCount] = {
    {ParameterId::kBeta1, "beta1", PropertyId::kPlain, false},
    {ParameterId::kBeta1Minus, "beta1minus", PropertyId::kPlain, true},
    {ParameterId::kAlpha0, "alpha0", std::nullopt, false},
    {ParameterId::kBeta0, "beta0", std::nullopt, false},
    {ParameterId::kAlpha1, "alpha1", std::nullopt, false},
    {ParameterId::kGamma, "gamma", std::nullopt, false},
    {ParameterId::kBetaStar, "beta_star", PropertyId::kInduced, false},
    {ParameterId::kBetaStarMinus, "beta_star_minus", PropertyId::kInduced, true},
    {ParameterId::kBetaUr, "beta_ur", PropertyId::kUniquelyRestricted, false},
    {ParameterId::kBetaUrMinus, "beta_ur_minus", PropertyId::kUniquelyRestricted, true},
    {ParameterId::kBetaC, "beta_c", PropertyId::kConnected, false},
    {ParameterId::kBetaCMinus, "beta_c_minus", PropertyId::kConnected, true},
    {ParameterId::kBetaIf, "beta_if", PropertyId::kIsolateFree, false},
    {ParameterId::kBetaIfMinus, "beta_if_minus", PropertyId::kIsolateFree, true},
    {ParameterId::kBetaDc, "beta_dc", PropertyId::kDisconnected, false},
    {ParameterId::kBetaDcMinus, "beta_dc_minus", PropertyId::kDisconnected, true},
    {ParameterId::kBetaAc, "beta_ac", PropertyId::kAcyclic, false},
    {ParameterId::kBetaAcMinus, "beta_ac_minus", PropertyId::kAcyclic, true},
    {ParameterId::kBetaI, "beta_i", PropertyId::kIndependent, false},
    {ParameterId::kBetaIMinus, "beta_i_minus", PropertyId::kIndependent, true},
    {ParameterId::kBetaB, "beta_b", PropertyId::kBipartite, false},
    {ParameterId::kBetaBMinus, "beta_b_minus", PropertyId::kBipartite, true},
    {ParameterId::kBetaOn, "beta_on", PropertyId::kOnbr, false},
    {ParameterId::kBetaOnMinus, "beta_on_minus", PropertyId::kOnbr, true},
    {ParameterId::kBetaCn, "beta_cn", PropertyId::kCnbr, false},
    {ParameterId::kBetaCnMinus, "beta_cn_minus", PropertyId::kCnbr, true},
    {ParameterId::kBetaVUpper, "beta_v_IR", PropertyId::kVertexIrredundant, false},
    {ParameterId::kBetaVLower, "beta_v_ir", PropertyId::kVertexIrredundant, true},
    {ParameterId::kBetaEUpper, "beta_e_IR", PropertyId::kEdgeIrredundant, false},
    {ParameterId::kBetaELower, "beta_e_ir", PropertyId::kEdgeIrredundant, true},
    {ParameterId::kTotalMax, "beta_total_max", std::nullopt, false},
    {ParameterId::kTotalMin, "beta_total_min", std::nullopt, false},
    {ParameterId::kSepMin, "beta_sep_min", std::nullopt, false},
    {ParameterId::kBMatchingMax, "bmatching_max", std::nullopt, false},
};

const Entry& entry(ParameterId id) { return kEntries[static_cast<std::size_t>(id)]; }

}  // namespace

const std::array<ParameterId, kParameterCount>& all_parameters() {
  static const auto table = [] {
    std::array<ParameterId, kParameterCount> out{};
    for (std::size_t i = 0; i < kParameterCount; ++i) out[i] = kEntries[i].id;
    return out;
  }();
  return table;
}

std::string_view parameter_name(ParameterId id) { return entry(id).name; }

std::optional<ParameterId> parse_parameter(std::string_view name) {
  for (const Entry& e : kEntries) {
    if (e.name == name) return e.id;
  }
  if (name == "beta1_minus") return ParameterId::kBeta1Minus;
  return std::nullopt;
}

std::optional<PropertyId> parameter_property(ParameterId id) { return entry(id).property; }

bool is_minus_parameter(ParameterId id) { return entry(id).minus; }

ParameterId beta_parameter(PropertyId p) {
  for (const Entry& e : kEntries) {
    if (e.property == p && !e.minus) return e.id;
  }
  return ParameterId::kBeta1;
}

ParameterId beta_minus_parameter(PropertyId p) {
  for (const Entry& e : kEntries) {
    if (e.property == p && e.minus) return e.id;
  }
  return ParameterId::kBeta1Minus;
}

std::string_view status_name(ResultStatus s) {
  switch (s) {
    case ResultStatus::kOk:
      return "ok";
    case ResultStatus::kUndefined:
      return "undefined";
    case ResultStatus::kNotApplicable:
      return "n/a";
    case ResultStatus::kBudgetExceeded:
      return "budget-exceeded";
    case ResultStatus::kError:
      return "error";
  }
  return "?";
}

std::string_view route_name(Route r) {
  switch (r) {
    case Route::kFastPath:
      return "fast-path";
    case Route::kSearch:
      return "search";
    case Route::kOracle:
      return "oracle";
  }
  return "?";
}

}  // namespace pmatch
