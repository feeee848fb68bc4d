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

// Empirical scan of beta_P(G) + beta_P(complement G) and the product over a
// corpus. Nothing is asserted about the bounds; the scan only reports them.

#ifndef PMATCH_NORDHAUS_GADDUM_HPP_
#define PMATCH_NORDHAUS_GADDUM_HPP_

#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "pmatch/corpus.hpp"
#include "pmatch/matching.hpp"
#include "pmatch/solver.hpp"

namespace pmatch {

struct NordhausGaddumRecord {
  PropertyId property = PropertyId::kPlain;
  std::string graph_id;
  std::size_t n = 0;
  std::size_t beta = 0;                 // beta_P(G)
  std::size_t beta_complement = 0;      // beta_P(complement of G)
  EdgeSet witness;                      // in G
  EdgeSet witness_complement;           // in the complement
  std::string witness_text;             // "u-v,..." with labels of G
  std::string witness_complement_text;  // same, in the complement
  std::size_t sum() const { return beta + beta_complement; }
  std::size_t product() const { return beta * beta_complement; }

  nlohmann::json to_json() const;
};

struct Extreme {
  std::size_t value = 0;
  std::string graph_id;
};

struct NordhausGaddumSummary {
  PropertyId property = PropertyId::kPlain;
  std::size_t records = 0;
  std::size_t skipped = 0;  // budget exceeded on G or its complement
  std::optional<Extreme> min_sum, max_sum, min_product, max_product;

  nlohmann::json to_json() const;
};

// One record. Both witnesses are re-checked with has_property; throws
// Error(kBudgetExceeded) when either search runs out of budget.
NordhausGaddumRecord nordhaus_gaddum_record(const Graph& g, const std::string& id, PropertyId p,
                                            const SolverOptions& options = {});

struct NordhausGaddumScan {
  std::vector<NordhausGaddumRecord> records;  // corpus order
  NordhausGaddumSummary summary;
};

NordhausGaddumScan nordhaus_gaddum_scan(const Corpus& corpus, PropertyId p,
                                        const SolverOptions& options = {}, std::size_t threads = 1);

}  // namespace pmatch

#endif  // PMATCH_NORDHAUS_GADDUM_HPP_
