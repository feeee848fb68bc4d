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

#include "pmatch/nordhaus_gaddum.hpp"

#include "pmatch/error.hpp"
#include "pmatch/properties.hpp"
#include "pmatch/structure.hpp"

namespace pmatch {
namespace {

std::pair<std::size_t, EdgeSet> certified_beta(const Graph& g, PropertyId p,
                                               const SolverOptions& options) {
  ParameterResult r = compute(g, beta_parameter(p), options);
  if (r.status == ResultStatus::kBudgetExceeded) {
    throw Error(ErrorKind::kBudgetExceeded, r.message);
  }
  if (!r.ok()) throw Error(ErrorKind::kInvalidArgument, r.message);
  EdgeSet witness = r.witness.edges;
  auto m = Matching::try_from_edges(g, witness);
  if (!m || m->size() != r.value || !has_property(g, *m, p)) {
    throw Error(ErrorKind::kInvalidArgument, "solver witness failed re-verification");
  }
  return {r.value, std::move(witness)};
}

void offer(std::optional<Extreme>& slot, std::size_t value, const std::string& id, bool larger) {
  if (!slot || (larger ? value > slot->value : value < slot->value)) slot = Extreme{value, id};
}

nlohmann::json extreme_json(const std::optional<Extreme>& e) {
  if (!e) return nullptr;
  return {{"value", e->value}, {"graph", e->graph_id}};
}

}  // namespace

nlohmann::json NordhausGaddumRecord::to_json() const {
  return {{"type", "nordhaus-gaddum"},
          {"property", std::string(property_name(property))},
          {"graph", graph_id},
          {"n", n},
          {"beta", beta},
          {"beta_complement", beta_complement},
          {"sum", sum()},
          {"product", product()},
          {"n_minus_beta", n - beta},
          {"witness", witness_text},
          {"witness_complement", witness_complement_text}};
}

nlohmann::json NordhausGaddumSummary::to_json() const {
  return {{"type", "nordhaus-gaddum-summary"},
          {"property", std::string(property_name(property))},
          {"records", records},
          {"skipped", skipped},
          {"min_sum", extreme_json(min_sum)},
          {"max_sum", extreme_json(max_sum)},
          {"min_product", extreme_json(min_product)},
          {"max_product", extreme_json(max_product)}};
}

NordhausGaddumRecord nordhaus_gaddum_record(const Graph& g, const std::string& id, PropertyId p,
                                            const SolverOptions& options) {
  NordhausGaddumRecord r;
  r.property = p;
  r.graph_id = id;
  r.n = g.num_vertices();
  std::tie(r.beta, r.witness) = certified_beta(g, p, options);
  const Graph h = complement(g);
  std::tie(r.beta_complement, r.witness_complement) = certified_beta(h, p, options);
  r.witness_text = format_edges(g, r.witness);
  r.witness_complement_text = format_edges(h, r.witness_complement);
  return r;
}

NordhausGaddumScan nordhaus_gaddum_scan(const Corpus& corpus, PropertyId p,
                                        const SolverOptions& options, std::size_t threads) {
  std::vector<std::optional<NordhausGaddumRecord>> slots(corpus.size());
  parallel_for(corpus.size(), threads, [&](std::size_t i) {
    NamedGraph item = corpus.at(i);
    try {
      slots[i] = nordhaus_gaddum_record(item.graph, item.id, p, options);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kBudgetExceeded) throw;
    }
  });
  NordhausGaddumScan scan;
  scan.summary.property = p;
  for (auto& slot : slots) {
    if (!slot) {
      ++scan.summary.skipped;
      continue;
    }
    offer(scan.summary.min_sum, slot->sum(), slot->graph_id, false);
    offer(scan.summary.max_sum, slot->sum(), slot->graph_id, true);
    offer(scan.summary.min_product, slot->product(), slot->graph_id, false);
    offer(scan.summary.max_product, slot->product(), slot->graph_id, true);
    scan.records.push_back(std::move(*slot));
  }
  scan.summary.records = scan.records.size();
  return scan;
}

}  // namespace pmatch
