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

// Parameter tables and their JSON / TSV renderings. The JSON layout is
// described in docs/output-schema.md.

#ifndef PMATCH_REPORT_HPP_
#define PMATCH_REPORT_HPP_

#include <nlohmann/json.hpp>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pmatch/graph.hpp"
#include "pmatch/parameters.hpp"
#include "pmatch/solver.hpp"

namespace pmatch {

struct ParameterTable {
  std::string graph_id;
  Graph graph;
  std::vector<ParameterResult> results;  // request order
  std::vector<double> seconds;           // parallel to results
};

ParameterTable compute_table(const std::string& id, const Graph& g,
                             std::span<const ParameterId> params,
                             const SolverOptions& options = {});

// "none", "edges", "vertices" or "mixed".
std::string_view witness_kind(const Witness& w);
// Edges as "u-v", vertices by label, comma separated; mixed sets list the
// vertices first. Empty string for no witness.
std::string format_witness(const Graph& g, const Witness& w);

// Comma/whitespace separated items; an item containing '-' is an edge,
// anything else a vertex label. Throws Error(kParse).
MixedSet parse_mixed_set(const Graph& g, std::string_view text);
std::string format_mixed_set(const Graph& g, const MixedSet& s);

// Per-parameter object: parameter, status, value, witness, witness_kind,
// route, nodes, message, and seconds when timing is requested.
nlohmann::json result_to_json(const Graph& g, const ParameterResult& r,
                              std::optional<double> seconds = std::nullopt);
// One line per graph: {"type": "table", "graph", "n", "m", "parameters"}.
nlohmann::json table_to_json(const ParameterTable& t, bool timing);

std::string tsv_header(bool timing);
// One row per parameter, newline terminated.
std::string table_to_tsv(const ParameterTable& t, bool timing);

// Value column text: the number, "undefined", "n/a", or "-".
std::string value_text(const ParameterResult& r);

}  // namespace pmatch

#endif  // PMATCH_REPORT_HPP_
