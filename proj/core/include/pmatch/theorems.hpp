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

// Executable checks of classical matching theorems and of the P-matching
// identities. Inputs are recomputed by the brute-force oracle whenever the
// graph is within its limits, otherwise by the search engine with every fast
// path disabled, so a check never confirms a value with the shortcut it is
// meant to test.

#ifndef PMATCH_THEOREMS_HPP_
#define PMATCH_THEOREMS_HPP_

#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pmatch/graph.hpp"
#include "pmatch/sdr.hpp"

namespace pmatch {

enum class TheoremId {
  kGallai,
  kKonig,
  kFrobenius,
  kHall,
  kPropositionChains,
  kConnected,
  kUrCharacterization,
  kBlockClass,
};

inline constexpr TheoremId kAllTheorems[] = {
    TheoremId::kGallai,
    TheoremId::kKonig,
    TheoremId::kFrobenius,
    TheoremId::kHall,
    TheoremId::kPropositionChains,
    TheoremId::kConnected,
    TheoremId::kUrCharacterization,
    TheoremId::kBlockClass,
};

// gallai, konig, frobenius, hall, chains, connected, ur, block-class.
std::string_view theorem_name(TheoremId t);
std::optional<TheoremId> parse_theorem(std::string_view name);

struct TheoremVerdict {
  std::string theorem;
  std::string graph_id;
  bool holds = true;
  // Values and witnesses behind the verdict; a failing verdict also carries
  // the graph as an edge list under "graph".
  nlohmann::json payload;

  nlohmann::json to_json() const;
};

// Identity (i) alpha0 + beta0 = n always; identity (ii) alpha1 + beta1 = n
// only without isolated vertices (otherwise reported as skipped).
TheoremVerdict check_gallai(const Graph& g, const std::string& id = "");
// Throw Error(kNotApplicable) on non-bipartite input.
TheoremVerdict check_konig(const Graph& g, const std::string& id = "");
TheoremVerdict check_frobenius(const Graph& g, const std::string& id = "");
// SDR solver against an exhaustive Hall scan (m <= 20).
TheoremVerdict check_hall(const SetSystem& s, const std::string& id = "");
// Hall on the open-neighborhood family (N(v))_v of a graph.
TheoremVerdict check_hall(const Graph& g, const std::string& id = "");
TheoremVerdict check_proposition_chains(const Graph& g, const std::string& id = "");
// Throws Error(kNotApplicable) on disconnected input.
TheoremVerdict check_connected_theorem(const Graph& g, const std::string& id = "");
// Every matching: alternating-cycle route, perfect-matching-count route and
// the oracle's perfect-matching list agree. Needs m <= 22.
TheoremVerdict check_ur_characterization(const Graph& g, const std::string& id = "");
// Throws Error(kNotApplicable) unless every block is an edge or a chordless
// odd cycle.
TheoremVerdict check_block_class_identity(const Graph& g, const std::string& id = "");

// Runs one check; nullopt when the graph is outside the theorem's hypothesis.
std::optional<TheoremVerdict> run_theorem(TheoremId t, const Graph& g, const std::string& id);

}  // namespace pmatch

#endif  // PMATCH_THEOREMS_HPP_
