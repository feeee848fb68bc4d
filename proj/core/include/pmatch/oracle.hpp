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

// Brute-force reference values. Everything here enumerates complete subset
// universes and filters them through the predicates in properties.hpp; none
// of the solver code is used.

#ifndef PMATCH_ORACLE_HPP_
#define PMATCH_ORACLE_HPP_

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "pmatch/graph.hpp"
#include "pmatch/matching.hpp"
#include "pmatch/parameters.hpp"

namespace pmatch {

inline constexpr std::size_t kOracleMaxEdges = 22;
inline constexpr std::size_t kOracleMaxVertices = 22;  // 2^n vertex-subset scans
inline constexpr std::size_t kOracleMaxTotal = 24;     // n + m for total matchings

struct OracleReport {
  ParameterId parameter = ParameterId::kBeta1;
  ResultStatus status = ResultStatus::kOk;  // ok, undefined or n/a
  std::size_t value = 0;
  std::uint64_t witness_count = 0;  // optimal subsets
  std::uint64_t enumerated = 0;     // subsets examined
};

// Enumerates the matchings of g once (all 2^m edge subsets, filtered by
// pairwise disjointness) and answers any parameter from that list.
// Not thread-safe; use one instance per thread.
class Oracle {
 public:
  // Throws Error(kTooLarge) when m > kOracleMaxEdges.
  explicit Oracle(const Graph& g);

  // Throws Error(kTooLarge) when a vertex-subset universe exceeds its cap.
  OracleReport evaluate(ParameterId id);

  // All matchings as edge-id bit masks, in increasing mask order.
  const std::vector<std::uint32_t>& matching_masks() const { return masks_; }
  EdgeSet edges_of(std::uint32_t mask) const;
  bool has(std::size_t index, PropertyId p);

 private:
  OracleReport max_over_property(ParameterId id, PropertyId p);
  OracleReport min_over_maximal(ParameterId id, PropertyId p);
  OracleReport vertex_subsets(ParameterId id);
  OracleReport edge_cover();
  OracleReport total(ParameterId id);
  OracleReport separating();
  OracleReport b_matching();

  const Graph& g_;
  std::uint64_t subsets_ = 0;
  std::vector<std::uint32_t> masks_;
  std::vector<std::uint64_t> covers_;  // saturated vertices (compact bits)
  std::vector<Vertex> compact_;        // compact bit -> vertex
  std::unordered_map<std::uint32_t, std::size_t> index_;
  std::vector<std::uint32_t> known_;  // per matching: bit p = computed
  std::vector<std::uint32_t> value_;  // per matching: bit p = holds
};

OracleReport oracle_parameter(const Graph& g, ParameterId id);

// Maximum b-matching by scanning all 2^m edge subsets; no forest restriction.
OracleReport oracle_b_matching_max(const Graph& g, const BoundFunction& b);

enum class OrientationMode { kIndependent, kBipartite };

// Tries all 2^|M| orientations. Throws Error(kTooLarge) for |M| > 20.
bool oracle_orientation_feasible(const Graph& g, const Matching& m, OrientationMode mode);

// Every perfect matching of h. Throws Error(kTooLarge) for n(h) > 16.
std::vector<EdgeSet> oracle_perfect_matchings(const Graph& h);

}  // namespace pmatch

#endif  // PMATCH_ORACLE_HPP_
