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

// Predicates on matchings. <M> always denotes G[V(M)], the subgraph induced
// on the saturated vertices. The empty matching satisfies every property.
//
// All functions taking a Matching throw Error(kInvalidArgument) when the
// matching was built against a graph of a different order.

#ifndef PMATCH_PROPERTIES_HPP_
#define PMATCH_PROPERTIES_HPP_

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "pmatch/graph.hpp"
#include "pmatch/matching.hpp"
#include "pmatch/structure.hpp"

namespace pmatch {

// Throws Error(kOutOfRange) on non-edges.
bool is_matching(const Graph& g, std::span<const EdgeId> edges);
bool is_maximal_matching(const Graph& g, const Matching& m);
bool is_perfect(const Graph& g, const Matching& m);

// <M> with its map back to G.
InducedSubgraph matching_subgraph(const Graph& g, const Matching& m);

bool is_induced(const Graph& g, const Matching& m);

// An M-alternating cycle of <M> as a vertex sequence v0 v1 ... v(2k-1) where
// v0v1 is a matched edge and consecutive pairs alternate (the closing pair
// v(2k-1)v0 is unmatched).
std::optional<std::vector<Vertex>> find_alternating_cycle(const Graph& g, const Matching& m);
bool is_uniquely_restricted(const Graph& g, const Matching& m);
// Second route: M is the only perfect matching of <M>.
bool is_uniquely_restricted_by_count(const Graph& g, const Matching& m);
// Perfect matchings of h, counting stops at `limit` (0 = no limit).
std::size_t count_perfect_matchings(const Graph& h, std::size_t limit = 0);

bool is_connected_property(const Graph& g, const Matching& m);
bool is_isolate_free(const Graph& g, const Matching& m);
bool is_disconnected_property(const Graph& g, const Matching& m);
bool is_acyclic_property(const Graph& g, const Matching& m);

// Orientation with independent tail set X, solved as 2-SAT.
std::optional<Orientation> find_independent_orientation(const Graph& g, const Matching& m);
// Orientation with X and Y both independent, solved as 2-SAT.
std::optional<Orientation> find_bipartite_orientation(const Graph& g, const Matching& m);

// Throws Error(kOutOfRange) on non-edges.
bool are_cnbr_adjacent(const Graph& g, EdgeId e1, EdgeId e2);
bool are_onbr_adjacent(const Graph& g, EdgeId e1, EdgeId e2);
// First (by edge id) pair of adjacent matched edges, if any.
std::optional<std::pair<EdgeId, EdgeId>> find_cnbr_conflict(const Graph& g, const Matching& m);
std::optional<std::pair<EdgeId, EdgeId>> find_onbr_conflict(const Graph& g, const Matching& m);
bool is_cnbr_matching(const Graph& g, const Matching& m);
bool is_onbr_matching(const Graph& g, const Matching& m);

// External private neighbor of u with respect to S = V(M): a vertex w outside
// S whose only neighbor in S is u.
std::optional<Vertex> external_private_neighbor(const Graph& g, const Matching& m, Vertex u);
// First matched edge with no endpoint owning an external private neighbor.
std::optional<EdgeId> find_vertex_redundant_edge(const Graph& g, const Matching& m);
bool is_vertex_irredundant(const Graph& g, const Matching& m);

// An edge e' not in M that meets e and no other matched edge.
std::optional<EdgeId> edge_irredundance_witness(const Graph& g, const Matching& m, EdgeId e);
std::optional<EdgeId> find_edge_redundant_edge(const Graph& g, const Matching& m);
bool is_edge_irredundant(const Graph& g, const Matching& m);

bool is_separating(const Graph& g, const Matching& m);

// Pairwise independence: vertices nonadjacent, edges disjoint, and no vertex
// an endpoint of a member edge. Throws Error(kOutOfRange) on bad members.
bool is_total_matching(const Graph& g, const MixedSet& t);
// Independent and no vertex or edge can be added.
bool is_maximal_total_matching(const Graph& g, const MixedSet& t);

// deg_F(v) <= b(v) for all v; F need not be a matching.
bool is_b_matching(const Graph& g, std::span<const EdgeId> edges, const BoundFunction& b);

bool has_property(const Graph& g, const Matching& m, PropertyId p);

// No edge e outside M leaves M + e a P-matching. Throws
// Error(kInvalidArgument) when M is not a P-matching.
bool is_maximal_p_matching(const Graph& g, const Matching& m, PropertyId p);

// True for the properties where every sub-matching of a P-matching is again a
// P-matching; the search engine prunes on these.
bool is_hereditary(PropertyId p);

}  // namespace pmatch

#endif  // PMATCH_PROPERTIES_HPP_
