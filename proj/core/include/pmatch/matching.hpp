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

#ifndef PMATCH_MATCHING_HPP_
#define PMATCH_MATCHING_HPP_

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pmatch/graph.hpp"

namespace pmatch {

// A validated set of pairwise vertex-disjoint edges of some host graph.
//
// The matching stores edge ids and a mate table sized to the host; it does
// not keep a reference to the graph. Every predicate taking (g, m) requires
// that m was built against g (checked by vertex count).
class Matching {
 public:
  Matching() = default;

  // Throws Error(kOutOfRange) for non-edges and Error(kInvalidArgument) when
  // two edges share a vertex.
  static Matching from_edges(const Graph& g, std::vector<EdgeId> edges);
  // As above but reports a shared vertex instead of throwing.
  static std::optional<Matching> try_from_edges(const Graph& g, std::vector<EdgeId> edges);
  // From a mate table (mate[v] == kNoVertex for unsaturated v).
  static Matching from_mates(const Graph& g, const std::vector<Vertex>& mates);

  const EdgeSet& edges() const { return edges_; }
  const VertexSet& saturated() const { return saturated_; }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  std::size_t host_vertices() const { return mate_.size(); }

  bool contains(EdgeId e) const;
  bool is_saturated(Vertex v) const { return v < mate_.size() && mate_[v] != kNoVertex; }
  Vertex mate(Vertex v) const { return v < mate_.size() ? mate_[v] : kNoVertex; }
  const std::vector<Vertex>& mates() const { return mate_; }

  // Copy with one more edge; throws like from_edges.
  Matching with_edge(const Graph& g, EdgeId e) const;

  friend bool operator==(const Matching& a, const Matching& b) {
    return a.edges_ == b.edges_ && a.mate_.size() == b.mate_.size();
  }

 private:
  EdgeSet edges_;
  VertexSet saturated_;
  std::vector<Vertex> mate_;
};

// Shared vertex of two members of `edges`, if any. Throws on non-edges.
std::optional<Vertex> find_shared_vertex(const Graph& g, std::span<const EdgeId> edges);

// "u-v,u-v" with host labels, in edge-id order.
std::string format_edges(const Graph& g, std::span<const EdgeId> edges);
// Inverse of format_edges; also accepts whitespace between pairs.
EdgeSet parse_edges(const Graph& g, std::string_view text);

// Per matched edge a tail and a head; X = tails, Y = heads.
struct Orientation {
  std::vector<std::pair<Vertex, Vertex>> arcs;  // (tail, head), by edge id

  VertexSet tails() const;
  VertexSet heads() const;
};

// "tail>head,tail>head".
std::string format_orientation(const Graph& g, const Orientation& o);

// True iff `o` orients exactly the edges of m.
bool orients(const Graph& g, const Matching& m, const Orientation& o);

enum class PropertyId {
  kPlain,
  kInduced,
  kUniquelyRestricted,
  kConnected,
  kIsolateFree,
  kDisconnected,
  kAcyclic,
  kIndependent,
  kBipartite,
  kOnbr,
  kCnbr,
  kVertexIrredundant,
  kEdgeIrredundant,
};

inline constexpr std::array<PropertyId, 13> kAllProperties = {
    PropertyId::kPlain,
    PropertyId::kInduced,
    PropertyId::kUniquelyRestricted,
    PropertyId::kConnected,
    PropertyId::kIsolateFree,
    PropertyId::kDisconnected,
    PropertyId::kAcyclic,
    PropertyId::kIndependent,
    PropertyId::kBipartite,
    PropertyId::kOnbr,
    PropertyId::kCnbr,
    PropertyId::kVertexIrredundant,
    PropertyId::kEdgeIrredundant,
};

// "plain", "induced", "ur", "connected", "isolate-free", "disconnected",
// "acyclic", "independent", "bipartite", "onbr", "cnbr",
// "vertex-irredundant", "edge-irredundant".
std::string_view property_name(PropertyId p);
std::optional<PropertyId> parse_property(std::string_view name);

// Mixed set of vertices and edges, the candidate object of total matchings.
struct MixedSet {
  VertexSet vertices;
  EdgeSet edges;

  std::size_t size() const { return vertices.size() + edges.size(); }
  friend bool operator==(const MixedSet&, const MixedSet&) = default;
};

// Per-vertex degree bound with 0 <= b(v) <= d(v).
class BoundFunction {
 public:
  // Throws Error(kInvalidArgument) on a size mismatch or out-of-range bound.
  BoundFunction(const Graph& g, std::vector<std::size_t> bounds);

  // b(v) = min(cap, d(v)).
  static BoundFunction capped_degree(const Graph& g, std::size_t cap);
  // Bound used by the bmatching_max table entry: capped_degree(g, 2).
  static BoundFunction table_default(const Graph& g) { return capped_degree(g, 2); }

  std::size_t operator()(Vertex v) const { return bounds_.at(v); }
  const std::vector<std::size_t>& values() const { return bounds_; }

 private:
  std::vector<std::size_t> bounds_;
};

}  // namespace pmatch

#endif  // PMATCH_MATCHING_HPP_
