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

#ifndef PMATCH_STRUCTURE_HPP_
#define PMATCH_STRUCTURE_HPP_

#include <optional>
#include <span>
#include <vector>

#include "pmatch/graph.hpp"

namespace pmatch {

VertexSet open_neighborhood(const Graph& g, Vertex v);
VertexSet closed_neighborhood(const Graph& g, Vertex v);

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_host;  // subgraph vertex i is host vertex to_host[i]
};

// G[S]; labels carry over. Vertices of the subgraph follow ascending host
// index.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

Graph complement(const Graph& g);

// Components in order of their smallest vertex, each sorted ascending.
std::vector<VertexSet> components(const Graph& g);
std::size_t component_count(const Graph& g);
// Empty graph counts as connected.
bool is_connected(const Graph& g);
bool has_isolated_vertex(const Graph& g);

struct Bipartition {
  VertexSet left;   // color 0; the smallest vertex of each component
  VertexSet right;  // color 1
};

// A 2-coloring with every edge crossing, or nullopt iff G has an odd cycle.
std::optional<Bipartition> bipartition(const Graph& g);
inline bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

// |E| = n - #components.
bool is_forest(const Graph& g);

enum class BlockKind { kEdge, kChordlessOddCycle, kOther };

struct Block {
  VertexSet vertices;
  EdgeSet edges;
  BlockKind kind = BlockKind::kOther;
};

struct BlockDecomposition {
  std::vector<Block> blocks;  // sorted by smallest edge id
  VertexSet cut_vertices;
};

// Biconnected components (bridges are 2-vertex blocks). Isolated vertices
// belong to no block. Iterative, so deep graphs do not overflow the stack.
BlockDecomposition block_decomposition(const Graph& g);

// True iff every block is a single edge or a chordless odd cycle.
bool blocks_are_edges_or_odd_cycles(const Graph& g);

// Number of components of G - F. Throws on non-edge members.
std::size_t component_count_without(const Graph& g, std::span<const EdgeId> removed);

// True iff G - F has strictly more components than G.
bool is_edge_cut(const Graph& g, std::span<const EdgeId> cut);

}  // namespace pmatch

#endif  // PMATCH_STRUCTURE_HPP_
