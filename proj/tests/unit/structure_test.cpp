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

#include "pmatch/structure.hpp"

#include <gtest/gtest.h>

#include <numeric>

#include "pmatch/corpus.hpp"
#include "pmatch/generators.hpp"

namespace pmatch {
namespace {

// Union-find component count, independent of the BFS in structure.cpp.
std::size_t naive_components(std::size_t n, std::span<const Edge> edges) {
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t count = n;
  for (const Edge& e : edges) {
    auto a = find(e.u), b = find(e.v);
    if (a != b) {
      parent[a] = b;
      --count;
    }
  }
  return count;
}

// Odd cycle by trying every 2-coloring (n <= 10).
bool naive_bipartite(const Graph& g) {
  const std::size_t n = g.num_vertices();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    for (const Edge& e : g.edges()) ok = ok && (((mask >> e.u) ^ (mask >> e.v)) & 1);
    if (ok) return true;
  }
  return false;
}

TEST(StructureTest, Neighborhoods) {
  Graph g = path_graph(4);
  EXPECT_EQ(open_neighborhood(g, 1), (VertexSet{0, 2}));
  EXPECT_EQ(closed_neighborhood(g, 1), (VertexSet{0, 1, 2}));
}

TEST(StructureTest, InducedSubgraphKeepsLabels) {
  Graph g(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}, {"a", "b", "c", "d"});
  std::vector<Vertex> keep = {3, 0, 1};
  InducedSubgraph h = induced_subgraph(g, keep);
  EXPECT_EQ(h.to_host, (std::vector<Vertex>{0, 1, 3}));
  EXPECT_EQ(h.graph.num_edges(), 2u);
  EXPECT_EQ(h.graph.label(2), "d");
}

TEST(StructureTest, ComplementOfC5IsC5) {
  Graph c = complement(cycle_graph(5));
  EXPECT_EQ(c.num_edges(), 5u);
  for (Vertex v = 0; v < 5; ++v) EXPECT_EQ(c.degree(v), 2u);
  EXPECT_EQ(complement(complement(cycle_graph(5))), cycle_graph(5));
}

TEST(StructureTest, ComponentsAndBipartitenessAgreeWithBruteForce) {
  Corpus c;
  c.add_all_graphs(5);
  for (std::size_t i = 0; i < c.size(); ++i) {
    Graph g = c.at(i).graph;
    EXPECT_EQ(component_count(g), naive_components(5, g.edges()));
    EXPECT_EQ(is_bipartite(g), naive_bipartite(g));
    auto parts = bipartition(g);
    if (parts) {
      std::vector<int> side(5, -1);
      for (Vertex v : parts->left) side[v] = 0;
      for (Vertex v : parts->right) side[v] = 1;
      for (const Edge& e : g.edges()) EXPECT_NE(side[e.u], side[e.v]);
    }
    EXPECT_EQ(is_forest(g), g.num_edges() == 5 - naive_components(5, g.edges()));
  }
}

TEST(StructureTest, EmptyGraphIsConnected) {
  EXPECT_TRUE(is_connected(Graph(0)));
  EXPECT_TRUE(is_connected(Graph(1)));
  EXPECT_FALSE(is_connected(Graph(2)));
  EXPECT_TRUE(has_isolated_vertex(Graph(2, {})));
}

TEST(StructureTest, BlocksOfTwoTrianglesAndAPendant) {
  // Triangles 012 and 234 share vertex 2; pendant edge 4-5.
  Graph g(6, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}, {4, 5}});
  BlockDecomposition d = block_decomposition(g);
  ASSERT_EQ(d.blocks.size(), 3u);
  EXPECT_EQ(d.cut_vertices, (VertexSet{2, 4}));
  EXPECT_EQ(d.blocks[0].kind, BlockKind::kChordlessOddCycle);
  EXPECT_EQ(d.blocks[1].kind, BlockKind::kChordlessOddCycle);
  EXPECT_EQ(d.blocks[2].kind, BlockKind::kEdge);
  EXPECT_TRUE(blocks_are_edges_or_odd_cycles(g));
}

TEST(StructureTest, BlockKinds) {
  EXPECT_FALSE(blocks_are_edges_or_odd_cycles(cycle_graph(4)));
  EXPECT_FALSE(blocks_are_edges_or_odd_cycles(complete_graph(4)));
  EXPECT_TRUE(blocks_are_edges_or_odd_cycles(cycle_graph(7)));
  EXPECT_TRUE(blocks_are_edges_or_odd_cycles(random_tree(40, 3)));
  EXPECT_TRUE(blocks_are_edges_or_odd_cycles(Graph(3)));
}

TEST(StructureTest, DeepPathDoesNotOverflow) {
  Graph p = path_graph(200000);
  EXPECT_EQ(block_decomposition(p).blocks.size(), 199999u);
}

TEST(StructureTest, EdgeCuts) {
  Graph q3 = hypercube_graph(3);
  EdgeSet dim0;
  for (EdgeId e = 0; e < q3.num_edges(); ++e) {
    if ((q3.edge(e).u ^ q3.edge(e).v) == 1) dim0.push_back(e);
  }
  EXPECT_TRUE(is_edge_cut(q3, dim0));
  EXPECT_EQ(component_count_without(q3, dim0), 2u);
  Graph k4 = complete_graph(4);
  EdgeSet two = {k4.edge_id(0, 1), k4.edge_id(2, 3)};
  EXPECT_FALSE(is_edge_cut(k4, two));
  Graph k2 = complete_graph(2);
  EdgeSet one = {0};
  EXPECT_TRUE(is_edge_cut(k2, one));
}

}  // namespace
}  // namespace pmatch
