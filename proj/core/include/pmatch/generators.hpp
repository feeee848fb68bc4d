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

#ifndef PMATCH_GENERATORS_HPP_
#define PMATCH_GENERATORS_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pmatch/graph.hpp"

namespace pmatch {

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);  // n >= 3
Graph complete_graph(std::size_t n);
Graph complete_bipartite_graph(std::size_t a, std::size_t b);
Graph hypercube_graph(std::size_t dimension);  // 2^d vertices, d <= 20
Graph empty_graph(std::size_t n);

// Seeded generators are deterministic across platforms: they draw from
// std::mt19937_64 through our own range reduction, not std distributions.
Graph random_gnp(std::size_t n, double p, std::uint64_t seed);
Graph random_tree(std::size_t n, std::uint64_t seed);
// Connected graph whose blocks are single edges or chordless odd cycles
// (lengths 3, 5, 7), grown by attaching `blocks` blocks at random vertices.
Graph random_odd_cactus(std::size_t blocks, std::uint64_t seed);

// Labeled graph on n vertices whose edge i (in the order 01, 02, ..., 12,
// ...) is present iff bit i of mask is set. n <= 11.
Graph graph_from_edge_mask(std::size_t n, std::uint64_t mask);

// Hand-transcribed figure fixtures.
//
//   FIG2L  ur example: top row 0..3, bottom row 4..7; drawn matching
//          {0-4, 1-5, 2-6, 3-7}; other edges 0-5, 0-6, 1-6, 3-6.
//   FIG2R  not-ur example: same matching; other edges 1-4, 2-5, 3-6, 0-7
//          (together an 8-cycle alternating with the matching).
//   FIG3   independent matching: labels 1..4 (top), 1'..4' (bottom); edges
//          2-3, 3-4, 1-1', 1'-2', 2-2', 3-3', 4-4'; drawn orientation
//          X = {1, 2, 3', 4}.
//   FIG4   bipartite matching: edges 1-2, 1-1', 2-2', 2'-3, 3-3', 3'-4,
//          4-4'; drawn orientation X = {1, 2', 3', 4'}.
//   FIG5   cnbr adjacency: v-a is e1, b-c is e2, v adjacent to b and c.
//   FIG6   onbr adjacency: a-b is e1, c-d is e2, v adjacent to a, b, c, d.
enum class Figure { kFig2Left, kFig2Right, kFig3, kFig4, kFig5, kFig6 };

struct FigureFixture {
  std::string name;
  Graph graph;
  EdgeSet drawn_matching;                                    // empty for FIG5/FIG6
  std::vector<std::pair<Vertex, Vertex>> drawn_orientation;  // (tail, head)
  std::pair<EdgeId, EdgeId> highlighted_edges{0, 0};         // e1, e2 for FIG5/FIG6
};

FigureFixture figure_fixture(Figure figure);

// Family tags: path, cycle, complete, complete-bipartite, hypercube, empty,
// gnp, tree, odd-cactus, FIG2L, FIG2R, FIG3, FIG4, FIG5, FIG6.
struct FamilySpec {
  std::string family;
  std::vector<std::int64_t> sizes;  // complete-bipartite takes two
  double p = 0.5;
  std::uint64_t seed = 0;
};

// Throws Error(kInvalidArgument) on an unknown family or bad parameters.
Graph generate(const FamilySpec& spec);

}  // namespace pmatch

#endif  // PMATCH_GENERATORS_HPP_
