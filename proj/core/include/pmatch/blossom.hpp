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

#ifndef PMATCH_BLOSSOM_HPP_
#define PMATCH_BLOSSOM_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "pmatch/graph.hpp"

namespace pmatch {

// Edmonds' blossom algorithm for maximum cardinality matching in general
// graphs. Each search resets only the vertices it touched, so augmenting from
// a vertex costs time proportional to the explored region rather than n.
class BlossomMatcher {
 public:
  BlossomMatcher(std::size_t n, std::span<const Edge> edges);
  explicit BlossomMatcher(const Graph& g) : BlossomMatcher(g.num_vertices(), g.edges()) {}

  // Replaces the current matching. mates[v] == kNoVertex marks v free; the
  // table must be symmetric and use only edges of the graph.
  void set_mates(std::vector<Vertex> mates);

  // Leaves first, then any free neighbor.
  void greedy_init();

  // One augmenting-path search from the free vertex `root`; applies the path
  // and returns true when one is found.
  bool augment_from(Vertex root);

  // Augments until maximum. Returns the matching size.
  std::size_t maximize();

  const std::vector<Vertex>& mates() const { return match_; }
  std::size_t size() const;

 private:
  Vertex find_path(Vertex root);
  Vertex lowest_common_base(Vertex a, Vertex b);
  void mark_path(Vertex v, Vertex b, Vertex child);
  void touch(Vertex v);

  std::size_t n_;
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> adjacency_;
  std::vector<Vertex> match_;
  std::vector<Vertex> parent_;
  std::vector<Vertex> base_;
  std::vector<char> used_;
  std::vector<char> blossom_;
  std::vector<char> touched_flag_;
  std::vector<Vertex> touched_;
  std::vector<std::size_t> lca_mark_;
  std::size_t lca_stamp_ = 0;
  std::vector<Vertex> queue_;
};

}  // namespace pmatch

#endif  // PMATCH_BLOSSOM_HPP_
