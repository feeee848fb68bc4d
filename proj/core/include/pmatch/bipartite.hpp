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

#ifndef PMATCH_BIPARTITE_HPP_
#define PMATCH_BIPARTITE_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "pmatch/graph.hpp"
#include "pmatch/matching.hpp"

namespace pmatch {

// Hopcroft-Karp on an explicit left/right incidence structure.
class HopcroftKarp {
 public:
  static constexpr std::uint32_t kFree = static_cast<std::uint32_t>(-1);

  // adjacency[l] lists right vertices (< right) of left vertex l.
  HopcroftKarp(std::size_t right, std::vector<std::vector<std::uint32_t>> adjacency);

  // Runs to completion; returns the matching size.
  std::size_t run();

  const std::vector<std::uint32_t>& mate_of_left() const { return mate_left_; }
  const std::vector<std::uint32_t>& mate_of_right() const { return mate_right_; }

  // Vertices reachable by alternating paths from the given free left vertices
  // (left-to-right on any edge, right-to-left on matched edges). Call after
  // run().
  void alternating_reach(const std::vector<std::uint32_t>& roots, std::vector<char>& left_seen,
                         std::vector<char>& right_seen) const;

 private:
  bool bfs();
  bool dfs(std::uint32_t l);

  std::vector<std::vector<std::uint32_t>> adj_;
  std::vector<std::uint32_t> mate_left_;
  std::vector<std::uint32_t> mate_right_;
  std::vector<std::uint32_t> dist_;
  std::vector<std::size_t> next_;
};

struct MatchingWithCover {
  Matching matching;
  VertexSet cover;  // |cover| == matching.size()
};

// Maximum matching and a vertex cover of equal size (Konig's construction).
// Throws Error(kInvalidArgument) when g is not bipartite.
MatchingWithCover bipartite_max_matching_with_cover(const Graph& g);

}  // namespace pmatch

#endif  // PMATCH_BIPARTITE_HPP_
