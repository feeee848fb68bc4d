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

#include "pmatch/bipartite.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "pmatch/error.hpp"
#include "pmatch/structure.hpp"

namespace pmatch {
namespace {
constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();
}  // namespace

HopcroftKarp::HopcroftKarp(std::size_t right, std::vector<std::vector<std::uint32_t>> adjacency)
    : adj_(std::move(adjacency)),
      mate_left_(adj_.size(), kFree),
      mate_right_(right, kFree),
      dist_(adj_.size(), kInf),
      next_(adj_.size(), 0) {
  for (const auto& list : adj_) {
    for (std::uint32_t r : list) {
      if (r >= right) throw Error(ErrorKind::kOutOfRange, "right vertex out of range");
    }
  }
}

bool HopcroftKarp::bfs() {
  std::deque<std::uint32_t> queue;
  for (std::uint32_t l = 0; l < adj_.size(); ++l) {
    if (mate_left_[l] == kFree) {
      dist_[l] = 0;
      queue.push_back(l);
    } else {
      dist_[l] = kInf;
    }
  }
  bool found = false;
  while (!queue.empty()) {
    std::uint32_t l = queue.front();
    queue.pop_front();
    for (std::uint32_t r : adj_[l]) {
      std::uint32_t next = mate_right_[r];
      if (next == kFree) {
        found = true;
      } else if (dist_[next] == kInf) {
        dist_[next] = dist_[l] + 1;
        queue.push_back(next);
      }
    }
  }
  return found;
}

bool HopcroftKarp::dfs(std::uint32_t l) {
  for (std::size_t& i = next_[l]; i < adj_[l].size(); ++i) {
    std::uint32_t r = adj_[l][i];
    std::uint32_t next = mate_right_[r];
    if (next == kFree || (dist_[next] == dist_[l] + 1 && dfs(next))) {
      mate_left_[l] = r;
      mate_right_[r] = l;
      ++i;
      return true;
    }
  }
  dist_[l] = kInf;
  return false;
}

std::size_t HopcroftKarp::run() {
  while (bfs()) {
    std::fill(next_.begin(), next_.end(), 0);
    for (std::uint32_t l = 0; l < adj_.size(); ++l) {
      if (mate_left_[l] == kFree) dfs(l);
    }
  }
  return static_cast<std::size_t>(
      std::count_if(mate_left_.begin(), mate_left_.end(), [](auto r) { return r != kFree; }));
}

void HopcroftKarp::alternating_reach(const std::vector<std::uint32_t>& roots,
                                     std::vector<char>& left_seen,
                                     std::vector<char>& right_seen) const {
  left_seen.assign(adj_.size(), 0);
  right_seen.assign(mate_right_.size(), 0);
  std::vector<std::uint32_t> stack;
  for (std::uint32_t l : roots) {
    if (!left_seen[l]) {
      left_seen[l] = 1;
      stack.push_back(l);
    }
  }
  while (!stack.empty()) {
    std::uint32_t l = stack.back();
    stack.pop_back();
    for (std::uint32_t r : adj_[l]) {
      if (right_seen[r]) continue;
      right_seen[r] = 1;
      std::uint32_t next = mate_right_[r];
      if (next != kFree && !left_seen[next]) {
        left_seen[next] = 1;
        stack.push_back(next);
      }
    }
  }
}

MatchingWithCover bipartite_max_matching_with_cover(const Graph& g) {
  auto parts = bipartition(g);
  if (!parts) throw Error(ErrorKind::kInvalidArgument, "graph is not bipartite");
  const VertexSet& left = parts->left;
  const VertexSet& right = parts->right;
  std::vector<std::uint32_t> index(g.num_vertices());
  for (std::uint32_t i = 0; i < left.size(); ++i) index[left[i]] = i;
  for (std::uint32_t i = 0; i < right.size(); ++i) index[right[i]] = i;
  std::vector<std::vector<std::uint32_t>> adj(left.size());
  for (std::uint32_t i = 0; i < left.size(); ++i) {
    for (Vertex w : g.neighbors(left[i])) adj[i].push_back(index[w]);
  }
  HopcroftKarp hk(right.size(), std::move(adj));
  hk.run();

  std::vector<EdgeId> edges;
  std::vector<std::uint32_t> free_left;
  for (std::uint32_t i = 0; i < left.size(); ++i) {
    std::uint32_t r = hk.mate_of_left()[i];
    if (r == HopcroftKarp::kFree) {
      free_left.push_back(i);
    } else {
      edges.push_back(g.edge_id(left[i], right[r]));
    }
  }
  std::vector<char> left_seen, right_seen;
  hk.alternating_reach(free_left, left_seen, right_seen);
  VertexSet cover;
  for (std::uint32_t i = 0; i < left.size(); ++i) {
    if (!left_seen[i]) cover.push_back(left[i]);
  }
  for (std::uint32_t i = 0; i < right.size(); ++i) {
    if (right_seen[i]) cover.push_back(right[i]);
  }
  std::sort(cover.begin(), cover.end());
  return {Matching::from_edges(g, std::move(edges)), std::move(cover)};
}

}  // namespace pmatch
