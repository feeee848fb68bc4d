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

#include "pmatch/blossom.hpp"

#include <algorithm>

#include "pmatch/error.hpp"

namespace pmatch {

BlossomMatcher::BlossomMatcher(std::size_t n, std::span<const Edge> edges)
    : n_(n),
      offsets_(n + 1, 0),
      match_(n, kNoVertex),
      parent_(n, kNoVertex),
      base_(n),
      used_(n, 0),
      blossom_(n, 0),
      touched_flag_(n, 0),
      lca_mark_(n, 0) {
  for (const Edge& e : edges) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  for (std::size_t v = 0; v < n; ++v) offsets_[v + 1] += offsets_[v];
  adjacency_.resize(offsets_[n]);
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const Edge& e : edges) {
    adjacency_[fill[e.u]++] = e.v;
    adjacency_[fill[e.v]++] = e.u;
  }
  for (Vertex v = 0; v < n; ++v) base_[v] = v;
}

void BlossomMatcher::set_mates(std::vector<Vertex> mates) {
  if (mates.size() != n_) {
    throw Error(ErrorKind::kInvalidArgument, "mate table size does not match graph");
  }
  for (Vertex v = 0; v < n_; ++v) {
    Vertex w = mates[v];
    if (w != kNoVertex && (w >= n_ || mates[w] != v)) {
      throw Error(ErrorKind::kInvalidArgument, "inconsistent mate table");
    }
    if (w != kNoVertex &&
        std::find(adjacency_.begin() + offsets_[v], adjacency_.begin() + offsets_[v + 1], w) ==
            adjacency_.begin() + offsets_[v + 1]) {
      throw Error(ErrorKind::kInvalidArgument, "mate table uses a non-edge");
    }
  }
  match_ = std::move(mates);
}

void BlossomMatcher::greedy_init() {
  auto degree = [&](Vertex v) { return offsets_[v + 1] - offsets_[v]; };
  for (int pass = 0; pass < 2; ++pass) {
    for (Vertex v = 0; v < n_; ++v) {
      if (match_[v] != kNoVertex) continue;
      if (pass == 0 && degree(v) != 1) continue;
      for (std::size_t i = offsets_[v]; i < offsets_[v + 1]; ++i) {
        Vertex w = adjacency_[i];
        if (match_[w] == kNoVertex) {
          match_[v] = w;
          match_[w] = v;
          break;
        }
      }
    }
  }
}

std::size_t BlossomMatcher::size() const {
  std::size_t saturated = 0;
  for (Vertex w : match_) saturated += (w != kNoVertex);
  return saturated / 2;
}

void BlossomMatcher::touch(Vertex v) {
  if (!touched_flag_[v]) {
    touched_flag_[v] = 1;
    touched_.push_back(v);
  }
}

Vertex BlossomMatcher::lowest_common_base(Vertex a, Vertex b) {
  ++lca_stamp_;
  while (true) {
    a = base_[a];
    lca_mark_[a] = lca_stamp_;
    if (match_[a] == kNoVertex) break;
    a = parent_[match_[a]];
  }
  while (true) {
    b = base_[b];
    if (lca_mark_[b] == lca_stamp_) return b;
    b = parent_[match_[b]];
  }
}

void BlossomMatcher::mark_path(Vertex v, Vertex b, Vertex child) {
  while (base_[v] != b) {
    blossom_[base_[v]] = 1;
    blossom_[base_[match_[v]]] = 1;
    parent_[v] = child;
    child = match_[v];
    v = parent_[match_[v]];
  }
}

Vertex BlossomMatcher::find_path(Vertex root) {
  for (Vertex v : touched_) {
    used_[v] = 0;
    parent_[v] = kNoVertex;
    base_[v] = v;
    blossom_[v] = 0;
    touched_flag_[v] = 0;
  }
  touched_.clear();
  queue_.clear();

  touch(root);
  used_[root] = 1;
  queue_.push_back(root);
  for (std::size_t head = 0; head < queue_.size(); ++head) {
    Vertex v = queue_[head];
    for (std::size_t i = offsets_[v]; i < offsets_[v + 1]; ++i) {
      Vertex to = adjacency_[i];
      if (base_[v] == base_[to] || match_[v] == to) continue;
      const bool to_is_outer =
          to == root || (match_[to] != kNoVertex && parent_[match_[to]] != kNoVertex);
      if (to_is_outer) {
        Vertex current_base = lowest_common_base(v, to);
        for (Vertex x : touched_) blossom_[x] = 0;
        mark_path(v, current_base, to);
        mark_path(to, current_base, v);
        const std::size_t count = touched_.size();
        for (std::size_t k = 0; k < count; ++k) {
          Vertex x = touched_[k];
          if (blossom_[base_[x]]) {
            base_[x] = current_base;
            if (!used_[x]) {
              used_[x] = 1;
              queue_.push_back(x);
            }
          }
        }
      } else if (parent_[to] == kNoVertex) {
        touch(to);
        parent_[to] = v;
        if (match_[to] == kNoVertex) return to;
        Vertex next = match_[to];
        touch(next);
        used_[next] = 1;
        queue_.push_back(next);
      }
    }
  }
  return kNoVertex;
}

bool BlossomMatcher::augment_from(Vertex root) {
  if (root >= n_ || match_[root] != kNoVertex) return false;
  Vertex v = find_path(root);
  if (v == kNoVertex) return false;
  while (v != kNoVertex) {
    Vertex pv = parent_[v];
    Vertex ppv = match_[pv];
    match_[v] = pv;
    match_[pv] = v;
    v = ppv;
  }
  return true;
}

std::size_t BlossomMatcher::maximize() {
  for (Vertex v = 0; v < n_; ++v) {
    if (match_[v] == kNoVertex && offsets_[v + 1] > offsets_[v]) augment_from(v);
  }
  return size();
}

}  // namespace pmatch
