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

#include <algorithm>
#include <numeric>

#include "pmatch/error.hpp"

namespace pmatch {
namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

VertexSet open_neighborhood(const Graph& g, Vertex v) {
  auto nbrs = g.neighbors(v);
  return VertexSet(nbrs.begin(), nbrs.end());
}

VertexSet closed_neighborhood(const Graph& g, Vertex v) {
  VertexSet out = open_neighborhood(g, v);
  out.insert(std::lower_bound(out.begin(), out.end(), v), v);
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  VertexSet s = make_vertex_set(g, VertexSet(vertices.begin(), vertices.end()));
  std::vector<Vertex> local(g.num_vertices(), kNoVertex);
  for (Vertex i = 0; i < s.size(); ++i) local[s[i]] = i;
  std::vector<Edge> edges;
  for (Vertex a : s) {
    for (Vertex b : g.neighbors(a)) {
      if (a < b && local[b] != kNoVertex) edges.push_back({local[a], local[b]});
    }
  }
  std::vector<std::string> labels;
  if (g.has_labels()) {
    for (Vertex v : s) labels.push_back(g.label(v));
  }
  return {Graph(s.size(), std::move(edges), std::move(labels)), std::move(s)};
}

Graph complement(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n; ++a) {
    auto nbrs = g.neighbors(a);
    auto it = std::upper_bound(nbrs.begin(), nbrs.end(), a);
    for (Vertex b = a + 1; b < n; ++b) {
      if (it != nbrs.end() && *it == b) {
        ++it;
        continue;
      }
      edges.push_back({a, b});
    }
  }
  return Graph(n, std::move(edges), g.labels());
}

std::vector<VertexSet> components(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<char> seen(n, 0);
  std::vector<VertexSet> out;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    VertexSet comp;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::size_t component_count(const Graph& g) {
  DisjointSets sets(g.num_vertices());
  std::size_t count = g.num_vertices();
  for (const Edge& e : g.edges()) {
    if (sets.unite(e.u, e.v)) --count;
  }
  return count;
}

bool is_connected(const Graph& g) { return component_count(g) <= 1; }

bool has_isolated_vertex(const Graph& g) {
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) == 0) return true;
  }
  return false;
}

std::optional<Bipartition> bipartition(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<int> color(n, -1);
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex v = queue[head];
      for (Vertex w : g.neighbors(v)) {
        if (color[w] == -1) {
          color[w] = 1 - color[v];
          queue.push_back(w);
        } else if (color[w] == color[v]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition parts;
  for (Vertex v = 0; v < n; ++v) (color[v] == 0 ? parts.left : parts.right).push_back(v);
  return parts;
}

bool is_forest(const Graph& g) { return g.num_edges() + component_count(g) == g.num_vertices(); }

BlockDecomposition block_decomposition(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::size_t> disc(n, 0), low(n, 0);
  std::vector<char> is_cut(n, 0);
  std::vector<EdgeId> edge_stack;
  std::vector<std::vector<EdgeId>> raw_blocks;
  std::size_t timer = 0;

  struct Frame {
    Vertex v;
    EdgeId via;        // edge used to enter v (ignored for roots)
    std::size_t next;  // next neighbor position to scan
    std::size_t children;
  };
  std::vector<Frame> stack;
  const EdgeId kNoEdge = static_cast<EdgeId>(-1);

  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] != 0) continue;
    disc[root] = low[root] = ++timer;
    stack.push_back({root, kNoEdge, 0, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      auto nbrs = g.neighbors(f.v);
      auto inc = g.incident_edges(f.v);
      if (f.next < nbrs.size()) {
        Vertex w = nbrs[f.next];
        EdgeId e = inc[f.next];
        ++f.next;
        if (e == f.via) continue;
        if (disc[w] == 0) {
          edge_stack.push_back(e);
          disc[w] = low[w] = ++timer;
          ++f.children;
          stack.push_back({w, e, 0, 0});
        } else if (disc[w] < disc[f.v]) {
          edge_stack.push_back(e);
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      Frame done = f;
      stack.pop_back();
      if (stack.empty()) {
        if (done.children > 1) is_cut[done.v] = 1;
        continue;
      }
      Frame& parent = stack.back();
      low[parent.v] = std::min(low[parent.v], low[done.v]);
      if (low[done.v] >= disc[parent.v]) {
        if (stack.size() > 1) is_cut[parent.v] = 1;
        std::vector<EdgeId> block;
        while (true) {
          EdgeId e = edge_stack.back();
          edge_stack.pop_back();
          block.push_back(e);
          if (e == done.via) break;
        }
        raw_blocks.push_back(std::move(block));
      }
    }
  }

  BlockDecomposition out;
  for (auto& edges : raw_blocks) {
    Block b;
    std::sort(edges.begin(), edges.end());
    for (EdgeId e : edges) {
      b.vertices.push_back(g.edge(e).u);
      b.vertices.push_back(g.edge(e).v);
    }
    std::sort(b.vertices.begin(), b.vertices.end());
    b.vertices.erase(std::unique(b.vertices.begin(), b.vertices.end()), b.vertices.end());
    b.edges = std::move(edges);
    const std::size_t k = b.vertices.size();
    if (k == 2) {
      b.kind = BlockKind::kEdge;
    } else if (b.edges.size() == k && k % 2 == 1) {
      // A biconnected block with as many edges as vertices is a cycle.
      b.kind = BlockKind::kChordlessOddCycle;
    } else {
      b.kind = BlockKind::kOther;
    }
    out.blocks.push_back(std::move(b));
  }
  std::sort(out.blocks.begin(), out.blocks.end(),
            [](const Block& a, const Block& b) { return a.edges.front() < b.edges.front(); });
  for (Vertex v = 0; v < n; ++v) {
    if (is_cut[v]) out.cut_vertices.push_back(v);
  }
  return out;
}

bool blocks_are_edges_or_odd_cycles(const Graph& g) {
  auto blocks = block_decomposition(g);
  return std::all_of(blocks.blocks.begin(), blocks.blocks.end(),
                     [](const Block& b) { return b.kind != BlockKind::kOther; });
}

std::size_t component_count_without(const Graph& g, std::span<const EdgeId> removed) {
  std::vector<char> gone(g.num_edges(), 0);
  for (EdgeId e : removed) {
    check_edge(g, e);
    gone[e] = 1;
  }
  DisjointSets sets(g.num_vertices());
  std::size_t count = g.num_vertices();
  for (EdgeId id = 0; id < g.num_edges(); ++id) {
    if (gone[id]) continue;
    if (sets.unite(g.edge(id).u, g.edge(id).v)) --count;
  }
  return count;
}

bool is_edge_cut(const Graph& g, std::span<const EdgeId> cut) {
  std::size_t after = component_count_without(g, cut);
  return after > component_count(g);
}

}  // namespace pmatch
