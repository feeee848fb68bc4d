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

#include "pmatch/graph.hpp"

#include <algorithm>
#include <unordered_set>

#include "pmatch/error.hpp"

namespace pmatch {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParse:
      return "parse";
    case ErrorKind::kInvalidArgument:
      return "invalid_argument";
    case ErrorKind::kOutOfRange:
      return "out_of_range";
    case ErrorKind::kBudgetExceeded:
      return "budget_exceeded";
    case ErrorKind::kTooLarge:
      return "too_large";
    case ErrorKind::kNotApplicable:
      return "not_applicable";
  }
  return "unknown";
}

Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

Graph::Graph(std::size_t n) : n_(n), offsets_(n + 1, 0) {}

Graph::Graph(std::size_t n, std::vector<Edge> edges, std::vector<std::string> labels)
    : n_(n), edges_(std::move(edges)), labels_(std::move(labels)) {
  for (Edge& e : edges_) {
    if (e.u == e.v) {
      throw Error(ErrorKind::kInvalidArgument, "self-loop at vertex " + std::to_string(e.u));
    }
    if (e.u >= n_ || e.v >= n_) {
      throw Error(ErrorKind::kInvalidArgument, "edge " + std::to_string(e.u) + "-" +
                                                   std::to_string(e.v) +
                                                   " has an endpoint >= n = " + std::to_string(n_));
    }
    e = make_edge(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw Error(ErrorKind::kInvalidArgument,
                "duplicate edge " + std::to_string(dup->u) + "-" + std::to_string(dup->v));
  }
  if (!labels_.empty()) {
    if (labels_.size() != n_) {
      throw Error(ErrorKind::kInvalidArgument, "label table size does not match vertex count");
    }
    std::unordered_set<std::string_view> seen;
    for (const std::string& l : labels_) {
      if (l.empty() || !seen.insert(l).second) {
        throw Error(ErrorKind::kInvalidArgument, "empty or duplicate vertex label '" + l + "'");
      }
    }
  }

  offsets_.assign(n_ + 1, 0);
  for (const Edge& e : edges_) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  for (std::size_t v = 0; v < n_; ++v) offsets_[v + 1] += offsets_[v];
  adjacency_.resize(2 * edges_.size());
  adjacency_edges_.resize(2 * edges_.size());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  // Edges are sorted by (u, v), so both passes below append neighbors in
  // ascending order: first the smaller neighbors (as v), then the larger.
  for (EdgeId id = 0; id < edges_.size(); ++id) {
    const Edge& e = edges_[id];
    adjacency_[fill[e.v]] = e.u;
    adjacency_edges_[fill[e.v]++] = id;
  }
  for (EdgeId id = 0; id < edges_.size(); ++id) {
    const Edge& e = edges_[id];
    adjacency_[fill[e.u]] = e.v;
    adjacency_edges_[fill[e.u]++] = id;
  }
}

const Edge& Graph::edge(EdgeId id) const {
  check_edge(*this, id);
  return edges_[id];
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  check_vertex(*this, v);
  return {adjacency_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

std::span<const EdgeId> Graph::incident_edges(Vertex v) const {
  check_vertex(*this, v);
  return {adjacency_edges_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

std::size_t Graph::degree(Vertex v) const {
  check_vertex(*this, v);
  return offsets_[v + 1] - offsets_[v];
}

std::optional<EdgeId> Graph::find_edge(Vertex a, Vertex b) const {
  if (a >= n_ || b >= n_ || a == b) return std::nullopt;
  if (degree(a) > degree(b)) std::swap(a, b);
  auto nbrs = neighbors(a);
  auto it = std::lower_bound(nbrs.begin(), nbrs.end(), b);
  if (it == nbrs.end() || *it != b) return std::nullopt;
  return adjacency_edges_[offsets_[a] + (it - nbrs.begin())];
}

EdgeId Graph::edge_id(Vertex a, Vertex b) const {
  auto id = find_edge(a, b);
  if (!id) {
    throw Error(ErrorKind::kInvalidArgument,
                label(a) + "-" + label(b) + " is not an edge of the graph");
  }
  return *id;
}

std::string Graph::label(Vertex v) const {
  if (v < labels_.size()) return labels_[v];
  return std::to_string(v);
}

std::optional<Vertex> Graph::find_vertex(std::string_view label) const {
  if (labels_.empty()) {
    Vertex v = 0;
    if (label.empty()) return std::nullopt;
    for (char c : label) {
      if (c < '0' || c > '9') return std::nullopt;
      if (v > (kNoVertex - 9) / 10) return std::nullopt;
      v = v * 10 + static_cast<Vertex>(c - '0');
    }
    if (v >= n_) return std::nullopt;
    return v;
  }
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<Vertex>(it - labels_.begin());
}

void check_vertex(const Graph& g, Vertex v) {
  if (v >= g.num_vertices()) {
    throw Error(ErrorKind::kOutOfRange, "vertex " + std::to_string(v) + " out of range (n = " +
                                            std::to_string(g.num_vertices()) + ")");
  }
}

void check_edge(const Graph& g, EdgeId id) {
  if (id >= g.num_edges()) {
    throw Error(ErrorKind::kOutOfRange, "edge id " + std::to_string(id) + " out of range (m = " +
                                            std::to_string(g.num_edges()) + ")");
  }
}

VertexSet make_vertex_set(const Graph& g, std::vector<Vertex> vertices) {
  for (Vertex v : vertices) check_vertex(g, v);
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return vertices;
}

EdgeSet make_edge_set(const Graph& g, std::vector<EdgeId> edges) {
  for (EdgeId e : edges) check_edge(g, e);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

std::string format_edge(const Graph& g, EdgeId id) {
  const Edge& e = g.edge(id);
  return g.label(e.u) + "-" + g.label(e.v);
}

}  // namespace pmatch
