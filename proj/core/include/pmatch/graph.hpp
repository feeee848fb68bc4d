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

#ifndef PMATCH_GRAPH_HPP_
#define PMATCH_GRAPH_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pmatch {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;

inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();

// Unordered vertex pair, stored normalized so that u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Vertex other(Vertex x) const { return x == u ? v : u; }
  bool touches(Vertex x) const { return x == u || x == v; }
  bool shares_vertex(const Edge& e) const { return touches(e.u) || touches(e.v); }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

Edge make_edge(Vertex a, Vertex b);

// Sorted, duplicate-free subsets of a host graph. Membership in the host is
// checked by the operations that consume them.
using VertexSet = std::vector<Vertex>;
using EdgeSet = std::vector<EdgeId>;

// Immutable simple undirected graph on vertices 0..n-1.
//
// Edge ids follow the sorted order of the normalized (u, v) pairs, so two
// graphs with the same edge set number their edges identically. Adjacency is
// stored in CSR form with neighbors sorted ascending; incident_edges(v) runs
// parallel to neighbors(v).
//
// Vertices may carry labels (e.g. "1'" for the primed vertices of the figure
// fixtures). Unlabeled graphs report the decimal index as the label.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);
  // Throws Error(kInvalidArgument) on self-loops, duplicate edges, endpoints
  // >= n, or a label table that is not empty, of size n and duplicate-free.
  Graph(std::size_t n, std::vector<Edge> edges, std::vector<std::string> labels = {});

  std::size_t num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }

  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(EdgeId id) const;

  std::span<const Vertex> neighbors(Vertex v) const;
  std::span<const EdgeId> incident_edges(Vertex v) const;
  std::size_t degree(Vertex v) const;

  bool has_edge(Vertex a, Vertex b) const { return find_edge(a, b).has_value(); }
  std::optional<EdgeId> find_edge(Vertex a, Vertex b) const;
  // Throws Error(kInvalidArgument) when ab is not an edge.
  EdgeId edge_id(Vertex a, Vertex b) const;

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(Vertex v) const;
  std::optional<Vertex> find_vertex(std::string_view label) const;

  // Structural equality: same vertex count and edge set. Labels are ignored.
  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> adjacency_;
  std::vector<EdgeId> adjacency_edges_;
  std::vector<std::string> labels_;
};

// Throws Error(kOutOfRange) unless v < g.num_vertices().
void check_vertex(const Graph& g, Vertex v);
// Throws Error(kOutOfRange) unless id < g.num_edges().
void check_edge(const Graph& g, EdgeId id);

// Sorts and deduplicates; validates membership in g.
VertexSet make_vertex_set(const Graph& g, std::vector<Vertex> vertices);
EdgeSet make_edge_set(const Graph& g, std::vector<EdgeId> edges);

// "u-v" using vertex labels.
std::string format_edge(const Graph& g, EdgeId id);

// ---------------------------------------------------------------------------
// Text formats.
//
// Edge list: '#' starts a comment. Each data line is either "u v" (an edge)
// or a single token (declares a possibly isolated vertex). The first data
// line is read as an "n m" header when both tokens are integers, exactly m
// edge lines follow, and every numeric endpoint is < n. Tokens that are all
// decimal integers are used as vertex indices directly; if any token is not,
// every token is a label and vertices are numbered in order of appearance.
//
// DIMACS: "c" comments, one "p edge n m" header, "e u v" lines with 1-based
// vertex numbers.
// ---------------------------------------------------------------------------

enum class GraphFormat { kAuto, kEdgeList, kDimacs };

Graph parse_graph(std::string_view text, GraphFormat format = GraphFormat::kAuto);
Graph read_graph_file(const std::string& path, GraphFormat format = GraphFormat::kAuto);

// Canonical edge list: "n m" header, sorted pairs, labels when present,
// followed by single-token lines for isolated labeled vertices.
std::string to_edge_list(const Graph& g);

}  // namespace pmatch

#endif  // PMATCH_GRAPH_HPP_
