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

#include "pmatch/matching.hpp"

#include <algorithm>
#include <cctype>

#include "pmatch/error.hpp"

namespace pmatch {

std::optional<Matching> Matching::try_from_edges(const Graph& g, std::vector<EdgeId> edges) {
  Matching m;
  m.edges_ = make_edge_set(g, std::move(edges));
  m.mate_.assign(g.num_vertices(), kNoVertex);
  for (EdgeId id : m.edges_) {
    const Edge& e = g.edge(id);
    if (m.mate_[e.u] != kNoVertex || m.mate_[e.v] != kNoVertex) return std::nullopt;
    m.mate_[e.u] = e.v;
    m.mate_[e.v] = e.u;
    m.saturated_.push_back(e.u);
    m.saturated_.push_back(e.v);
  }
  std::sort(m.saturated_.begin(), m.saturated_.end());
  return m;
}

Matching Matching::from_edges(const Graph& g, std::vector<EdgeId> edges) {
  auto shared = find_shared_vertex(g, edges);
  if (shared) {
    throw Error(ErrorKind::kInvalidArgument,
                "not a matching: vertex " + g.label(*shared) + " is covered twice");
  }
  return *try_from_edges(g, std::move(edges));
}

Matching Matching::from_mates(const Graph& g, const std::vector<Vertex>& mates) {
  if (mates.size() != g.num_vertices()) {
    throw Error(ErrorKind::kInvalidArgument, "mate table size does not match graph");
  }
  std::vector<EdgeId> edges;
  for (Vertex v = 0; v < mates.size(); ++v) {
    Vertex w = mates[v];
    if (w == kNoVertex) continue;
    if (w >= mates.size() || mates[w] != v) {
      throw Error(ErrorKind::kInvalidArgument, "inconsistent mate table");
    }
    if (v < w) edges.push_back(g.edge_id(v, w));
  }
  return from_edges(g, std::move(edges));
}

bool Matching::contains(EdgeId e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

Matching Matching::with_edge(const Graph& g, EdgeId e) const {
  std::vector<EdgeId> edges = edges_;
  edges.push_back(e);
  return from_edges(g, std::move(edges));
}

std::optional<Vertex> find_shared_vertex(const Graph& g, std::span<const EdgeId> edges) {
  std::vector<EdgeId> sorted(edges.begin(), edges.end());
  for (EdgeId e : sorted) check_edge(g, e);
  std::sort(sorted.begin(), sorted.end());
  std::vector<char> used(g.num_vertices(), 0);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i > 0 && sorted[i] == sorted[i - 1]) continue;
    const Edge& e = g.edge(sorted[i]);
    if (used[e.u]) return e.u;
    if (used[e.v]) return e.v;
    used[e.u] = used[e.v] = 1;
  }
  return std::nullopt;
}

std::string format_edges(const Graph& g, std::span<const EdgeId> edges) {
  std::string out;
  for (EdgeId e : edges) {
    if (!out.empty()) out += ',';
    out += format_edge(g, e);
  }
  return out;
}

EdgeSet parse_edges(const Graph& g, std::string_view text) {
  std::vector<EdgeId> out;
  std::size_t i = 0;
  auto is_sep = [](char c) { return c == ',' || std::isspace(static_cast<unsigned char>(c)); };
  while (i < text.size()) {
    while (i < text.size() && is_sep(text[i])) ++i;
    if (i >= text.size()) break;
    std::size_t j = i;
    while (j < text.size() && !is_sep(text[j])) ++j;
    std::string_view item = text.substr(i, j - i);
    i = j;
    auto dash = item.find('-');
    if (dash == std::string_view::npos || dash == 0 || dash + 1 == item.size()) {
      throw Error(ErrorKind::kParse, "expected 'u-v', got '" + std::string(item) + "'");
    }
    auto a = g.find_vertex(item.substr(0, dash));
    auto b = g.find_vertex(item.substr(dash + 1));
    if (!a || !b) {
      throw Error(ErrorKind::kParse, "unknown vertex in '" + std::string(item) + "'");
    }
    auto id = g.find_edge(*a, *b);
    if (!id) throw Error(ErrorKind::kParse, "'" + std::string(item) + "' is not an edge");
    out.push_back(*id);
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
    throw Error(ErrorKind::kParse, "edge listed twice");
  }
  return out;
}

VertexSet Orientation::tails() const {
  VertexSet out;
  for (const auto& [t, h] : arcs) out.push_back(t);
  std::sort(out.begin(), out.end());
  return out;
}

VertexSet Orientation::heads() const {
  VertexSet out;
  for (const auto& [t, h] : arcs) out.push_back(h);
  std::sort(out.begin(), out.end());
  return out;
}

std::string format_orientation(const Graph& g, const Orientation& o) {
  std::string out;
  for (const auto& [t, h] : o.arcs) {
    if (!out.empty()) out += ',';
    out += g.label(t) + ">" + g.label(h);
  }
  return out;
}

bool orients(const Graph& g, const Matching& m, const Orientation& o) {
  if (o.arcs.size() != m.size()) return false;
  std::vector<EdgeId> ids;
  for (const auto& [t, h] : o.arcs) {
    auto id = g.find_edge(t, h);
    if (!id) return false;
    ids.push_back(*id);
  }
  std::sort(ids.begin(), ids.end());
  return ids == m.edges();
}

std::string_view property_name(PropertyId p) {
  switch (p) {
    case PropertyId::kPlain:
      return "plain";
    case PropertyId::kInduced:
      return "induced";
    case PropertyId::kUniquelyRestricted:
      return "ur";
    case PropertyId::kConnected:
      return "connected";
    case PropertyId::kIsolateFree:
      return "isolate-free";
    case PropertyId::kDisconnected:
      return "disconnected";
    case PropertyId::kAcyclic:
      return "acyclic";
    case PropertyId::kIndependent:
      return "independent";
    case PropertyId::kBipartite:
      return "bipartite";
    case PropertyId::kOnbr:
      return "onbr";
    case PropertyId::kCnbr:
      return "cnbr";
    case PropertyId::kVertexIrredundant:
      return "vertex-irredundant";
    case PropertyId::kEdgeIrredundant:
      return "edge-irredundant";
  }
  return "?";
}

std::optional<PropertyId> parse_property(std::string_view name) {
  for (PropertyId p : kAllProperties) {
    if (property_name(p) == name) return p;
  }
  if (name == "strong") return PropertyId::kInduced;
  if (name == "uniquely-restricted") return PropertyId::kUniquelyRestricted;
  return std::nullopt;
}

BoundFunction::BoundFunction(const Graph& g, std::vector<std::size_t> bounds)
    : bounds_(std::move(bounds)) {
  if (bounds_.size() != g.num_vertices()) {
    throw Error(ErrorKind::kInvalidArgument, "bound function size does not match graph");
  }
  for (Vertex v = 0; v < bounds_.size(); ++v) {
    if (bounds_[v] > g.degree(v)) {
      throw Error(ErrorKind::kInvalidArgument,
                  "b(" + g.label(v) + ") = " + std::to_string(bounds_[v]) + " exceeds degree " +
                      std::to_string(g.degree(v)));
    }
  }
}

BoundFunction BoundFunction::capped_degree(const Graph& g, std::size_t cap) {
  std::vector<std::size_t> b(g.num_vertices());
  for (Vertex v = 0; v < b.size(); ++v) b[v] = std::min(cap, g.degree(v));
  return BoundFunction(g, std::move(b));
}

}  // namespace pmatch
