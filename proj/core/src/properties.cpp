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

#include "pmatch/properties.hpp"

#include <algorithm>
#include <string>

#include "pmatch/blossom.hpp"
#include "pmatch/error.hpp"

namespace pmatch {
namespace {

void check_host(const Graph& g, const Matching& m) {
  if (m.host_vertices() != g.num_vertices()) {
    throw Error(ErrorKind::kInvalidArgument, "matching belongs to a graph of order " +
                                                 std::to_string(m.host_vertices()) + ", not " +
                                                 std::to_string(g.num_vertices()));
  }
}

// <M> as local adjacency lists; local vertex i is host vertex verts[i].
struct Span {
  std::vector<Vertex> verts;
  std::vector<std::vector<Vertex>> adj;
  std::size_t num_edges = 0;
};

Span build_span(const Graph& g, const Matching& m) {
  Span s;
  s.verts = m.saturated();
  std::vector<Vertex> local(g.num_vertices(), kNoVertex);
  for (Vertex i = 0; i < s.verts.size(); ++i) local[s.verts[i]] = i;
  s.adj.resize(s.verts.size());
  for (Vertex i = 0; i < s.verts.size(); ++i) {
    for (Vertex w : g.neighbors(s.verts[i])) {
      if (local[w] != kNoVertex) s.adj[i].push_back(local[w]);
    }
    s.num_edges += s.adj[i].size();
  }
  s.num_edges /= 2;
  return s;
}

std::size_t span_components(const Span& s, std::vector<std::size_t>* sizes = nullptr) {
  std::vector<char> seen(s.verts.size(), 0);
  std::vector<Vertex> stack;
  std::size_t count = 0;
  for (Vertex r = 0; r < s.verts.size(); ++r) {
    if (seen[r]) continue;
    ++count;
    std::size_t size = 0;
    seen[r] = 1;
    stack.push_back(r);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      ++size;
      for (Vertex w : s.adj[v]) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    if (sizes) sizes->push_back(size);
  }
  return count;
}

std::size_t count_perfect_rec(const std::vector<std::vector<Vertex>>& adj, std::vector<char>& used,
                              std::size_t limit) {
  Vertex first = 0;
  while (first < used.size() && used[first]) ++first;
  if (first == used.size()) return 1;
  used[first] = 1;
  std::size_t total = 0;
  for (Vertex w : adj[first]) {
    if (used[w]) continue;
    used[w] = 1;
    total += count_perfect_rec(adj, used, limit == 0 ? 0 : limit - total);
    used[w] = 0;
    if (limit != 0 && total >= limit) break;
  }
  used[first] = 0;
  return total;
}

bool edges_nbr_adjacent(const Graph& g, const Edge& a, const Edge& b, bool closed) {
  const Vertex ends[4] = {a.u, a.v, b.u, b.v};
  auto sees_all = [&](Vertex v) {
    for (Vertex x : ends) {
      if (x == v) {
        if (!closed) return false;
      } else if (!g.has_edge(v, x)) {
        return false;
      }
    }
    return true;
  };
  if (closed && sees_all(a.u)) return true;
  for (Vertex v : g.neighbors(a.u)) {
    if (sees_all(v)) return true;
  }
  return false;
}

std::optional<std::pair<EdgeId, EdgeId>> find_nbr_conflict(const Graph& g, const Matching& m,
                                                           bool closed) {
  check_host(g, m);
  const EdgeSet& edges = m.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (edges_nbr_adjacent(g, g.edge(edges[i]), g.edge(edges[j]), closed)) {
        return std::make_pair(edges[i], edges[j]);
      }
    }
  }
  return std::nullopt;
}

}  // namespace

bool is_matching(const Graph& g, std::span<const EdgeId> edges) {
  return !find_shared_vertex(g, edges).has_value();
}

bool is_maximal_matching(const Graph& g, const Matching& m) {
  check_host(g, m);
  for (const Edge& e : g.edges()) {
    if (!m.is_saturated(e.u) && !m.is_saturated(e.v)) return false;
  }
  return true;
}

bool is_perfect(const Graph& g, const Matching& m) {
  check_host(g, m);
  return m.saturated().size() == g.num_vertices();
}

InducedSubgraph matching_subgraph(const Graph& g, const Matching& m) {
  check_host(g, m);
  return induced_subgraph(g, m.saturated());
}

bool is_induced(const Graph& g, const Matching& m) {
  check_host(g, m);
  for (EdgeId id : m.edges()) {
    const Edge& e = g.edge(id);
    for (Vertex end : {e.u, e.v}) {
      for (Vertex w : g.neighbors(end)) {
        if (w != e.other(end) && m.is_saturated(w)) return false;
      }
    }
  }
  return true;
}

std::optional<std::vector<Vertex>> find_alternating_cycle(const Graph& g, const Matching& m) {
  check_host(g, m);
  if (m.size() < 2) return std::nullopt;
  Span s = build_span(g, m);
  std::vector<Vertex> local(g.num_vertices(), kNoVertex);
  for (Vertex i = 0; i < s.verts.size(); ++i) local[s.verts[i]] = i;
  std::vector<Vertex> base_mates(s.verts.size());
  for (Vertex i = 0; i < s.verts.size(); ++i) base_mates[i] = local[m.mate(s.verts[i])];

  // An alternating cycle through the matched edge ab exists iff <M> - ab,
  // matched by M - ab, has an augmenting path from a to b.
  std::vector<Edge> span_edges;
  for (Vertex i = 0; i < s.verts.size(); ++i) {
    for (Vertex j : s.adj[i]) {
      if (i < j) span_edges.push_back({i, j});
    }
  }
  for (EdgeId id : m.edges()) {
    const Edge& host = g.edge(id);
    const Vertex a = local[host.u];
    const Vertex b = local[host.v];
    std::vector<Edge> without;
    without.reserve(span_edges.size());
    for (const Edge& e : span_edges) {
      if (!(e.u == a && e.v == b)) without.push_back(e);
    }
    BlossomMatcher matcher(s.verts.size(), without);
    std::vector<Vertex> mates = base_mates;
    mates[a] = mates[b] = kNoVertex;
    matcher.set_mates(mates);
    if (!matcher.augment_from(a)) continue;
    const std::vector<Vertex>& after = matcher.mates();
    std::vector<Vertex> cycle;
    Vertex v = a;
    do {
      cycle.push_back(s.verts[v]);
      cycle.push_back(s.verts[base_mates[v]]);
      v = after[base_mates[v]];
    } while (v != a);
    return cycle;
  }
  return std::nullopt;
}

bool is_uniquely_restricted(const Graph& g, const Matching& m) {
  return !find_alternating_cycle(g, m).has_value();
}

std::size_t count_perfect_matchings(const Graph& h, std::size_t limit) {
  std::vector<std::vector<Vertex>> adj(h.num_vertices());
  for (Vertex v = 0; v < h.num_vertices(); ++v) {
    adj[v].assign(h.neighbors(v).begin(), h.neighbors(v).end());
  }
  std::vector<char> used(h.num_vertices(), 0);
  return count_perfect_rec(adj, used, limit);
}

bool is_uniquely_restricted_by_count(const Graph& g, const Matching& m) {
  check_host(g, m);
  Span s = build_span(g, m);
  std::vector<char> used(s.verts.size(), 0);
  return count_perfect_rec(s.adj, used, 2) == 1;
}

bool is_connected_property(const Graph& g, const Matching& m) {
  check_host(g, m);
  if (m.empty()) return true;
  return span_components(build_span(g, m)) == 1;
}

bool is_isolate_free(const Graph& g, const Matching& m) {
  check_host(g, m);
  if (m.size() <= 1) return true;
  std::vector<std::size_t> sizes;
  span_components(build_span(g, m), &sizes);
  return std::find(sizes.begin(), sizes.end(), std::size_t{2}) == sizes.end();
}

bool is_disconnected_property(const Graph& g, const Matching& m) {
  check_host(g, m);
  if (m.size() <= 1) return true;
  return span_components(build_span(g, m)) >= 2;
}

bool is_acyclic_property(const Graph& g, const Matching& m) {
  check_host(g, m);
  Span s = build_span(g, m);
  return s.num_edges + span_components(s) == s.verts.size();
}

bool are_cnbr_adjacent(const Graph& g, EdgeId e1, EdgeId e2) {
  check_edge(g, e1);
  check_edge(g, e2);
  return edges_nbr_adjacent(g, g.edge(e1), g.edge(e2), true);
}

bool are_onbr_adjacent(const Graph& g, EdgeId e1, EdgeId e2) {
  check_edge(g, e1);
  check_edge(g, e2);
  return edges_nbr_adjacent(g, g.edge(e1), g.edge(e2), false);
}

std::optional<std::pair<EdgeId, EdgeId>> find_cnbr_conflict(const Graph& g, const Matching& m) {
  return find_nbr_conflict(g, m, true);
}

std::optional<std::pair<EdgeId, EdgeId>> find_onbr_conflict(const Graph& g, const Matching& m) {
  return find_nbr_conflict(g, m, false);
}

bool is_cnbr_matching(const Graph& g, const Matching& m) { return !find_cnbr_conflict(g, m); }
bool is_onbr_matching(const Graph& g, const Matching& m) { return !find_onbr_conflict(g, m); }

std::optional<Vertex> external_private_neighbor(const Graph& g, const Matching& m, Vertex u) {
  check_host(g, m);
  check_vertex(g, u);
  if (!m.is_saturated(u)) return std::nullopt;
  for (Vertex w : g.neighbors(u)) {
    if (m.is_saturated(w)) continue;
    bool private_to_u = true;
    for (Vertex x : g.neighbors(w)) {
      if (x != u && m.is_saturated(x)) {
        private_to_u = false;
        break;
      }
    }
    if (private_to_u) return w;
  }
  return std::nullopt;
}

std::optional<EdgeId> find_vertex_redundant_edge(const Graph& g, const Matching& m) {
  check_host(g, m);
  for (EdgeId id : m.edges()) {
    const Edge& e = g.edge(id);
    if (!external_private_neighbor(g, m, e.u) && !external_private_neighbor(g, m, e.v)) {
      return id;
    }
  }
  return std::nullopt;
}

bool is_vertex_irredundant(const Graph& g, const Matching& m) {
  return !find_vertex_redundant_edge(g, m).has_value();
}

std::optional<EdgeId> edge_irredundance_witness(const Graph& g, const Matching& m, EdgeId id) {
  check_host(g, m);
  check_edge(g, id);
  const Edge& e = g.edge(id);
  // e' = xy with x on e; y must avoid every matched edge, so y is unsaturated.
  for (Vertex x : {e.u, e.v}) {
    std::span<const Vertex> nbrs = g.neighbors(x);
    std::span<const EdgeId> inc = g.incident_edges(x);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      if (!m.is_saturated(nbrs[i])) return inc[i];
    }
  }
  return std::nullopt;
}

std::optional<EdgeId> find_edge_redundant_edge(const Graph& g, const Matching& m) {
  check_host(g, m);
  for (EdgeId id : m.edges()) {
    if (!edge_irredundance_witness(g, m, id)) return id;
  }
  return std::nullopt;
}

bool is_edge_irredundant(const Graph& g, const Matching& m) {
  return !find_edge_redundant_edge(g, m).has_value();
}

bool is_separating(const Graph& g, const Matching& m) {
  check_host(g, m);
  return is_edge_cut(g, m.edges());
}

bool is_total_matching(const Graph& g, const MixedSet& t) {
  for (Vertex v : t.vertices) check_vertex(g, v);
  for (EdgeId e : t.edges) check_edge(g, e);
  std::vector<char> taken(g.num_vertices(), 0);
  for (Vertex v : t.vertices) {
    if (taken[v]) return false;
    taken[v] = 1;
  }
  for (Vertex v : t.vertices) {
    for (Vertex w : g.neighbors(v)) {
      if (taken[w]) return false;
    }
  }
  for (EdgeId id : t.edges) {
    const Edge& e = g.edge(id);
    if (taken[e.u] || taken[e.v]) return false;
    taken[e.u] = taken[e.v] = 1;
  }
  return true;
}

bool is_maximal_total_matching(const Graph& g, const MixedSet& t) {
  if (!is_total_matching(g, t)) return false;
  std::vector<char> member(g.num_vertices(), 0);
  std::vector<char> covered(g.num_vertices(), 0);
  for (Vertex v : t.vertices) member[v] = 1;
  for (EdgeId id : t.edges) covered[g.edge(id).u] = covered[g.edge(id).v] = 1;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (member[v] || covered[v]) continue;
    bool free = true;
    for (Vertex w : g.neighbors(v)) free = free && !member[w];
    if (free) return false;
  }
  for (const Edge& e : g.edges()) {
    const bool blocked = member[e.u] || member[e.v] || covered[e.u] || covered[e.v];
    if (!blocked) return false;
  }
  return true;
}

bool is_b_matching(const Graph& g, std::span<const EdgeId> edges, const BoundFunction& b) {
  if (b.values().size() != g.num_vertices()) {
    throw Error(ErrorKind::kInvalidArgument, "bound function size does not match graph");
  }
  EdgeSet set = make_edge_set(g, std::vector<EdgeId>(edges.begin(), edges.end()));
  std::vector<std::size_t> degree(g.num_vertices(), 0);
  for (EdgeId id : set) {
    ++degree[g.edge(id).u];
    ++degree[g.edge(id).v];
  }
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (degree[v] > b(v)) return false;
  }
  return true;
}

bool has_property(const Graph& g, const Matching& m, PropertyId p) {
  check_host(g, m);
  if (m.empty()) return true;
  switch (p) {
    case PropertyId::kPlain:
      return true;
    case PropertyId::kInduced:
      return is_induced(g, m);
    case PropertyId::kUniquelyRestricted:
      return is_uniquely_restricted(g, m);
    case PropertyId::kConnected:
      return is_connected_property(g, m);
    case PropertyId::kIsolateFree:
      return is_isolate_free(g, m);
    case PropertyId::kDisconnected:
      return is_disconnected_property(g, m);
    case PropertyId::kAcyclic:
      return is_acyclic_property(g, m);
    case PropertyId::kIndependent:
      return find_independent_orientation(g, m).has_value();
    case PropertyId::kBipartite:
      return find_bipartite_orientation(g, m).has_value();
    case PropertyId::kOnbr:
      return is_onbr_matching(g, m);
    case PropertyId::kCnbr:
      return is_cnbr_matching(g, m);
    case PropertyId::kVertexIrredundant:
      return is_vertex_irredundant(g, m);
    case PropertyId::kEdgeIrredundant:
      return is_edge_irredundant(g, m);
  }
  return false;
}

bool is_maximal_p_matching(const Graph& g, const Matching& m, PropertyId p) {
  if (!has_property(g, m, p)) {
    throw Error(ErrorKind::kInvalidArgument,
                "matching is not a " + std::string(property_name(p)) + " matching");
  }
  for (EdgeId id = 0; id < g.num_edges(); ++id) {
    const Edge& e = g.edge(id);
    if (m.is_saturated(e.u) || m.is_saturated(e.v)) continue;
    if (has_property(g, m.with_edge(g, id), p)) return false;
  }
  return true;
}

bool is_hereditary(PropertyId p) {
  switch (p) {
    case PropertyId::kConnected:
    case PropertyId::kIsolateFree:
    case PropertyId::kDisconnected:
      return false;
    default:
      return true;
  }
}

}  // namespace pmatch
