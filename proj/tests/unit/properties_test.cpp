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

#include <gtest/gtest.h>

#include <numeric>
#include <unordered_map>

#include "pmatch/corpus.hpp"
#include "pmatch/error.hpp"
#include "pmatch/generators.hpp"
#include "pmatch/oracle.hpp"

namespace pmatch {
namespace {

// ---------------------------------------------------------------------------
// Direct transcriptions of the definitions, written against adjacency
// queries only. They share no code with properties.cpp.

struct Naive {
  const Graph& g;
  const Matching& m;

  std::vector<Vertex> sat() const { return m.saturated(); }
  bool in_s(Vertex v) const { return m.is_saturated(v); }

  std::vector<Edge> subgraph_edges() const {
    std::vector<Edge> out;
    for (const Edge& e : g.edges()) {
      if (in_s(e.u) && in_s(e.v)) out.push_back(e);
    }
    return out;
  }

  std::size_t subgraph_components() const {
    std::vector<Vertex> parent(g.num_vertices());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](Vertex x) {
      while (parent[x] != x) x = parent[x];
      return x;
    };
    std::size_t count = sat().size();
    for (const Edge& e : subgraph_edges()) {
      Vertex a = find(e.u), b = find(e.v);
      if (a != b) {
        parent[a] = b;
        --count;
      }
    }
    return count;
  }

  bool induced() const { return subgraph_edges().size() == m.size(); }
  bool acyclic() const { return subgraph_edges().size() + subgraph_components() == sat().size(); }
  bool connected() const { return subgraph_components() <= 1; }
  bool disconnected() const { return m.size() <= 1 || subgraph_components() >= 2; }

  // |M| <= 1, or no component of <M> is a single edge: some saturated vertex
  // has a neighbor in S besides its mate, for each matched pair.
  bool isolate_free() const {
    if (m.size() <= 1) return true;
    for (Vertex v : sat()) {
      Vertex mate = m.mate(v);
      bool extra = false;
      for (Vertex w : sat()) {
        if (w != mate && w != v) extra = extra || g.has_edge(v, w) || g.has_edge(mate, w);
      }
      if (!extra) return false;
    }
    return true;
  }

  bool closed_adj(Vertex v, Vertex x) const { return v == x || g.has_edge(v, x); }

  bool nbr_adjacent(EdgeId a, EdgeId b, bool closed) const {
    const Edge& e = g.edge(a);
    const Edge& f = g.edge(b);
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      auto in = [&](Vertex x) { return closed ? closed_adj(v, x) : g.has_edge(v, x); };
      if (in(e.u) && in(e.v) && in(f.u) && in(f.v)) return true;
    }
    return false;
  }

  bool nbr_matching(bool closed) const {
    for (EdgeId a : m.edges()) {
      for (EdgeId b : m.edges()) {
        if (a < b && nbr_adjacent(a, b, closed)) return false;
      }
    }
    return true;
  }

  // w in N[u] - N[S - {u}], w outside S.
  bool external_private(Vertex u) const {
    for (Vertex w = 0; w < g.num_vertices(); ++w) {
      if (in_s(w) || !g.has_edge(u, w)) continue;
      bool private_to_u = true;
      for (Vertex s : sat()) {
        if (s != u && closed_adj(s, w)) private_to_u = false;
      }
      if (private_to_u) return true;
    }
    return false;
  }

  bool vertex_irredundant() const {
    for (EdgeId e : m.edges()) {
      if (!external_private(g.edge(e).u) && !external_private(g.edge(e).v)) return false;
    }
    return true;
  }

  bool edge_irredundant() const {
    for (EdgeId e : m.edges()) {
      bool found = false;
      for (EdgeId f = 0; f < g.num_edges() && !found; ++f) {
        if (m.contains(f) || !g.edge(f).shares_vertex(g.edge(e))) continue;
        bool clean = true;
        for (EdgeId o : m.edges()) {
          if (o != e && g.edge(f).shares_vertex(g.edge(o))) clean = false;
        }
        found = clean;
      }
      if (!found) return false;
    }
    return true;
  }

  // Orientation search over all 2^|M| tail choices.
  bool orientable(bool both) const {
    const auto& es = m.edges();
    for (std::uint32_t mask = 0; mask < (1u << es.size()); ++mask) {
      std::vector<Vertex> x, y;
      for (std::size_t i = 0; i < es.size(); ++i) {
        const Edge& e = g.edge(es[i]);
        x.push_back((mask >> i) & 1 ? e.u : e.v);
        y.push_back((mask >> i) & 1 ? e.v : e.u);
      }
      auto independent = [&](const std::vector<Vertex>& s) {
        for (Vertex a : s) {
          for (Vertex b : s) {
            if (g.has_edge(a, b)) return false;
          }
        }
        return true;
      };
      if (independent(x) && (!both || independent(y))) return true;
    }
    return false;
  }

  bool holds(PropertyId p) const {
    switch (p) {
      case PropertyId::kPlain:
        return true;
      case PropertyId::kInduced:
        return induced();
      case PropertyId::kUniquelyRestricted:
        return oracle_perfect_matchings(induced_subgraph(g, sat()).graph).size() <= 1;
      case PropertyId::kConnected:
        return connected();
      case PropertyId::kIsolateFree:
        return isolate_free();
      case PropertyId::kDisconnected:
        return disconnected();
      case PropertyId::kAcyclic:
        return acyclic();
      case PropertyId::kIndependent:
        return orientable(false);
      case PropertyId::kBipartite:
        return orientable(true);
      case PropertyId::kOnbr:
        return nbr_matching(false);
      case PropertyId::kCnbr:
        return nbr_matching(true);
      case PropertyId::kVertexIrredundant:
        return vertex_irredundant();
      case PropertyId::kEdgeIrredundant:
        return edge_irredundant();
    }
    return false;
  }
};

Matching edges(const Graph& g, std::string_view text) {
  return Matching::from_edges(g, parse_edges(g, text));
}

// ---------------------------------------------------------------------------

TEST(PropertiesTest, MatchesNaiveDefinitionsOnAllSmallGraphs) {
  Corpus c;
  for (std::size_t n = 0; n <= 5; ++n) c.add_all_graphs(n);
  c.add_random(150, 7, 0.45, 700);
  std::size_t checked = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    NamedGraph item = c.at(i);
    Oracle oracle(item.graph);
    for (std::uint32_t mask : oracle.matching_masks()) {
      Matching m = Matching::from_edges(item.graph, oracle.edges_of(mask));
      Naive naive{item.graph, m};
      for (PropertyId p : kAllProperties) {
        ASSERT_EQ(has_property(item.graph, m, p), naive.holds(p))
            << item.id << " {" << format_edges(item.graph, m.edges()) << "} " << property_name(p);
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 100000u);
}

TEST(PropertiesTest, EmptyMatchingHasEveryProperty) {
  Graph g = complete_graph(4);
  for (PropertyId p : kAllProperties) EXPECT_TRUE(has_property(g, Matching::from_edges(g, {}), p));
}

TEST(PropertiesTest, BasicPredicates) {
  Graph p8 = path_graph(8);
  EXPECT_TRUE(is_matching(p8, parse_edges(p8, "0-1,2-3")));
  EXPECT_FALSE(is_matching(p8, parse_edges(p8, "1-2,2-3")));
  EXPECT_TRUE(is_perfect(p8, edges(p8, "0-1,2-3,4-5,6-7")));
  EXPECT_TRUE(is_maximal_matching(p8, edges(p8, "1-2,3-4,5-6")));
  EXPECT_FALSE(is_maximal_matching(p8, edges(p8, "1-2,3-4")));
  EXPECT_THROW(is_matching(p8, std::vector<EdgeId>{9}), Error);
}

TEST(PropertiesTest, HostMismatchThrows) {
  Graph p4 = path_graph(4);
  Matching m = Matching::from_edges(path_graph(5), {0});
  EXPECT_THROW(has_property(p4, m, PropertyId::kInduced), Error);
}

TEST(PropertiesTest, UniquelyRestrictedFigures) {
  FigureFixture l = figure_fixture(Figure::kFig2Left);
  FigureFixture r = figure_fixture(Figure::kFig2Right);
  Matching ml = Matching::from_edges(l.graph, l.drawn_matching);
  Matching mr = Matching::from_edges(r.graph, r.drawn_matching);
  EXPECT_TRUE(is_uniquely_restricted(l.graph, ml));
  EXPECT_TRUE(is_uniquely_restricted_by_count(l.graph, ml));
  EXPECT_FALSE(is_uniquely_restricted(r.graph, mr));
  EXPECT_FALSE(is_uniquely_restricted_by_count(r.graph, mr));
  auto cycle = find_alternating_cycle(r.graph, mr);
  ASSERT_TRUE(cycle.has_value());
  ASSERT_EQ(cycle->size() % 2, 0u);
  for (std::size_t i = 0; i < cycle->size(); ++i) {
    Vertex a = (*cycle)[i], b = (*cycle)[(i + 1) % cycle->size()];
    ASSERT_TRUE(r.graph.has_edge(a, b));
    EXPECT_EQ(mr.mate(a) == b, i % 2 == 0);
  }
}

TEST(PropertiesTest, CountPerfectMatchings) {
  EXPECT_EQ(count_perfect_matchings(complete_graph(4)), 3u);
  EXPECT_EQ(count_perfect_matchings(complete_graph(6)), 15u);
  EXPECT_EQ(count_perfect_matchings(cycle_graph(6)), 2u);
  EXPECT_EQ(count_perfect_matchings(path_graph(5)), 0u);
  EXPECT_EQ(count_perfect_matchings(complete_graph(6), 2), 2u);
  EXPECT_EQ(count_perfect_matchings(Graph(0)), 1u);
}

TEST(PropertiesTest, UrRoutesAgreeOnEveryMatching) {
  Corpus c;
  for (std::size_t n = 0; n <= 6; ++n) c.add_all_graphs(n);
  for (std::size_t i = 0; i < c.size(); ++i) {
    NamedGraph item = c.at(i);
    Oracle oracle(item.graph);
    for (std::uint32_t mask : oracle.matching_masks()) {
      Matching m = Matching::from_edges(item.graph, oracle.edges_of(mask));
      ASSERT_EQ(is_uniquely_restricted(item.graph, m),
                is_uniquely_restricted_by_count(item.graph, m))
          << item.id;
    }
  }
}

TEST(PropertiesTest, ChainInducedAcyclicUr) {
  Corpus c;
  for (std::size_t n = 0; n <= 6; ++n) c.add_all_graphs(n);
  c.add_random(300, 7, 0.5, 1);
  for (std::size_t i = 0; i < c.size(); ++i) {
    NamedGraph item = c.at(i);
    Oracle oracle(item.graph);
    for (std::size_t k = 0; k < oracle.matching_masks().size(); ++k) {
      if (oracle.has(k, PropertyId::kInduced)) ASSERT_TRUE(oracle.has(k, PropertyId::kAcyclic));
      if (oracle.has(k, PropertyId::kAcyclic)) {
        ASSERT_TRUE(oracle.has(k, PropertyId::kUniquelyRestricted));
      }
    }
  }
}

// The hereditary classification drives pruning, so it is checked in both
// directions: no counterexample for the hereditary properties, and at least
// one for each of the others.
TEST(PropertiesTest, HereditaryClassificationIsExact) {
  std::array<bool, kAllProperties.size()> broken{};
  Corpus c;
  for (std::size_t n = 0; n <= 6; ++n) c.add_all_graphs(n);
  for (std::size_t i = 0; i < c.size(); ++i) {
    NamedGraph item = c.at(i);
    Oracle oracle(item.graph);
    const auto& masks = oracle.matching_masks();
    std::unordered_map<std::uint32_t, std::size_t> index;
    for (std::size_t k = 0; k < masks.size(); ++k) index[masks[k]] = k;
    for (std::size_t k = 0; k < masks.size(); ++k) {
      for (std::size_t pi = 0; pi < kAllProperties.size(); ++pi) {
        if (broken[pi] || !oracle.has(k, kAllProperties[pi])) continue;
        for (std::uint32_t rest = masks[k]; rest; rest &= rest - 1) {
          std::size_t sub = index.at(masks[k] & ~(rest & -rest));
          if (!oracle.has(sub, kAllProperties[pi])) {
            broken[pi] = true;
            break;
          }
        }
      }
    }
  }
  for (std::size_t pi = 0; pi < kAllProperties.size(); ++pi) {
    EXPECT_EQ(is_hereditary(kAllProperties[pi]), !broken[pi]) << property_name(kAllProperties[pi]);
  }
}

// A bipartite orientation exists exactly when <M> is bipartite.
TEST(PropertiesTest, BipartiteOrientationMatchesBipartiteSubgraph) {
  Corpus c;
  for (std::size_t n = 0; n <= 6; ++n) c.add_all_graphs(n);
  for (std::size_t i = 0; i < c.size(); ++i) {
    NamedGraph item = c.at(i);
    Oracle oracle(item.graph);
    for (std::uint32_t mask : oracle.matching_masks()) {
      Matching m = Matching::from_edges(item.graph, oracle.edges_of(mask));
      ASSERT_EQ(find_bipartite_orientation(item.graph, m).has_value(),
                is_bipartite(matching_subgraph(item.graph, m).graph))
          << item.id;
    }
  }
}

TEST(PropertiesTest, MaximalPlainEqualsMaximalMatching) {
  Corpus c;
  for (std::size_t n = 0; n <= 5; ++n) c.add_all_graphs(n);
  for (std::size_t i = 0; i < c.size(); ++i) {
    NamedGraph item = c.at(i);
    Oracle oracle(item.graph);
    for (std::uint32_t mask : oracle.matching_masks()) {
      Matching m = Matching::from_edges(item.graph, oracle.edges_of(mask));
      ASSERT_EQ(is_maximal_p_matching(item.graph, m, PropertyId::kPlain),
                is_maximal_matching(item.graph, m));
    }
  }
}

TEST(PropertiesTest, MaximalPExamples) {
  Graph p8 = path_graph(8);
  EXPECT_TRUE(is_maximal_p_matching(p8, edges(p8, "1-2,3-4,5-6"), PropertyId::kPlain));
  EXPECT_TRUE(is_maximal_p_matching(p8, edges(p8, "0-1,2-3,4-5,6-7"), PropertyId::kPlain));
  EXPECT_FALSE(is_maximal_p_matching(p8, edges(p8, "3-4"), PropertyId::kInduced));
  EXPECT_THROW(is_maximal_p_matching(p8, edges(p8, "0-1,2-3"), PropertyId::kInduced), Error);
}

TEST(PropertiesTest, SingleEdgeIsConnectedAndDisconnected) {
  Graph k2 = complete_graph(2);
  Matching m = Matching::from_edges(k2, {0});
  EXPECT_TRUE(is_connected_property(k2, m));
  EXPECT_TRUE(is_disconnected_property(k2, m));
  EXPECT_TRUE(is_isolate_free(k2, m));
}

TEST(PropertiesTest, IsolateFreeExamples) {
  Graph p8 = path_graph(8);
  EXPECT_FALSE(is_isolate_free(p8, edges(p8, "0-1,3-4")));  // two K2 components
  EXPECT_TRUE(is_isolate_free(p8, edges(p8, "0-1,2-3")));   // <M> = P4
  Graph c4 = cycle_graph(4);
  EXPECT_TRUE(is_isolate_free(c4, edges(c4, "0-1,2-3")));
  // P6 is isolate-free; dropping its middle edge leaves 2K2.
  EXPECT_TRUE(is_isolate_free(p8, edges(p8, "0-1,2-3,4-5")));
  EXPECT_FALSE(is_hereditary(PropertyId::kIsolateFree));
}

TEST(PropertiesTest, VertexIrredundantExamples) {
  Graph p4 = path_graph(4);
  EXPECT_TRUE(is_vertex_irredundant(p4, edges(p4, "1-2")));
  EXPECT_EQ(external_private_neighbor(p4, edges(p4, "1-2"), 1), Vertex{0});
  Graph k2 = complete_graph(2);
  EXPECT_FALSE(is_vertex_irredundant(k2, Matching::from_edges(k2, {0})));
  Graph p8 = path_graph(8);
  Matching m = edges(p8, "1-2,3-4,5-6");
  EXPECT_EQ(is_vertex_irredundant(p8, m), (Naive{p8, m}.vertex_irredundant()));
  EXPECT_EQ(find_vertex_redundant_edge(p8, m), p8.edge_id(3, 4));
}

TEST(PropertiesTest, EdgeIrredundantExamples) {
  Graph p4 = path_graph(4);
  EXPECT_TRUE(is_edge_irredundant(p4, edges(p4, "1-2")));
  EXPECT_FALSE(is_edge_irredundant(p4, edges(p4, "0-1,2-3")));
  Graph p6 = path_graph(6);
  Matching m = edges(p6, "0-1,4-5");
  EXPECT_TRUE(is_edge_irredundant(p6, m));
  EXPECT_EQ(edge_irredundance_witness(p6, m, p6.edge_id(0, 1)), p6.edge_id(1, 2));
  Graph k2 = complete_graph(2);
  EXPECT_FALSE(is_edge_irredundant(k2, Matching::from_edges(k2, {0})));
}

TEST(PropertiesTest, NeighborhoodAdjacencyFigures) {
  FigureFixture f5 = figure_fixture(Figure::kFig5);
  auto [a5, b5] = f5.highlighted_edges;
  EXPECT_TRUE(are_cnbr_adjacent(f5.graph, a5, b5));
  EXPECT_FALSE(are_onbr_adjacent(f5.graph, a5, b5));
  FigureFixture f6 = figure_fixture(Figure::kFig6);
  auto [a6, b6] = f6.highlighted_edges;
  EXPECT_TRUE(are_onbr_adjacent(f6.graph, a6, b6));
  EXPECT_TRUE(are_cnbr_adjacent(f6.graph, a6, b6));
  Graph p4 = path_graph(4);
  EXPECT_TRUE(is_onbr_matching(p4, edges(p4, "0-1,2-3")));
  Graph k5 = complete_graph(5);
  EXPECT_TRUE(are_onbr_adjacent(k5, k5.edge_id(0, 1), k5.edge_id(2, 3)));
  Matching m = edges(k5, "0-1,2-3");
  EXPECT_EQ(find_onbr_conflict(k5, m), std::make_pair(k5.edge_id(0, 1), k5.edge_id(2, 3)));
}

TEST(PropertiesTest, EdgesSharingAVertexAreCnbrAdjacent) {
  Graph k4 = complete_graph(4);
  for (EdgeId a = 0; a < k4.num_edges(); ++a) {
    for (EdgeId b = 0; b < k4.num_edges(); ++b) {
      if (a != b && k4.edge(a).shares_vertex(k4.edge(b))) {
        EXPECT_TRUE(are_cnbr_adjacent(k4, a, b));
      }
    }
  }
}

TEST(PropertiesTest, OrientationFigures) {
  FigureFixture f3 = figure_fixture(Figure::kFig3);
  Matching m3 = Matching::from_edges(f3.graph, f3.drawn_matching);
  auto o3 = find_independent_orientation(f3.graph, m3);
  ASSERT_TRUE(o3.has_value());
  EXPECT_TRUE(orients(f3.graph, m3, *o3));
  FigureFixture f4 = figure_fixture(Figure::kFig4);
  Matching m4 = Matching::from_edges(f4.graph, f4.drawn_matching);
  EXPECT_TRUE(find_bipartite_orientation(f4.graph, m4).has_value());
  Graph k4 = complete_graph(4);
  EXPECT_FALSE(find_independent_orientation(k4, edges(k4, "0-1,2-3")).has_value());
}

TEST(PropertiesTest, Separating) {
  Graph k4 = complete_graph(4);
  EXPECT_FALSE(is_separating(k4, edges(k4, "0-1,2-3")));
  Graph k2 = complete_graph(2);
  EXPECT_TRUE(is_separating(k2, Matching::from_edges(k2, {0})));
}

TEST(PropertiesTest, TotalMatchings) {
  Graph p3 = path_graph(3);
  MixedSet t{{2}, {p3.edge_id(0, 1)}};
  EXPECT_TRUE(is_total_matching(p3, t));
  EXPECT_TRUE(is_maximal_total_matching(p3, t));
  Graph k2 = complete_graph(2);
  EXPECT_FALSE(is_total_matching(k2, MixedSet{{0, 1}, {}}));
  EXPECT_FALSE(is_total_matching(k2, MixedSet{{0}, {0}}));
  Graph c6 = cycle_graph(6);
  Matching pm = edges(c6, "0-1,2-3,4-5");
  MixedSet all{{}, pm.edges()};
  EXPECT_TRUE(is_maximal_total_matching(c6, all));
  EXPECT_FALSE(is_maximal_total_matching(p3, MixedSet{{0}, {}}));
  EXPECT_THROW(is_total_matching(p3, MixedSet{{5}, {}}), Error);
}

TEST(PropertiesTest, BMatchings) {
  Graph star = complete_bipartite_graph(1, 3);
  std::vector<EdgeId> all = {0, 1, 2};
  EXPECT_FALSE(is_b_matching(star, all, BoundFunction(star, {2, 1, 1, 1})));
  Graph p4 = path_graph(4);
  std::vector<EdgeId> two = {0, 1};
  EXPECT_TRUE(is_b_matching(p4, two, BoundFunction::capped_degree(p4, 2)));
  EXPECT_FALSE(is_b_matching(p4, two, BoundFunction::capped_degree(p4, 1)));
}

}  // namespace
}  // namespace pmatch
