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

#include <gtest/gtest.h>

#include "pmatch/error.hpp"
#include "pmatch/generators.hpp"

namespace pmatch {
namespace {

TEST(MatchingTest, FromEdges) {
  Graph g = path_graph(4);
  Matching m = Matching::from_edges(g, {2, 0});
  EXPECT_EQ(m.edges(), (EdgeSet{0, 2}));
  EXPECT_EQ(m.saturated(), (VertexSet{0, 1, 2, 3}));
  EXPECT_EQ(m.mate(1), 0u);
  EXPECT_TRUE(m.contains(2));
  EXPECT_FALSE(m.contains(1));
  EXPECT_THROW(Matching::from_edges(g, {0, 1}), Error);
  EXPECT_THROW(Matching::from_edges(g, {3}), Error);
  EXPECT_FALSE(Matching::try_from_edges(g, {1, 2}).has_value());
}

TEST(MatchingTest, FromMatesAndWithEdge) {
  Graph g = path_graph(4);
  Matching m = Matching::from_mates(g, {kNoVertex, 2, 1, kNoVertex});
  EXPECT_EQ(m.edges(), (EdgeSet{1}));
  EXPECT_THROW(m.with_edge(g, 0), Error);
  Matching empty;
  EXPECT_TRUE(empty.empty());
  Matching one = Matching::from_edges(g, {}).with_edge(g, 0);
  EXPECT_EQ(one.size(), 1u);
}

TEST(MatchingTest, SharedVertex) {
  Graph g = path_graph(8);
  EdgeSet bad = parse_edges(g, "1-2,2-3");
  EXPECT_EQ(find_shared_vertex(g, bad), Vertex{2});
  EdgeSet good = parse_edges(g, "0-1 2-3");
  EXPECT_FALSE(find_shared_vertex(g, good).has_value());
}

TEST(MatchingTest, FormatAndParseRoundTrip) {
  Graph g = figure_fixture(Figure::kFig3).graph;
  EdgeSet e = figure_fixture(Figure::kFig3).drawn_matching;
  std::string text = format_edges(g, e);
  EXPECT_EQ(text, "1-1',2-2',3-3',4-4'");
  EXPECT_EQ(parse_edges(g, text), e);
  EXPECT_EQ(parse_edges(g, "1'-1"), (EdgeSet{g.edge_id(0, 4)}));
  EXPECT_THROW(parse_edges(g, "1-2"), Error);
  EXPECT_THROW(parse_edges(g, "1-9"), Error);
  EXPECT_THROW(parse_edges(g, "1"), Error);
  EXPECT_THROW(parse_edges(g, "1-1',1'-1"), Error);
}

TEST(MatchingTest, OrientationHelpers) {
  FigureFixture f = figure_fixture(Figure::kFig3);
  Matching m = Matching::from_edges(f.graph, f.drawn_matching);
  Orientation o{f.drawn_orientation};
  EXPECT_TRUE(orients(f.graph, m, o));
  EXPECT_EQ(o.tails(), (VertexSet{0, 1, 3, 6}));
  EXPECT_EQ(format_orientation(f.graph, o), "1>1',2>2',3'>3,4>4'");
  Orientation partial{{{0, 4}}};
  EXPECT_FALSE(orients(f.graph, m, partial));
}

TEST(MatchingTest, PropertyNames) {
  for (PropertyId p : kAllProperties) EXPECT_EQ(parse_property(property_name(p)), p);
  EXPECT_EQ(property_name(PropertyId::kUniquelyRestricted), "ur");
  EXPECT_EQ(parse_property("strong"), PropertyId::kInduced);
  EXPECT_FALSE(parse_property("sturdy").has_value());
}

TEST(MatchingTest, BoundFunction) {
  Graph star = complete_bipartite_graph(1, 3);
  BoundFunction b = BoundFunction::table_default(star);
  EXPECT_EQ(b(0), 2u);
  EXPECT_EQ(b(1), 1u);
  EXPECT_THROW(BoundFunction(star, {4, 1, 1, 1}), Error);
  EXPECT_THROW(BoundFunction(star, {1, 1}), Error);
}

}  // namespace
}  // namespace pmatch
