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

#include "pmatch/generators.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "pmatch/error.hpp"
#include "random.hpp"

namespace pmatch {
namespace {

[[noreturn]] void bad_parameter(const std::string& what) {
  throw Error(ErrorKind::kInvalidArgument, what);
}

Graph labeled(const std::vector<std::string>& labels,
              const std::vector<std::pair<std::string, std::string>>& pairs) {
  auto index = [&](const std::string& l) {
    return static_cast<Vertex>(std::find(labels.begin(), labels.end(), l) - labels.begin());
  };
  std::vector<Edge> edges;
  for (const auto& [a, b] : pairs) edges.push_back(make_edge(index(a), index(b)));
  return Graph(labels.size(), std::move(edges), labels);
}

EdgeSet edges_of(const Graph& g, const std::vector<std::pair<Vertex, Vertex>>& pairs) {
  EdgeSet out;
  for (const auto& [a, b] : pairs) out.push_back(g.edge_id(a, b));
  std::sort(out.begin(), out.end());
  return out;
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.push_back({v - 1, v});
  return Graph(n, std::move(edges));
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) bad_parameter("cycle needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.push_back({v - 1, v});
  edges.push_back({0, static_cast<Vertex>(n - 1)});
  return Graph(n, std::move(edges));
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) edges.push_back({a, b});
  }
  return Graph(n, std::move(edges));
}

Graph complete_bipartite_graph(std::size_t a, std::size_t b) {
  std::vector<Edge> edges;
  for (Vertex x = 0; x < a; ++x) {
    for (Vertex y = 0; y < b; ++y) edges.push_back({x, static_cast<Vertex>(a + y)});
  }
  return Graph(a + b, std::move(edges));
}

Graph hypercube_graph(std::size_t dimension) {
  if (dimension > 20) bad_parameter("hypercube dimension must be <= 20");
  const std::size_t n = std::size_t{1} << dimension;
  std::vector<Edge> edges;
  for (Vertex x = 0; x < n; ++x) {
    for (std::size_t i = 0; i < dimension; ++i) {
      Vertex y = x ^ (Vertex{1} << i);
      if (x < y) edges.push_back({x, y});
    }
  }
  return Graph(n, std::move(edges));
}

Graph empty_graph(std::size_t n) { return Graph(n); }

Graph random_gnp(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) bad_parameter("p must lie in [0, 1]");
  detail::Rng rng(seed);
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (rng.chance(p)) edges.push_back({a, b});
    }
  }
  return Graph(n, std::move(edges));
}

Graph random_tree(std::size_t n, std::uint64_t seed) {
  detail::Rng rng(seed);
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
  std::vector<Edge> edges;
  edges.reserve(n > 0 ? n - 1 : 0);
  for (std::size_t i = 1; i < n; ++i) {
    edges.push_back(make_edge(order[i], order[rng.below(i)]));
  }
  return Graph(n, std::move(edges));
}

Graph random_odd_cactus(std::size_t blocks, std::uint64_t seed) {
  detail::Rng rng(seed);
  std::size_t n = 1;
  std::vector<Edge> edges;
  for (std::size_t b = 0; b < blocks; ++b) {
    Vertex anchor = static_cast<Vertex>(rng.below(n));
    if (rng.chance(0.5)) {
      edges.push_back(make_edge(anchor, static_cast<Vertex>(n++)));
      continue;
    }
    const std::size_t length = 3 + 2 * rng.below(3);
    Vertex prev = anchor;
    for (std::size_t i = 1; i < length; ++i) {
      Vertex next = static_cast<Vertex>(n++);
      edges.push_back(make_edge(prev, next));
      prev = next;
    }
    edges.push_back(make_edge(prev, anchor));
  }
  return Graph(n, std::move(edges));
}

Graph graph_from_edge_mask(std::size_t n, std::uint64_t mask) {
  if (n > 11) bad_parameter("edge-mask graphs need n <= 11");
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b, ++bit) {
      if ((mask >> bit) & 1) edges.push_back({a, b});
    }
  }
  return Graph(n, std::move(edges));
}

FigureFixture figure_fixture(Figure figure) {
  FigureFixture f;
  switch (figure) {
    case Figure::kFig2Left: {
      f.name = "FIG2L";
      f.graph = Graph(8, {{0, 4}, {1, 5}, {2, 6}, {3, 7}, {0, 5}, {0, 6}, {1, 6}, {3, 6}});
      f.drawn_matching = edges_of(f.graph, {{0, 4}, {1, 5}, {2, 6}, {3, 7}});
      break;
    }
    case Figure::kFig2Right: {
      f.name = "FIG2R";
      f.graph = Graph(8, {{0, 4}, {1, 5}, {2, 6}, {3, 7}, {1, 4}, {2, 5}, {3, 6}, {0, 7}});
      f.drawn_matching = edges_of(f.graph, {{0, 4}, {1, 5}, {2, 6}, {3, 7}});
      break;
    }
    case Figure::kFig3: {
      f.name = "FIG3";
      f.graph = labeled({"1", "2", "3", "4", "1'", "2'", "3'", "4'"}, {{"2", "3"},
                                                                       {"3", "4"},
                                                                       {"1", "1'"},
                                                                       {"1'", "2'"},
                                                                       {"2", "2'"},
                                                                       {"3", "3'"},
                                                                       {"4", "4'"}});
      // 1 -> 1', 2 -> 2', 3' -> 3, 4 -> 4'
      f.drawn_matching = edges_of(f.graph, {{0, 4}, {1, 5}, {2, 6}, {3, 7}});
      f.drawn_orientation = {{0, 4}, {1, 5}, {6, 2}, {3, 7}};
      break;
    }
    case Figure::kFig4: {
      f.name = "FIG4";
      f.graph = labeled({"1", "2", "3", "4", "1'", "2'", "3'", "4'"}, {{"1", "2"},
                                                                       {"1", "1'"},
                                                                       {"2", "2'"},
                                                                       {"2'", "3"},
                                                                       {"3", "3'"},
                                                                       {"3'", "4"},
                                                                       {"4", "4'"}});
      // 1 -> 1', 2' -> 2, 3' -> 3, 4' -> 4
      f.drawn_matching = edges_of(f.graph, {{0, 4}, {1, 5}, {2, 6}, {3, 7}});
      f.drawn_orientation = {{0, 4}, {5, 1}, {6, 2}, {7, 3}};
      break;
    }
    case Figure::kFig5: {
      f.name = "FIG5";
      f.graph = labeled({"v", "a", "b", "c"}, {{"v", "a"}, {"v", "b"}, {"v", "c"}, {"b", "c"}});
      f.highlighted_edges = {f.graph.edge_id(0, 1), f.graph.edge_id(2, 3)};
      break;
    }
    case Figure::kFig6: {
      f.name = "FIG6";
      f.graph = labeled({"v", "a", "b", "c", "d"},
                        {{"a", "b"}, {"c", "d"}, {"v", "a"}, {"v", "b"}, {"v", "c"}, {"v", "d"}});
      f.highlighted_edges = {f.graph.edge_id(1, 2), f.graph.edge_id(3, 4)};
      break;
    }
  }
  return f;
}

Graph generate(const FamilySpec& spec) {
  const std::string family = lower(spec.family);
  auto need = [&](std::size_t count) {
    if (spec.sizes.size() != count) {
      bad_parameter("family '" + spec.family + "' takes " + std::to_string(count) +
                    " size parameter(s)");
    }
    for (std::int64_t s : spec.sizes) {
      if (s < 1) bad_parameter("sizes must be >= 1");
    }
  };
  auto size = [&](std::size_t i) { return static_cast<std::size_t>(spec.sizes[i]); };

  if (family == "path") {
    need(1);
    return path_graph(size(0));
  }
  if (family == "cycle") {
    need(1);
    return cycle_graph(size(0));
  }
  if (family == "complete") {
    need(1);
    return complete_graph(size(0));
  }
  if (family == "complete-bipartite") {
    need(2);
    return complete_bipartite_graph(size(0), size(1));
  }
  if (family == "hypercube") {
    need(1);
    return hypercube_graph(size(0));
  }
  if (family == "gnp" || family == "random") {
    need(1);
    return random_gnp(size(0), spec.p, spec.seed);
  }
  if (family == "tree" || family == "random-tree") {
    need(1);
    return random_tree(size(0), spec.seed);
  }
  if (family == "odd-cactus") {
    need(1);
    return random_odd_cactus(size(0), spec.seed);
  }
  if (family == "empty") {
    if (spec.sizes.size() != 1 || spec.sizes[0] < 0) bad_parameter("empty takes one size >= 0");
    return empty_graph(size(0));
  }
  if (family == "fig2l") return figure_fixture(Figure::kFig2Left).graph;
  if (family == "fig2r") return figure_fixture(Figure::kFig2Right).graph;
  if (family == "fig3") return figure_fixture(Figure::kFig3).graph;
  if (family == "fig4") return figure_fixture(Figure::kFig4).graph;
  if (family == "fig5") return figure_fixture(Figure::kFig5).graph;
  if (family == "fig6") return figure_fixture(Figure::kFig6).graph;
  bad_parameter("unknown graph family '" + spec.family + "'");
}

}  // namespace pmatch
