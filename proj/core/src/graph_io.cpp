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

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "pmatch/error.hpp"
#include "pmatch/graph.hpp"

namespace pmatch {
namespace {

struct Line {
  std::size_t number;  // 1-based, for messages
  std::vector<std::string> tokens;
};

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
  throw Error(ErrorKind::kParse, "line " + std::to_string(line) + ": " + what);
}

std::vector<std::string> split_tokens(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.emplace_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::vector<Line> split_lines(std::string_view text, char comment) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view raw = text.substr(start, end - start);
    if (comment != '\0') {
      auto hash = raw.find(comment);
      if (hash != std::string_view::npos) raw = raw.substr(0, hash);
    }
    auto tokens = split_tokens(raw);
    if (!tokens.empty()) lines.push_back({number, std::move(tokens)});
    start = end + 1;
  }
  return lines;
}

std::optional<std::uint64_t> as_index(std::string_view token) {
  if (token.empty() || token.size() > 18) return std::nullopt;
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) return std::nullopt;
  return value;
}

Graph parse_dimacs(const std::vector<Line>& lines) {
  std::optional<std::size_t> n;
  std::size_t declared_m = 0;
  std::vector<Edge> edges;
  for (const Line& line : lines) {
    const auto& t = line.tokens;
    if (t[0] == "c") continue;
    if (t[0] == "p") {
      if (n) parse_error(line.number, "second 'p' header");
      if (t.size() != 4 || (t[1] != "edge" && t[1] != "col")) {
        parse_error(line.number, "expected 'p edge n m'");
      }
      auto nn = as_index(t[2]);
      auto mm = as_index(t[3]);
      if (!nn || !mm) parse_error(line.number, "non-numeric header counts");
      n = *nn;
      declared_m = *mm;
    } else if (t[0] == "e") {
      if (!n) parse_error(line.number, "edge before 'p' header");
      if (t.size() != 3) parse_error(line.number, "expected 'e u v'");
      auto a = as_index(t[1]);
      auto b = as_index(t[2]);
      if (!a || !b || *a == 0 || *b == 0) {
        parse_error(line.number, "endpoints must be positive integers");
      }
      if (*a > *n || *b > *n) {
        parse_error(line.number, "endpoint exceeds declared vertex count");
      }
      if (*a == *b) parse_error(line.number, "self-loop at vertex " + t[1]);
      edges.push_back(make_edge(static_cast<Vertex>(*a - 1), static_cast<Vertex>(*b - 1)));
    } else {
      parse_error(line.number, "unrecognized DIMACS line '" + t[0] + "'");
    }
  }
  if (!n) throw Error(ErrorKind::kParse, "missing 'p edge n m' header");
  if (edges.size() != declared_m) {
    throw Error(ErrorKind::kParse, "header declares " + std::to_string(declared_m) + " edges but " +
                                       std::to_string(edges.size()) + " were listed");
  }
  std::vector<Edge> sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end()) {
    throw Error(ErrorKind::kParse,
                "duplicate edge " + std::to_string(dup->u + 1) + "-" + std::to_string(dup->v + 1));
  }
  return Graph(*n, std::move(edges));
}

Graph parse_edge_list(const std::vector<Line>& all_lines) {
  for (const Line& line : all_lines) {
    if (line.tokens.size() > 2) parse_error(line.number, "expected 'u v'");
  }

  // Header detection (see graph.hpp).
  std::optional<std::pair<std::uint64_t, std::uint64_t>> header;
  std::span<const Line> body = all_lines;
  if (!all_lines.empty() && all_lines[0].tokens.size() == 2) {
    auto hn = as_index(all_lines[0].tokens[0]);
    auto hm = as_index(all_lines[0].tokens[1]);
    if (hn && hm) {
      std::span<const Line> rest(all_lines.begin() + 1, all_lines.end());
      std::size_t pairs = std::count_if(rest.begin(), rest.end(),
                                        [](const Line& l) { return l.tokens.size() == 2; });
      if (pairs == *hm) {
        bool numeric = true;
        std::uint64_t max_index = 0;
        bool any = false;
        std::unordered_map<std::string_view, int> distinct;
        for (const Line& l : rest) {
          for (const std::string& tok : l.tokens) {
            distinct.emplace(tok, 0);
            if (auto x = as_index(tok)) {
              max_index = std::max(max_index, *x);
              any = true;
            } else {
              numeric = false;
            }
          }
        }
        bool fits = numeric ? (!any || max_index < *hn) : distinct.size() == *hn;
        if (fits) {
          header = std::make_pair(*hn, *hm);
          body = rest;
        }
      }
    }
  }

  bool numeric = std::all_of(body.begin(), body.end(), [](const Line& l) {
    return std::all_of(l.tokens.begin(), l.tokens.end(),
                       [](const std::string& t) { return as_index(t).has_value(); });
  });

  std::vector<Edge> edges;
  std::vector<std::size_t> edge_lines;
  std::vector<std::string> labels;
  std::size_t n = 0;

  if (numeric) {
    std::uint64_t max_plus_one = 0;
    for (const Line& l : body) {
      std::vector<Vertex> ends;
      for (const std::string& tok : l.tokens) {
        std::uint64_t x = *as_index(tok);
        if (x >= kNoVertex) parse_error(l.number, "vertex index too large");
        max_plus_one = std::max(max_plus_one, x + 1);
        ends.push_back(static_cast<Vertex>(x));
      }
      if (ends.size() == 2) {
        if (ends[0] == ends[1]) parse_error(l.number, "self-loop at vertex " + l.tokens[0]);
        edges.push_back(make_edge(ends[0], ends[1]));
        edge_lines.push_back(l.number);
      }
    }
    n = header ? static_cast<std::size_t>(header->first) : max_plus_one;
    if (header && max_plus_one > n) {
      throw Error(ErrorKind::kParse, "endpoint >= declared vertex count");
    }
  } else {
    std::unordered_map<std::string, Vertex> index;
    auto vertex_of = [&](const std::string& tok) {
      auto [it, inserted] = index.emplace(tok, static_cast<Vertex>(labels.size()));
      if (inserted) labels.push_back(tok);
      return it->second;
    };
    for (const Line& l : body) {
      if (l.tokens.size() == 1) {
        vertex_of(l.tokens[0]);
        continue;
      }
      if (l.tokens[0] == l.tokens[1]) parse_error(l.number, "self-loop at vertex " + l.tokens[0]);
      Vertex a = vertex_of(l.tokens[0]);
      Vertex b = vertex_of(l.tokens[1]);
      edges.push_back(make_edge(a, b));
      edge_lines.push_back(l.number);
    }
    n = labels.size();
  }

  // Report duplicates against the line that repeats an earlier edge.
  std::vector<std::size_t> order(edges.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return edges[a] < edges[b]; });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (edges[order[i]] == edges[order[i - 1]]) {
      parse_error(edge_lines[order[i]], "duplicate edge");
    }
  }
  return Graph(n, std::move(edges), std::move(labels));
}

bool looks_like_dimacs(const std::vector<Line>& lines) {
  return std::any_of(lines.begin(), lines.end(),
                     [](const Line& l) { return l.tokens[0] == "p" && l.tokens.size() == 4; });
}

bool all_labels_numeric(const Graph& g) {
  return std::all_of(g.labels().begin(), g.labels().end(),
                     [](const std::string& l) { return as_index(l).has_value(); });
}

}  // namespace

Graph parse_graph(std::string_view text, GraphFormat format) {
  if (format == GraphFormat::kAuto) {
    auto probe = split_lines(text, '#');
    format = looks_like_dimacs(probe) ? GraphFormat::kDimacs : GraphFormat::kEdgeList;
  }
  if (format == GraphFormat::kDimacs) return parse_dimacs(split_lines(text, '\0'));
  return parse_edge_list(split_lines(text, '#'));
}

Graph read_graph_file(const std::string& path, GraphFormat format) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kParse, "cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str(), format);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  // Labels that are all integers would re-parse as indices, so such graphs
  // are written by index.
  bool labeled = g.has_labels() && !all_labels_numeric(g);
  if (labeled) {
    for (Vertex v = 0; v < g.num_vertices(); ++v) out << g.label(v) << '\n';
  }
  for (const Edge& e : g.edges()) {
    if (labeled) {
      out << g.label(e.u) << ' ' << g.label(e.v) << '\n';
    } else {
      out << e.u << ' ' << e.v << '\n';
    }
  }
  return out.str();
}

}  // namespace pmatch
