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

#include "pmatch/report.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdio>

#include "pmatch/error.hpp"
#include "pmatch/matching.hpp"

namespace pmatch {
namespace {

std::string join_vertices(const Graph& g, const VertexSet& vs) {
  std::string out;
  for (Vertex v : vs) {
    if (!out.empty()) out += ',';
    out += g.label(v);
  }
  return out;
}

std::string seconds_text(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", s);
  return buf;
}

}  // namespace

ParameterTable compute_table(const std::string& id, const Graph& g,
                             std::span<const ParameterId> params, const SolverOptions& options) {
  ParameterTable t{id, g, {}, {}};
  for (ParameterId p : params) {
    auto start = std::chrono::steady_clock::now();
    t.results.push_back(compute(g, p, options));
    std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
    t.seconds.push_back(dt.count());
  }
  return t;
}

std::string_view witness_kind(const Witness& w) {
  switch (w.kind) {
    case Witness::Kind::kEdges:
      return "edges";
    case Witness::Kind::kVertices:
      return "vertices";
    case Witness::Kind::kMixed:
      return "mixed";
    default:
      return "none";
  }
}

std::string format_witness(const Graph& g, const Witness& w) {
  switch (w.kind) {
    case Witness::Kind::kEdges:
      return format_edges(g, w.edges);
    case Witness::Kind::kVertices:
      return join_vertices(g, w.vertices);
    case Witness::Kind::kMixed:
      return format_mixed_set(g, w.mixed());
    default:
      return "";
  }
}

MixedSet parse_mixed_set(const Graph& g, std::string_view text) {
  MixedSet s;
  std::string edges;
  std::vector<Vertex> vertices;
  std::size_t i = 0;
  auto is_sep = [](char c) { return c == ',' || std::isspace(static_cast<unsigned char>(c)); };
  while (i < text.size()) {
    while (i < text.size() && is_sep(text[i])) ++i;
    std::size_t j = i;
    while (j < text.size() && !is_sep(text[j])) ++j;
    if (j == i) break;
    std::string_view item = text.substr(i, j - i);
    i = j;
    if (item.find('-') != std::string_view::npos) {
      edges += std::string(item) + ',';
      continue;
    }
    auto v = g.find_vertex(item);
    if (!v) throw Error(ErrorKind::kParse, "unknown vertex '" + std::string(item) + "'");
    vertices.push_back(*v);
  }
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end()) {
    throw Error(ErrorKind::kParse, "vertex listed twice");
  }
  s.vertices = std::move(vertices);
  s.edges = parse_edges(g, edges);
  return s;
}

std::string format_mixed_set(const Graph& g, const MixedSet& s) {
  std::string out = join_vertices(g, s.vertices);
  std::string edges = format_edges(g, s.edges);
  if (!out.empty() && !edges.empty()) out += ',';
  return out + edges;
}

std::string value_text(const ParameterResult& r) {
  switch (r.status) {
    case ResultStatus::kOk:
      return std::to_string(r.value);
    case ResultStatus::kUndefined:
      return "undefined";
    case ResultStatus::kNotApplicable:
      return "n/a";
    default:
      return "-";
  }
}

nlohmann::json result_to_json(const Graph& g, const ParameterResult& r,
                              std::optional<double> seconds) {
  nlohmann::json j;
  j["parameter"] = std::string(parameter_name(r.parameter));
  j["status"] = std::string(status_name(r.status));
  switch (r.status) {
    case ResultStatus::kOk:
      j["value"] = r.value;
      break;
    case ResultStatus::kUndefined:
      j["value"] = "undefined";
      break;
    case ResultStatus::kNotApplicable:
      j["value"] = "n/a";
      break;
    default:
      j["value"] = nullptr;
      break;
  }
  j["witness"] = format_witness(g, r.witness);
  j["witness_kind"] = std::string(witness_kind(r.witness));
  j["route"] = std::string(route_name(r.route));
  j["nodes"] = r.nodes_explored;
  j["message"] = r.message;
  if (seconds) j["seconds"] = *seconds;
  return j;
}

nlohmann::json table_to_json(const ParameterTable& t, bool timing) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < t.results.size(); ++i) {
    std::optional<double> s;
    if (timing) s = t.seconds[i];
    rows.push_back(result_to_json(t.graph, t.results[i], s));
  }
  return {{"type", "table"},
          {"graph", t.graph_id},
          {"n", t.graph.num_vertices()},
          {"m", t.graph.num_edges()},
          {"parameters", std::move(rows)}};
}

std::string tsv_header(bool timing) {
  std::string h = "graph\tparameter\tstatus\tvalue\twitness\troute\tnodes";
  if (timing) h += "\tseconds";
  return h + '\n';
}

std::string table_to_tsv(const ParameterTable& t, bool timing) {
  std::string out;
  for (std::size_t i = 0; i < t.results.size(); ++i) {
    const ParameterResult& r = t.results[i];
    out += t.graph_id + '\t' + std::string(parameter_name(r.parameter)) + '\t' +
           std::string(status_name(r.status)) + '\t' + value_text(r) + '\t' +
           format_witness(t.graph, r.witness) + '\t' + std::string(route_name(r.route)) + '\t' +
           std::to_string(r.nodes_explored);
    if (timing) out += '\t' + seconds_text(t.seconds[i]);
    out += '\n';
  }
  return out;
}

}  // namespace pmatch
