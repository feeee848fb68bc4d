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

#include "pmatch/oracle.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>

#include "pmatch/error.hpp"
#include "pmatch/properties.hpp"
#include "pmatch/structure.hpp"

namespace pmatch {
namespace {

constexpr std::uint64_t kNotMatching = std::numeric_limits<std::uint64_t>::max();

void require_vertices(const Graph& g, std::size_t cap, const char* what) {
  if (g.num_vertices() > cap) {
    throw Error(ErrorKind::kTooLarge,
                std::string(what) + " oracle needs n <= " + std::to_string(cap));
  }
}

// Accumulates a max or min together with the number of subsets attaining it.
struct Extremum {
  bool maximize;
  bool found = false;
  std::size_t value = 0;
  std::uint64_t count = 0;

  void offer(std::size_t v) {
    if (!found || (maximize ? v > value : v < value)) {
      found = true;
      value = v;
      count = 1;
    } else if (v == value) {
      ++count;
    }
  }
};

OracleReport report(ParameterId id, const Extremum& e, std::uint64_t enumerated) {
  OracleReport r;
  r.parameter = id;
  r.enumerated = enumerated;
  if (e.found) {
    r.value = e.value;
    r.witness_count = e.count;
  } else {
    r.status = ResultStatus::kUndefined;
  }
  return r;
}

std::vector<std::uint32_t> neighbor_masks(const Graph& g) {
  std::vector<std::uint32_t> nb(g.num_vertices(), 0);
  for (const Edge& e : g.edges()) {
    nb[e.u] |= std::uint32_t{1} << e.v;
    nb[e.v] |= std::uint32_t{1} << e.u;
  }
  return nb;
}

}  // namespace

Oracle::Oracle(const Graph& g) : g_(g) {
  const std::size_t m = g.num_edges();
  if (m > kOracleMaxEdges) {
    throw Error(ErrorKind::kTooLarge, "oracle needs m <= " + std::to_string(kOracleMaxEdges) +
                                          ", got " + std::to_string(m));
  }
  std::vector<std::size_t> bit(g.num_vertices(), 0);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) > 0) {
      bit[v] = compact_.size();
      compact_.push_back(v);
    }
  }
  std::vector<std::uint64_t> ends(m);
  for (EdgeId e = 0; e < m; ++e) {
    ends[e] = (std::uint64_t{1} << bit[g.edge(e).u]) | (std::uint64_t{1} << bit[g.edge(e).v]);
  }
  // cover[mask] is the saturated set of mask, or kNotMatching when two
  // members share a vertex.
  const std::uint64_t total = std::uint64_t{1} << m;
  std::vector<std::uint64_t> cover(total);
  cover[0] = 0;
  masks_.push_back(0);
  covers_.push_back(0);
  for (std::uint64_t mask = 1; mask < total; ++mask) {
    const int low = std::countr_zero(mask);
    const std::uint64_t rest = cover[mask & (mask - 1)];
    if (rest == kNotMatching || (rest & ends[low])) {
      cover[mask] = kNotMatching;
      continue;
    }
    cover[mask] = rest | ends[low];
    masks_.push_back(static_cast<std::uint32_t>(mask));
    covers_.push_back(cover[mask]);
  }
  subsets_ = total;
  for (std::size_t i = 0; i < masks_.size(); ++i) index_.emplace(masks_[i], i);
  known_.assign(masks_.size(), 0);
  value_.assign(masks_.size(), 0);
}

EdgeSet Oracle::edges_of(std::uint32_t mask) const {
  EdgeSet out;
  for (EdgeId e = 0; e < g_.num_edges(); ++e) {
    if ((mask >> e) & 1) out.push_back(e);
  }
  return out;
}

bool Oracle::has(std::size_t index, PropertyId p) {
  const std::uint32_t bit = std::uint32_t{1} << static_cast<int>(p);
  if (!(known_[index] & bit)) {
    known_[index] |= bit;
    if (has_property(g_, Matching::from_edges(g_, edges_of(masks_[index])), p)) {
      value_[index] |= bit;
    }
  }
  return value_[index] & bit;
}

OracleReport Oracle::max_over_property(ParameterId id, PropertyId p) {
  Extremum best{true};
  for (std::size_t i = 0; i < masks_.size(); ++i) {
    if (has(i, p)) best.offer(static_cast<std::size_t>(std::popcount(masks_[i])));
  }
  return report(id, best, subsets_);
}

OracleReport Oracle::min_over_maximal(ParameterId id, PropertyId p) {
  const std::size_t m = g_.num_edges();
  Extremum best{false};
  for (std::size_t i = 0; i < masks_.size(); ++i) {
    const std::uint32_t mask = masks_[i];
    if (mask == 0 && m > 0) continue;
    if (!has(i, p)) continue;
    bool maximal = true;
    if (p == PropertyId::kPlain) {
      maximal = is_maximal_matching(g_, Matching::from_edges(g_, edges_of(mask)));
    } else {
      for (EdgeId e = 0; e < m && maximal; ++e) {
        auto it = index_.find(mask | (std::uint32_t{1} << e));
        if ((mask >> e) & 1 || it == index_.end()) continue;
        if (has(it->second, p)) maximal = false;
      }
    }
    if (maximal) best.offer(static_cast<std::size_t>(std::popcount(mask)));
  }
  return report(id, best, subsets_);
}

OracleReport Oracle::vertex_subsets(ParameterId id) {
  require_vertices(g_, kOracleMaxVertices, "vertex-subset");
  const std::size_t n = g_.num_vertices();
  const std::vector<std::uint32_t> nb = neighbor_masks(g_);
  const std::uint32_t all = n == 32 ? ~0u : (std::uint32_t{1} << n) - 1;
  Extremum best{id == ParameterId::kBeta0};
  for (std::uint32_t s = 0; s <= all; ++s) {
    bool ok = true;
    if (id == ParameterId::kBeta0) {
      for (Vertex v = 0; v < n && ok; ++v) ok = !((s >> v) & 1) || !(nb[v] & s);
    } else if (id == ParameterId::kAlpha0) {
      for (const Edge& e : g_.edges()) ok = ok && (((s >> e.u) | (s >> e.v)) & 1);
    } else {
      std::uint32_t dominated = s;
      for (Vertex v = 0; v < n; ++v) {
        if ((s >> v) & 1) dominated |= nb[v];
      }
      ok = dominated == all;
    }
    if (ok) best.offer(static_cast<std::size_t>(std::popcount(s)));
    if (s == all) break;
  }
  return report(id, best, std::uint64_t{all} + 1);
}

OracleReport Oracle::edge_cover() {
  if (has_isolated_vertex(g_)) {
    OracleReport r;
    r.parameter = ParameterId::kAlpha1;
    r.status = ResultStatus::kUndefined;
    return r;
  }
  // Gray-code walk over all 2^m subsets with per-vertex multiplicities.
  const std::size_t m = g_.num_edges();
  const std::size_t n = g_.num_vertices();
  std::vector<std::size_t> degree(n, 0);
  std::size_t covered = 0;
  std::size_t size = 0;
  Extremum best{false};
  if (n == 0) best.offer(0);
  const std::uint64_t total = std::uint64_t{1} << m;
  for (std::uint64_t i = 1; i < total; ++i) {
    const Edge& e = g_.edge(static_cast<EdgeId>(std::countr_zero(i)));
    const bool adding = ((i ^ (i >> 1)) >> std::countr_zero(i)) & 1;
    for (Vertex v : {e.u, e.v}) {
      if (adding) {
        covered += (degree[v]++ == 0);
      } else {
        covered -= (--degree[v] == 0);
      }
    }
    size = adding ? size + 1 : size - 1;
    if (covered == n) best.offer(size);
  }
  return report(ParameterId::kAlpha1, best, total);
}

OracleReport Oracle::total(ParameterId id) {
  require_vertices(g_, kOracleMaxVertices, "total-matching");
  const std::size_t n = g_.num_vertices();
  const std::vector<std::uint32_t> nb = neighbor_masks(g_);
  const std::uint32_t all = (std::uint32_t{1} << n) - 1;
  Extremum best{id == ParameterId::kTotalMax};
  std::uint64_t enumerated = 0;
  for (std::uint32_t mask : masks_) {
    std::uint32_t saturated = 0;
    for (EdgeId e = 0; e < g_.num_edges(); ++e) {
      if ((mask >> e) & 1) {
        saturated |= (std::uint32_t{1} << g_.edge(e).u) | (std::uint32_t{1} << g_.edge(e).v);
      }
    }
    const std::uint32_t open = all & ~saturated;
    // Every subset of the unsaturated vertices, including the empty one.
    std::uint32_t s = 0;
    while (true) {
      ++enumerated;
      bool independent = true;
      for (Vertex v = 0; v < n && independent; ++v) {
        if ((s >> v) & 1) independent = !(nb[v] & s);
      }
      if (independent) {
        const std::uint32_t blocked = saturated | s;
        bool maximal = true;
        for (Vertex x = 0; x < n && maximal; ++x) {
          if (!((blocked >> x) & 1) && !(nb[x] & s)) maximal = false;
        }
        for (const Edge& e : g_.edges()) {
          if (!maximal) break;
          if (!((blocked >> e.u) & 1) && !((blocked >> e.v) & 1)) maximal = false;
        }
        if (maximal) {
          best.offer(static_cast<std::size_t>(std::popcount(mask) + std::popcount(s)));
        }
      }
      if (s == open) break;
      s = (s - open) & open;
    }
  }
  return report(id, best, enumerated);
}

OracleReport Oracle::separating() {
  Extremum best{false};
  for (std::uint32_t mask : masks_) {
    if (mask == 0) continue;
    if (is_separating(g_, Matching::from_edges(g_, edges_of(mask)))) {
      best.offer(static_cast<std::size_t>(std::popcount(mask)));
    }
  }
  return report(ParameterId::kSepMin, best, subsets_);
}

OracleReport Oracle::b_matching() {
  if (!is_forest(g_)) {
    OracleReport r;
    r.parameter = ParameterId::kBMatchingMax;
    r.status = ResultStatus::kNotApplicable;
    return r;
  }
  return oracle_b_matching_max(g_, BoundFunction::table_default(g_));
}

OracleReport Oracle::evaluate(ParameterId id) {
  switch (id) {
    case ParameterId::kAlpha0:
    case ParameterId::kBeta0:
    case ParameterId::kGamma:
      return vertex_subsets(id);
    case ParameterId::kAlpha1:
      return edge_cover();
    case ParameterId::kTotalMax:
    case ParameterId::kTotalMin:
      return total(id);
    case ParameterId::kSepMin:
      return separating();
    case ParameterId::kBMatchingMax:
      return b_matching();
    default:
      break;
  }
  const PropertyId p = *parameter_property(id);
  OracleReport r = is_minus_parameter(id) ? min_over_maximal(id, p) : max_over_property(id, p);
  r.parameter = id;
  return r;
}

OracleReport oracle_parameter(const Graph& g, ParameterId id) {
  Oracle oracle(g);
  return oracle.evaluate(id);
}

OracleReport oracle_b_matching_max(const Graph& g, const BoundFunction& b) {
  const std::size_t m = g.num_edges();
  if (m > kOracleMaxEdges) throw Error(ErrorKind::kTooLarge, "b-matching oracle needs m <= 22");
  Extremum best{true};
  EdgeSet edges;
  const std::uint64_t total = std::uint64_t{1} << m;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    edges.clear();
    for (EdgeId e = 0; e < m; ++e) {
      if ((mask >> e) & 1) edges.push_back(e);
    }
    if (is_b_matching(g, edges, b)) best.offer(edges.size());
  }
  return report(ParameterId::kBMatchingMax, best, total);
}

bool oracle_orientation_feasible(const Graph& g, const Matching& m, OrientationMode mode) {
  if (m.size() > 20) throw Error(ErrorKind::kTooLarge, "orientation oracle needs |M| <= 20");
  const EdgeSet& edges = m.edges();
  std::vector<Vertex> tails(edges.size());
  std::vector<Vertex> heads(edges.size());
  for (std::uint32_t choice = 0; choice < (std::uint32_t{1} << edges.size()); ++choice) {
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const Edge& e = g.edge(edges[i]);
      const bool flip = (choice >> i) & 1;
      tails[i] = flip ? e.v : e.u;
      heads[i] = flip ? e.u : e.v;
    }
    bool ok = true;
    for (std::size_t i = 0; i < edges.size() && ok; ++i) {
      for (std::size_t j = i + 1; j < edges.size() && ok; ++j) {
        if (g.has_edge(tails[i], tails[j])) ok = false;
        if (mode == OrientationMode::kBipartite && g.has_edge(heads[i], heads[j])) ok = false;
      }
    }
    if (ok) return true;
  }
  return false;
}

namespace {

void perfect_rec(const Graph& h, std::vector<char>& used, EdgeSet& cur, std::vector<EdgeSet>& out) {
  Vertex first = 0;
  while (first < used.size() && used[first]) ++first;
  if (first == used.size()) {
    EdgeSet sorted = cur;
    std::sort(sorted.begin(), sorted.end());
    out.push_back(std::move(sorted));
    return;
  }
  used[first] = 1;
  auto nbrs = h.neighbors(first);
  auto inc = h.incident_edges(first);
  for (std::size_t i = 0; i < nbrs.size(); ++i) {
    if (used[nbrs[i]]) continue;
    used[nbrs[i]] = 1;
    cur.push_back(inc[i]);
    perfect_rec(h, used, cur, out);
    cur.pop_back();
    used[nbrs[i]] = 0;
  }
  used[first] = 0;
}

}  // namespace

std::vector<EdgeSet> oracle_perfect_matchings(const Graph& h) {
  if (h.num_vertices() > 16) throw Error(ErrorKind::kTooLarge, "needs n <= 16");
  std::vector<char> used(h.num_vertices(), 0);
  EdgeSet cur;
  std::vector<EdgeSet> out;
  perfect_rec(h, used, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace pmatch
