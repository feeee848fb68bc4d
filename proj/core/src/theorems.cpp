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

#include "pmatch/theorems.hpp"

#include <algorithm>

#include "pmatch/bipartite.hpp"
#include "pmatch/error.hpp"
#include "pmatch/oracle.hpp"
#include "pmatch/properties.hpp"
#include "pmatch/solver.hpp"
#include "pmatch/structure.hpp"

namespace pmatch {
namespace {

nlohmann::json graph_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"n", g.num_vertices()}, {"edges", std::move(edges)}};
}

TheoremVerdict verdict(TheoremId t, const std::string& id, const Graph* g, bool holds,
                       nlohmann::json payload) {
  TheoremVerdict v;
  v.theorem = std::string(theorem_name(t));
  v.graph_id = id;
  v.holds = holds;
  v.payload = std::move(payload);
  if (!holds && g != nullptr) v.payload["graph"] = graph_json(*g);
  return v;
}

// Parameter values from the oracle when the graph is small enough, else from
// the search engine without fast paths.
class ReferenceValues {
 public:
  explicit ReferenceValues(const Graph& g) : g_(g) {
    if (g.num_edges() <= kOracleMaxEdges) oracle_.emplace(g);
  }

  // nullopt for an undefined value.
  std::optional<std::size_t> get(ParameterId id) {
    if (oracle_) {
      try {
        OracleReport r = oracle_->evaluate(id);
        if (r.status == ResultStatus::kUndefined) return std::nullopt;
        return r.value;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::kTooLarge) throw;
      }
    }
    SolverOptions options;
    options.use_fast_paths = false;
    ParameterResult r = compute(g_, id, options);
    if (r.status == ResultStatus::kUndefined) return std::nullopt;
    if (!r.ok())
      throw Error(ErrorKind::kBudgetExceeded, std::string(parameter_name(id)) + ": " + r.message);
    return r.value;
  }

  std::size_t defined(ParameterId id) {
    auto v = get(id);
    if (!v) {
      throw Error(ErrorKind::kInvalidArgument,
                  std::string(parameter_name(id)) + " is undefined on this graph");
    }
    return *v;
  }

  Oracle* oracle() { return oracle_ ? &*oracle_ : nullptr; }

 private:
  const Graph& g_;
  std::optional<Oracle> oracle_;
};

bool is_vertex_cover(const Graph& g, const VertexSet& cover) {
  for (const Edge& e : g.edges()) {
    if (!std::binary_search(cover.begin(), cover.end(), e.u) &&
        !std::binary_search(cover.begin(), cover.end(), e.v)) {
      return false;
    }
  }
  return true;
}

// Validates a cycle reported by find_alternating_cycle.
bool valid_alternating_cycle(const Graph& g, const Matching& m, const std::vector<Vertex>& c) {
  if (c.size() < 4 || c.size() % 2 != 0) return false;
  std::vector<Vertex> sorted = c;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (std::size_t i = 0; i < c.size(); ++i) {
    Vertex a = c[i];
    Vertex b = c[(i + 1) % c.size()];
    if (!g.has_edge(a, b)) return false;
    const bool matched = m.mate(a) == b;
    if (matched != (i % 2 == 0)) return false;
  }
  return true;
}

}  // namespace

std::string_view theorem_name(TheoremId t) {
  switch (t) {
    case TheoremId::kGallai:
      return "gallai";
    case TheoremId::kKonig:
      return "konig";
    case TheoremId::kFrobenius:
      return "frobenius";
    case TheoremId::kHall:
      return "hall";
    case TheoremId::kPropositionChains:
      return "chains";
    case TheoremId::kConnected:
      return "connected";
    case TheoremId::kUrCharacterization:
      return "ur";
    case TheoremId::kBlockClass:
      return "block-class";
  }
  return "?";
}

std::optional<TheoremId> parse_theorem(std::string_view name) {
  for (TheoremId t : kAllTheorems) {
    if (theorem_name(t) == name) return t;
  }
  if (name == "konig-egervary") return TheoremId::kKonig;
  if (name == "proposition-chains") return TheoremId::kPropositionChains;
  if (name == "ur-characterization") return TheoremId::kUrCharacterization;
  return std::nullopt;
}

nlohmann::json TheoremVerdict::to_json() const {
  return {{"type", "verdict"},
          {"theorem", theorem},
          {"graph", graph_id},
          {"holds", holds},
          {"payload", payload}};
}

TheoremVerdict check_gallai(const Graph& g, const std::string& id) {
  ReferenceValues ref(g);
  const std::size_t n = g.num_vertices();
  const std::size_t alpha0 = ref.defined(ParameterId::kAlpha0);
  const std::size_t beta0 = ref.defined(ParameterId::kBeta0);
  const std::size_t beta1 = ref.defined(ParameterId::kBeta1);
  nlohmann::json payload = {{"n", n}, {"alpha0", alpha0}, {"beta0", beta0}, {"beta1", beta1}};
  bool holds = alpha0 + beta0 == n;
  payload["identity_i"] = holds;
  if (has_isolated_vertex(g)) {
    payload["identity_ii"] = "skipped: isolated vertex";
  } else {
    const std::size_t alpha1 = ref.defined(ParameterId::kAlpha1);
    payload["alpha1"] = alpha1;
    payload["identity_ii"] = alpha1 + beta1 == n;
    holds = holds && alpha1 + beta1 == n;
  }
  return verdict(TheoremId::kGallai, id, &g, holds, std::move(payload));
}

TheoremVerdict check_konig(const Graph& g, const std::string& id) {
  if (!is_bipartite(g)) throw Error(ErrorKind::kNotApplicable, "graph is not bipartite");
  MatchingWithCover pair = bipartite_max_matching_with_cover(g);
  ReferenceValues ref(g);
  const std::size_t beta1 = ref.defined(ParameterId::kBeta1);
  const std::size_t alpha0 = ref.defined(ParameterId::kAlpha0);
  const bool cover_ok = is_vertex_cover(g, pair.cover);
  const bool holds = cover_ok && pair.matching.size() == pair.cover.size() && beta1 == alpha0 &&
                     beta1 == pair.matching.size();
  nlohmann::json payload = {{"beta1", beta1},
                            {"alpha0", alpha0},
                            {"matching", format_edges(g, pair.matching.edges())},
                            {"cover", pair.cover},
                            {"cover_valid", cover_ok}};
  return verdict(TheoremId::kKonig, id, &g, holds, std::move(payload));
}

TheoremVerdict check_frobenius(const Graph& g, const std::string& id) {
  auto parts = bipartition(g);
  if (!parts) throw Error(ErrorKind::kNotApplicable, "graph is not bipartite");
  const VertexSet& a = parts->left;
  ReferenceValues ref(g);
  const bool perfect = 2 * ref.defined(ParameterId::kBeta1) == g.num_vertices();

  std::optional<VertexSet> violator;
  bool hall_ok = true;
  if (a.size() <= 20) {
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << a.size()) && !violator; ++mask) {
      VertexSet x;
      std::vector<Vertex> nx;
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (!((mask >> i) & 1)) continue;
        x.push_back(a[i]);
        for (Vertex w : g.neighbors(a[i])) nx.push_back(w);
      }
      std::sort(nx.begin(), nx.end());
      nx.erase(std::unique(nx.begin(), nx.end()), nx.end());
      if (nx.size() < x.size()) violator = x;
    }
    hall_ok = !violator;
  } else {
    // Deficiency form: A is saturated by some matching.
    hall_ok = bipartite_max_matching_with_cover(g).matching.size() == a.size();
  }
  const bool balanced = a.size() == parts->right.size();
  const bool condition = balanced && hall_ok;
  nlohmann::json payload = {{"left_size", a.size()},
                            {"right_size", parts->right.size()},
                            {"perfect_matching", perfect},
                            {"hall_condition", hall_ok}};
  if (violator) payload["violator"] = *violator;
  return verdict(TheoremId::kFrobenius, id, &g, perfect == condition, std::move(payload));
}

TheoremVerdict check_hall(const SetSystem& s, const std::string& id) {
  SdrResult solved = sdr_solve(s);
  auto exhaustive = exhaustive_hall_violator(s);
  bool certificate_ok = false;
  nlohmann::json payload;
  if (solved.representatives) {
    certificate_ok = is_sdr(s, *solved.representatives);
    payload["sdr"] = *solved.representatives;
  } else {
    certificate_ok = union_size(s, *solved.violator) < solved.violator->size();
    payload["violator"] = *solved.violator;
  }
  payload["certificate_valid"] = certificate_ok;
  payload["hall_condition"] = !exhaustive.has_value();
  const bool holds = certificate_ok && solved.representatives.has_value() == !exhaustive;
  TheoremVerdict v = verdict(TheoremId::kHall, id, nullptr, holds, std::move(payload));
  if (!holds) v.payload["sets"] = s.sets;
  return v;
}

TheoremVerdict check_hall(const Graph& g, const std::string& id) {
  SetSystem s;
  s.ground_size = g.num_vertices();
  for (Vertex v = 0; v < g.num_vertices(); ++v) s.sets.push_back(open_neighborhood(g, v));
  TheoremVerdict v = check_hall(s, id);
  if (!v.holds) v.payload["graph"] = graph_json(g);
  return v;
}

TheoremVerdict check_proposition_chains(const Graph& g, const std::string& id) {
  ReferenceValues ref(g);
  const std::size_t star = ref.defined(ParameterId::kBetaStar);
  const std::size_t ac = ref.defined(ParameterId::kBetaAc);
  const std::size_t ur = ref.defined(ParameterId::kBetaUr);
  const std::size_t b1 = ref.defined(ParameterId::kBeta1);
  const std::size_t dc = ref.defined(ParameterId::kBetaDc);
  const std::size_t c = ref.defined(ParameterId::kBetaC);
  const std::size_t iff = ref.defined(ParameterId::kBetaIf);
  const bool chain1 = star <= ac && ac <= ur && ur <= b1;
  const bool chain2 = star <= dc && dc <= b1;
  const bool chain3 = c <= iff && iff <= b1;
  nlohmann::json payload = {{"beta_star", star},  {"beta_ac", ac},     {"beta_ur", ur},
                            {"beta1", b1},        {"beta_dc", dc},     {"beta_c", c},
                            {"beta_if", iff},     {"chain_i", chain1}, {"chain_ii", chain2},
                            {"chain_iii", chain3}};
  return verdict(TheoremId::kPropositionChains, id, &g, chain1 && chain2 && chain3,
                 std::move(payload));
}

TheoremVerdict check_connected_theorem(const Graph& g, const std::string& id) {
  if (!is_connected(g)) throw Error(ErrorKind::kNotApplicable, "graph is not connected");
  ReferenceValues ref(g);
  const std::size_t c = ref.defined(ParameterId::kBetaC);
  const std::size_t iff = ref.defined(ParameterId::kBetaIf);
  const std::size_t b1 = ref.defined(ParameterId::kBeta1);
  nlohmann::json payload = {{"beta_c", c}, {"beta_if", iff}, {"beta1", b1}};
  return verdict(TheoremId::kConnected, id, &g, c == b1 && iff == b1, std::move(payload));
}

TheoremVerdict check_ur_characterization(const Graph& g, const std::string& id) {
  Oracle oracle(g);
  std::size_t checked = 0;
  std::size_t ur_count = 0;
  for (std::uint32_t mask : oracle.matching_masks()) {
    Matching m = Matching::from_edges(g, oracle.edges_of(mask));
    auto cycle = find_alternating_cycle(g, m);
    const bool by_cycle = !cycle;
    const bool by_count = is_uniquely_restricted_by_count(g, m);
    std::optional<bool> by_list;
    if (m.saturated().size() <= 16) {
      by_list = oracle_perfect_matchings(matching_subgraph(g, m).graph).size() == 1;
    }
    const bool cycle_ok = !cycle || valid_alternating_cycle(g, m, *cycle);
    ++checked;
    ur_count += by_cycle;
    if (by_cycle != by_count || (by_list && *by_list != by_cycle) || !cycle_ok) {
      nlohmann::json payload = {{"matching", format_edges(g, m.edges())},
                                {"alternating_cycle_route", by_cycle},
                                {"count_route", by_count},
                                {"cycle_valid", cycle_ok}};
      if (by_list) payload["oracle_route"] = *by_list;
      return verdict(TheoremId::kUrCharacterization, id, &g, false, std::move(payload));
    }
  }
  return verdict(TheoremId::kUrCharacterization, id, &g, true,
                 {{"matchings", checked}, {"uniquely_restricted", ur_count}});
}

TheoremVerdict check_block_class_identity(const Graph& g, const std::string& id) {
  auto fast = block_class_fast_path(g);
  if (!fast) {
    throw Error(ErrorKind::kNotApplicable, "some block is neither an edge nor an odd cycle");
  }
  ReferenceValues ref(g);
  const std::size_t b1 = ref.defined(ParameterId::kBeta1);
  const std::size_t ur = ref.defined(ParameterId::kBetaUr);
  nlohmann::json payload = {{"beta1", b1}, {"beta_ur", ur}, {"fast_path", fast->value}};
  return verdict(TheoremId::kBlockClass, id, &g, b1 == ur && fast->value == ur, std::move(payload));
}

std::optional<TheoremVerdict> run_theorem(TheoremId t, const Graph& g, const std::string& id) {
  try {
    switch (t) {
      case TheoremId::kGallai:
        return check_gallai(g, id);
      case TheoremId::kKonig:
        return check_konig(g, id);
      case TheoremId::kFrobenius:
        return check_frobenius(g, id);
      case TheoremId::kHall:
        return check_hall(g, id);
      case TheoremId::kPropositionChains:
        return check_proposition_chains(g, id);
      case TheoremId::kConnected:
        return check_connected_theorem(g, id);
      case TheoremId::kUrCharacterization:
        return check_ur_characterization(g, id);
      case TheoremId::kBlockClass:
        return check_block_class_identity(g, id);
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kNotApplicable) return std::nullopt;
    throw;
  }
  return std::nullopt;
}

}  // namespace pmatch
