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

#include "cli.hpp"

#if __has_include(<CLI/CLI.hpp>)
#include <CLI/CLI.hpp>
#else
#include <CLI11.hpp>
#endif
#include <algorithm>
#include <iostream>
#include <iterator>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "pmatch/corpus.hpp"
#include "pmatch/error.hpp"
#include "pmatch/generators.hpp"
#include "pmatch/nordhaus_gaddum.hpp"
#include "pmatch/oracle.hpp"
#include "pmatch/properties.hpp"
#include "pmatch/report.hpp"
#include "pmatch/structure.hpp"
#include "pmatch/theorems.hpp"

namespace pmatch::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SourceFlags {
  std::vector<std::string> inputs;
  std::string family;
  std::vector<std::int64_t> n;
  double p = 0.5;
  std::uint64_t seed = 0;
  std::vector<std::size_t> all_n;
  std::size_t random = 0;
};

struct Flags {
  SourceFlags source;
  std::vector<std::string> params{"all"};
  std::vector<std::string> checks;
  std::uint64_t budget = SolverOptions{}.node_budget;
  std::string format = "json";
  std::size_t threads = 1;
  bool timing = false;
  bool quiet = false;
  std::string property;
  std::string matching;
  std::string set;
  bool maximal = false;
};

void add_source_flags(CLI::App* app, SourceFlags& s) {
  app->add_option("--input", s.inputs, "Graph file, edge list or DIMACS ('-' reads stdin)");
  app->add_option("--family", s.family,
                  "path, cycle, complete, complete-bipartite, hypercube, empty, gnp, tree, "
                  "odd-cactus, FIG2L, FIG2R, FIG3, FIG4, FIG5, FIG6");
  app->add_option("--n", s.n, "Sizes, comma separated")->delimiter(',');
  app->add_option("--p", s.p, "Edge probability for gnp")->check(CLI::Range(0.0, 1.0));
  app->add_option("--seed", s.seed, "Seed for random families");
  app->add_option("--all-n", s.all_n, "Every labeled graph on n vertices (n <= 7)")->delimiter(',');
  app->add_option("--random", s.random, "G(n, p) graphs per --n value, seeds seed, seed+1, ...");
}

void add_run_flags(CLI::App* app, Flags& f) {
  app->add_option("--budget", f.budget, "Search node budget per parameter");
  app->add_option("--threads", f.threads, "Worker threads; output order is unaffected")
      ->check(CLI::PositiveNumber);
}

bool is_seeded_family(const std::string& family) {
  return family == "gnp" || family == "tree" || family == "odd-cactus";
}

std::string read_stream(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Corpus build_corpus(const SourceFlags& s) {
  Corpus c;
  for (const std::string& path : s.inputs) {
    c.add(path, path == "-" ? parse_graph(read_stream(std::cin)) : read_graph_file(path));
  }
  if (s.random > 0) {
    if (!s.family.empty() && s.family != "gnp") {
      throw UsageError("--random draws G(n, p) graphs and cannot be combined with --family " +
                       s.family);
    }
    if (s.n.empty()) throw UsageError("--random needs --n");
    for (std::int64_t n : s.n) {
      if (n < 0) throw UsageError("--n must be nonnegative");
      c.add_random(s.random, static_cast<std::size_t>(n), s.p, s.seed);
    }
  } else if (!s.family.empty()) {
    if (s.family.size() > 3 && (s.family.rfind("FIG", 0) == 0 || s.family.rfind("fig", 0) == 0)) {
      c.add(s.family, generate({s.family, {}, s.p, s.seed}));
    } else if (s.family == "complete-bipartite") {
      std::string id = s.family;
      for (std::int64_t n : s.n) id += "-" + std::to_string(n);
      c.add(id, generate({s.family, s.n, s.p, s.seed}));
    } else {
      if (s.n.empty()) throw UsageError("--family " + s.family + " needs --n");
      for (std::int64_t n : s.n) {
        std::string id = s.family + "-n" + std::to_string(n);
        if (is_seeded_family(s.family)) id += "-s" + std::to_string(s.seed);
        c.add(id, generate({s.family, {n}, s.p, s.seed}));
      }
    }
  } else if (!s.n.empty()) {
    throw UsageError("--n needs --family or --random");
  }
  for (std::size_t n : s.all_n) c.add_all_graphs(n);
  if (c.size() == 0) throw UsageError("no input graph; use --input, --family, --random or --all-n");
  return c;
}

NamedGraph single_graph(const SourceFlags& s) {
  Corpus c = build_corpus(s);
  if (c.size() != 1) throw UsageError("this command takes exactly one graph");
  return c.at(0);
}

std::vector<ParameterId> parse_params(const std::vector<std::string>& names) {
  std::vector<ParameterId> out;
  for (const std::string& name : names) {
    if (name == "all") {
      const auto& all = all_parameters();
      out.insert(out.end(), all.begin(), all.end());
      continue;
    }
    auto id = parse_parameter(name);
    if (!id) throw UsageError("unknown parameter '" + name + "'");
    out.push_back(*id);
  }
  return out;
}

// 1 dominates 3 dominates 0.
int merge_code(int a, int b) {
  if (a == kExitFailure || b == kExitFailure) return kExitFailure;
  return std::max(a, b);
}

int table_code(const ParameterTable& t) {
  int code = kExitOk;
  for (const ParameterResult& r : t.results) {
    if (r.status == ResultStatus::kError) code = merge_code(code, kExitFailure);
    if (r.status == ResultStatus::kBudgetExceeded) code = merge_code(code, kExitBudget);
  }
  return code;
}

SolverOptions solver_options(const Flags& f) {
  SolverOptions o;
  o.node_budget = f.budget;
  return o;
}

int cmd_compute(const Flags& f, std::ostream& out) {
  const std::vector<ParameterId> params = parse_params(f.params);
  const Corpus corpus = build_corpus(f.source);
  const SolverOptions options = solver_options(f);
  const bool json = f.format == "json";
  std::vector<std::string> lines(corpus.size());
  std::vector<int> codes(corpus.size(), kExitOk);
  parallel_for(corpus.size(), f.threads, [&](std::size_t i) {
    NamedGraph item = corpus.at(i);
    ParameterTable t = compute_table(item.id, item.graph, params, options);
    lines[i] = json ? table_to_json(t, f.timing).dump() + "\n" : table_to_tsv(t, f.timing);
    codes[i] = table_code(t);
  });
  if (!json) out << tsv_header(f.timing);
  int code = kExitOk;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    out << lines[i];
    code = merge_code(code, codes[i]);
  }
  return code;
}

// ---------------------------------------------------------------------------
// verify

struct Verdict {
  bool holds = false;
  nlohmann::json certificate = nlohmann::json::object();
};

std::string join_labels(const Graph& g, const std::vector<Vertex>& vs) {
  std::string out;
  for (Vertex v : vs) out += (out.empty() ? "" : ",") + g.label(v);
  return out;
}

void put_orientation(const Graph& g, const std::optional<Orientation>& o, nlohmann::json& c) {
  if (!o) return;
  c["orientation"] = format_orientation(g, *o);
  c["tails"] = join_labels(g, o->tails());
  c["heads"] = join_labels(g, o->heads());
}

Verdict certify(const Graph& g, const Matching& m, PropertyId p) {
  Verdict v;
  v.holds = has_property(g, m, p);
  nlohmann::json& c = v.certificate;
  switch (p) {
    case PropertyId::kInduced:
      for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const Edge& edge = g.edge(e);
        if (!m.contains(e) && m.is_saturated(edge.u) && m.is_saturated(edge.v)) {
          c["extra_edge"] = format_edge(g, e);
          break;
        }
      }
      break;
    case PropertyId::kUniquelyRestricted:
      if (auto cycle = find_alternating_cycle(g, m))
        c["alternating_cycle"] = join_labels(g, *cycle);
      break;
    case PropertyId::kIndependent:
      put_orientation(g, find_independent_orientation(g, m), c);
      break;
    case PropertyId::kBipartite:
      put_orientation(g, find_bipartite_orientation(g, m), c);
      break;
    case PropertyId::kOnbr:
    case PropertyId::kCnbr: {
      auto conflict = p == PropertyId::kOnbr ? find_onbr_conflict(g, m) : find_cnbr_conflict(g, m);
      if (conflict) {
        c["conflict"] = {format_edge(g, conflict->first), format_edge(g, conflict->second)};
      }
      break;
    }
    case PropertyId::kVertexIrredundant:
      if (auto e = find_vertex_redundant_edge(g, m)) {
        c["redundant_edge"] = format_edge(g, *e);
      } else {
        for (Vertex u : m.saturated()) {
          if (auto w = external_private_neighbor(g, m, u)) {
            c["private_neighbors"][g.label(u)] = g.label(*w);
          }
        }
      }
      break;
    case PropertyId::kEdgeIrredundant:
      if (auto e = find_edge_redundant_edge(g, m)) {
        c["redundant_edge"] = format_edge(g, *e);
      } else {
        for (EdgeId e : m.edges()) {
          if (auto w = edge_irredundance_witness(g, m, e)) {
            c["private_edges"][format_edge(g, e)] = format_edge(g, *w);
          }
        }
      }
      break;
    default: {
      InducedSubgraph h = matching_subgraph(g, m);
      c["subgraph_edges"] = h.graph.num_edges();
      c["components"] = component_count(h.graph);
      break;
    }
  }
  return v;
}

// First edge e outside M such that M + e is again a P-matching.
std::optional<EdgeId> p_extension(const Graph& g, const Matching& m, PropertyId p) {
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& edge = g.edge(e);
    if (m.is_saturated(edge.u) || m.is_saturated(edge.v)) continue;
    if (has_property(g, m.with_edge(g, e), p)) return e;
  }
  return std::nullopt;
}

Verdict verify_edges(const Graph& g, const EdgeSet& edges, const std::string& name, bool maximal) {
  Verdict v;
  if (name == "b-matching") {
    BoundFunction b = BoundFunction::table_default(g);
    v.holds = is_b_matching(g, edges, b);
    for (Vertex x = 0; x < g.num_vertices(); ++x) {
      std::size_t deg =
          std::count_if(edges.begin(), edges.end(), [&](EdgeId e) { return g.edge(e).touches(x); });
      if (deg > b(x)) {
        v.certificate["overloaded_vertex"] = g.label(x);
        break;
      }
    }
    return v;
  }
  auto m = Matching::try_from_edges(g, edges);
  if (!m) {
    v.certificate["shared_vertex"] = g.label(*find_shared_vertex(g, edges));
    return v;
  }
  if (name == "matching") {
    v.holds = true;
  } else if (name == "maximal") {
    v.holds = is_maximal_matching(g, *m);
    if (auto e = p_extension(g, *m, PropertyId::kPlain))
      v.certificate["extension"] = format_edge(g, *e);
  } else if (name == "perfect") {
    v.holds = is_perfect(g, *m);
    for (Vertex x = 0; x < g.num_vertices(); ++x) {
      if (!m->is_saturated(x)) {
        v.certificate["unsaturated"] = g.label(x);
        break;
      }
    }
  } else if (name == "separating") {
    v.holds = is_separating(g, *m);
    v.certificate["components"] = component_count(g);
    v.certificate["components_without"] = component_count_without(g, m->edges());
  } else {
    auto p = parse_property(name);
    if (!p) throw UsageError("unknown property '" + name + "'");
    v = certify(g, *m, *p);
    if (maximal && v.holds) {
      auto e = p_extension(g, *m, *p);
      v.holds = !e;
      v.certificate["maximal"] = !e;
      if (e) v.certificate["extension"] = format_edge(g, *e);
    }
  }
  return v;
}

int cmd_verify(const Flags& f, std::ostream& out) {
  NamedGraph item = single_graph(f.source);
  const Graph& g = item.graph;
  const bool total = f.property == "total" || f.property == "maximal-total";
  Verdict v;
  if (total) {
    if (!f.matching.empty()) throw UsageError("total matchings take --set, not --matching");
    MixedSet s = parse_mixed_set(g, f.set);
    v.holds = f.property == "total" ? is_total_matching(g, s) : is_maximal_total_matching(g, s);
    v.certificate["size"] = s.size();
  } else {
    if (!f.set.empty()) throw UsageError("--set applies to total and maximal-total only");
    v = verify_edges(g, parse_edges(g, f.matching), f.property, f.maximal);
  }
  std::string property = f.property + (f.maximal && !total ? " (maximal)" : "");
  if (f.format == "json") {
    nlohmann::json j = {{"type", "verify"},
                        {"graph", item.id},
                        {"property", property},
                        {"holds", v.holds},
                        {"certificate", v.certificate}};
    out << j.dump() << '\n';
  } else {
    out << "graph\tproperty\tholds\tcertificate\n"
        << item.id << '\t' << property << '\t' << (v.holds ? "true" : "false") << '\t'
        << v.certificate.dump() << '\n';
  }
  return v.holds ? kExitOk : kExitFailure;
}

// ---------------------------------------------------------------------------
// theorems, scan, generate, oracle

std::vector<TheoremId> parse_checks(const std::vector<std::string>& names) {
  if (names.empty() || (names.size() == 1 && names[0] == "all")) {
    return {std::begin(kAllTheorems), std::end(kAllTheorems)};
  }
  std::vector<TheoremId> out;
  for (const std::string& name : names) {
    auto t = parse_theorem(name);
    if (!t) throw UsageError("unknown check '" + name + "'");
    out.push_back(*t);
  }
  return out;
}

int cmd_theorems(const Flags& f, std::ostream& out) {
  const std::vector<TheoremId> checks = parse_checks(f.checks);
  const Corpus corpus = build_corpus(f.source);
  struct Slot {
    std::string lines;
    std::size_t verdicts = 0, failed = 0, skipped = 0, budget = 0;
  };
  std::vector<Slot> slots(corpus.size());
  parallel_for(corpus.size(), f.threads, [&](std::size_t i) {
    NamedGraph item = corpus.at(i);
    Slot& s = slots[i];
    for (TheoremId t : checks) {
      std::optional<TheoremVerdict> v;
      try {
        v = run_theorem(t, item.graph, item.id);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::kTooLarge && e.kind() != ErrorKind::kBudgetExceeded) throw;
        ++s.skipped;
        if (e.kind() == ErrorKind::kBudgetExceeded) ++s.budget;
        nlohmann::json j = {{"type", "skipped"},
                            {"theorem", std::string(theorem_name(t))},
                            {"graph", item.id},
                            {"reason", e.what()}};
        s.lines += j.dump() + "\n";
        continue;
      }
      if (!v) continue;  // outside the hypothesis
      ++s.verdicts;
      if (!v->holds) ++s.failed;
      if (!f.quiet || !v->holds) s.lines += v->to_json().dump() + "\n";
    }
  });
  std::size_t verdicts = 0, failed = 0, skipped = 0, budget = 0;
  for (const Slot& s : slots) {
    out << s.lines;
    verdicts += s.verdicts;
    failed += s.failed;
    skipped += s.skipped;
    budget += s.budget;
  }
  nlohmann::json summary = {{"type", "summary"},
                            {"graphs", corpus.size()},
                            {"verdicts", verdicts},
                            {"failed", failed},
                            {"skipped", skipped}};
  out << summary.dump() << '\n';
  if (failed > 0) return kExitFailure;
  return budget > 0 ? kExitBudget : kExitOk;
}

int cmd_scan(const Flags& f, std::ostream& out) {
  auto p = parse_property(f.property);
  if (!p) throw UsageError("unknown property '" + f.property + "'");
  const Corpus corpus = build_corpus(f.source);
  NordhausGaddumScan scan = nordhaus_gaddum_scan(corpus, *p, solver_options(f), f.threads);
  for (const NordhausGaddumRecord& r : scan.records) {
    if (!f.quiet) out << r.to_json().dump() << '\n';
  }
  out << scan.summary.to_json().dump() << '\n';
  return scan.summary.skipped > 0 ? kExitBudget : kExitOk;
}

int cmd_generate(const Flags& f, std::ostream& out) {
  out << to_edge_list(single_graph(f.source).graph);
  return kExitOk;
}

int cmd_oracle(const Flags& f, std::ostream& out) {
  const std::vector<ParameterId> params = parse_params(f.params);
  const Corpus corpus = build_corpus(f.source);
  std::vector<std::string> lines(corpus.size());
  std::vector<char> errors(corpus.size(), 0);
  parallel_for(corpus.size(), f.threads, [&](std::size_t i) {
    NamedGraph item = corpus.at(i);
    nlohmann::json rows = nlohmann::json::array();
    for (ParameterId id : params) {
      nlohmann::json row = {{"parameter", std::string(parameter_name(id))}};
      try {
        OracleReport r = oracle_parameter(item.graph, id);
        row["status"] = std::string(status_name(r.status));
        if (r.status == ResultStatus::kOk) {
          row["value"] = r.value;
        } else {
          row["value"] = r.status == ResultStatus::kUndefined ? "undefined" : "n/a";
        }
        row["witness_count"] = r.witness_count;
        row["enumerated"] = r.enumerated;
      } catch (const Error& e) {
        row["status"] = "error";
        row["value"] = nullptr;
        row["message"] = e.what();
        errors[i] = 1;
      }
      rows.push_back(std::move(row));
    }
    nlohmann::json j = {{"type", "oracle"}, {"graph", item.id}, {"parameters", std::move(rows)}};
    lines[i] = j.dump() + "\n";
  });
  for (const std::string& l : lines) out << l;
  return std::count(errors.begin(), errors.end(), 1) > 0 ? kExitFailure : kExitOk;
}

int exit_code_for(const Error& e) {
  return e.kind() == ErrorKind::kBudgetExceeded ? kExitBudget : kExitUsage;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact P-matching parameters, brute-force oracle and theorem checks", "pmatch"};
  app.set_version_flag("--version", "pmatch 0.1.0");
  app.require_subcommand(1);
  Flags f;

  CLI::App* compute = app.add_subcommand("compute", "Parameter table per input graph");
  add_source_flags(compute, f.source);
  add_run_flags(compute, f);
  compute->add_option("--params", f.params, "Comma separated parameter tags, or all")
      ->delimiter(',');
  compute->add_option("--format", f.format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
  compute->add_flag("--timing", f.timing, "Add per-parameter wall time (not deterministic)");

  CLI::App* verify = app.add_subcommand("verify", "Check a matching or mixed set");
  add_source_flags(verify, f.source);
  verify
      ->add_option("--property", f.property,
                   "matching, maximal, perfect, separating, b-matching, total, "
                   "maximal-total, or a P-matching property")
      ->required();
  verify->add_option("--matching", f.matching, "Edges 'u-v,u-v'");
  verify->add_option("--set", f.set, "Vertices and edges for total matchings, e.g. '0,2-3'");
  verify->add_flag("--maximal", f.maximal, "Also require maximality among P-matchings");
  verify->add_option("--format", f.format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));

  CLI::App* theorems = app.add_subcommand("theorems", "Run theorem checks over a corpus");
  add_source_flags(theorems, f.source);
  add_run_flags(theorems, f);
  theorems
      ->add_option("--check", f.checks,
                   "gallai, konig, frobenius, hall, chains, connected, ur, block-class, or all")
      ->delimiter(',');
  theorems->add_flag("--quiet", f.quiet, "Print only failing verdicts and the summary");

  CLI::App* scan = app.add_subcommand("scan", "beta_P(G) and beta_P(complement) over a corpus");
  add_source_flags(scan, f.source);
  add_run_flags(scan, f);
  scan->add_option("--property", f.property, "P-matching property")->required();
  scan->add_flag("--quiet", f.quiet, "Print only the summary");

  CLI::App* generate_cmd = app.add_subcommand("generate", "Print a graph as an edge list");
  add_source_flags(generate_cmd, f.source);

  CLI::App* oracle = app.add_subcommand("oracle", "Brute-force reference values");
  oracle->group("");
  add_source_flags(oracle, f.source);
  add_run_flags(oracle, f);
  oracle->add_option("--params", f.params, "Comma separated parameter tags, or all")
      ->delimiter(',');

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (compute->parsed()) return cmd_compute(f, out);
    if (verify->parsed()) return cmd_verify(f, out);
    if (theorems->parsed()) return cmd_theorems(f, out);
    if (scan->parsed()) return cmd_scan(f, out);
    if (generate_cmd->parsed()) return cmd_generate(f, out);
    if (oracle->parsed()) return cmd_oracle(f, out);
  } catch (const UsageError& e) {
    err << "pmatch: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "pmatch: " << error_kind_name(e.kind()) << ": " << e.what() << '\n';
    return exit_code_for(e);
  }
  return kExitUsage;
}

}  // namespace pmatch::cli
