// Command-line front end: compute/decide/verify/construct plus the
// orientation solvers, the small-graph table, and the hierarchy checker.
#include <cstdio>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "antiram/copies.hpp"
#include "antiram/orientations.hpp"
#include "antiram/patterns.hpp"
#include "antiram/registry.hpp"
#include "antiram/search.hpp"
#include "antiram/witness.hpp"

using namespace antiram;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInexact = 2;

struct CommonOpts {
  std::string graph_spec;
  std::string pattern_spec;
  std::string phi = "od";
  int n = 0;
  int m = 0;
  int k = 0;
  int threads = 1;
  double budget_secs = 60.0;
  long long budget_nodes = 100'000'000;
  bool json_out = false;
  std::string out_path;
  std::string in_path;
  std::string registry_path;
  std::string mode = "omo";
  int max_edges = 4;
  int max_order = 8;
};

PhiKind parse_phi(const std::string& s) {
  auto k = phi_kind_from_string(s);
  if (!k) throw error("unknown phi kind (use ar|lr|sod|od|cf|sp|cp|lp): " + s);
  return *k;
}

OrderKind parse_mode(const std::string& s) {
  if (s == "omo") return OrderKind::OMO;
  if (s == "oeo") return OrderKind::OEO;
  throw error("mode must be omo or oeo");
}

Budget make_budget(const CommonOpts& o) {
  return Budget{o.budget_nodes, o.budget_secs};
}

const Registry& registry_for(const CommonOpts& o) {
  static std::optional<Registry> loaded;
  if (!o.registry_path.empty()) {
    if (!loaded) loaded = Registry::load_file(o.registry_path);
    return *loaded;
  }
  return Registry::builtin();
}

std::string format_colors(const EdgeColoring& psi) {
  std::string s = "[";
  for (size_t i = 0; i < psi.color.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(psi.color[i]);
  }
  return s + "]";
}

json outcome_to_json(const SearchOutcome& o) {
  json j;
  j["pattern"] = o.pattern_name;
  j["n"] = o.host_order;
  j["kind"] = std::string(to_string(o.kind));
  j["phi"] = o.phi;
  j["exact"] = o.exhausted;
  j["achievable"] = o.achievable;
  j["achievable_complete"] = o.full_set;
  j["achievable_gaps"] = o.gaps();
  if (o.witness) j["witness_colors"] = o.witness->color;
  j["nodes"] = o.stats.nodes;
  j["good_copy_prunes"] = o.stats.good_copy_prunes;
  j["seconds"] = o.stats.seconds;
  return j;
}

void maybe_emit_witness(const CommonOpts& o, const EdgeColoring& psi,
                        const std::string& pattern, PhiKind kind) {
  if (o.out_path.empty()) return;
  Witness w;
  w.coloring = psi;
  w.kind = kind;
  w.pattern = pattern;
  w.m = psi.color_count;
  w.verified = true;  // callers only emit scans that already passed
  write_witness_file(w, o.out_path);
  std::printf("witness written to %s\n", o.out_path.c_str());
}

int cmd_compute(const CommonOpts& o) {
  Graph g = parse_graph(o.graph_spec);
  PhiKind kind = parse_phi(o.phi);
  SearchOutcome out = phi_exact(g, o.n, kind, make_budget(o), o.threads);
  if (o.json_out) {
    std::printf("%s\n", outcome_to_json(out).dump(2).c_str());
  } else {
    std::printf("pattern %s (%d vertices, %d edges), host K_%d, kind %s\n",
                g.name.c_str(), g.order, g.size(), o.n,
                std::string(to_string(kind)).c_str());
    std::printf("phi = %lld%s\n", out.phi,
                out.exhausted ? "" : "  (lower bound: budget exhausted)");
    std::string set;
    for (int m : out.achievable) set += (set.empty() ? "" : " ") + std::to_string(m);
    std::printf("avoidable color counts: {%s}%s\n", set.c_str(),
                out.gaps().empty() ? "" : "  [non-contiguous]");
    if (out.witness)
      std::printf("witness m=%d: %s\n", out.witness->color_count,
                  format_colors(*out.witness).c_str());
    std::printf("nodes=%lld prunes=%lld time=%.3fs\n", out.stats.nodes,
                out.stats.good_copy_prunes, out.stats.seconds);
  }
  if (out.witness) maybe_emit_witness(o, *out.witness, o.graph_spec, kind);
  else if (!o.out_path.empty()) throw error("no witness to emit");
  return out.exhausted ? kExitOk : kExitInexact;
}

int cmd_decide(const CommonOpts& o) {
  Graph g = parse_graph(o.graph_spec);
  PhiKind kind = parse_phi(o.phi);
  AvoidResult res = avoidable(g, o.n, o.m, kind, make_budget(o), o.threads);
  if (o.json_out) {
    json j;
    j["pattern"] = g.name;
    j["n"] = o.n;
    j["kind"] = std::string(to_string(kind));
    j["m"] = o.m;
    j["avoidable"] = res.witness.has_value();
    j["exhausted"] = res.exhausted;
    if (res.witness) j["witness_colors"] = res.witness->color;
    j["nodes"] = res.stats.nodes;
    j["seconds"] = res.stats.seconds;
    std::printf("%s\n", j.dump(2).c_str());
  } else if (res.witness) {
    std::printf("avoidable: a %d-coloring of K_%d with no %s-good %s exists\n",
                o.m, o.n, std::string(to_string(kind)).c_str(), g.name.c_str());
    std::printf("witness: %s\n", format_colors(*res.witness).c_str());
  } else if (res.exhausted) {
    std::printf("not avoidable: every %d-coloring of K_%d contains a %s-good %s\n",
                o.m, o.n, std::string(to_string(kind)).c_str(), g.name.c_str());
  } else {
    std::printf("unresolved: budget exhausted\n");
  }
  if (res.witness) maybe_emit_witness(o, *res.witness, o.graph_spec, kind);
  return res.exhausted || res.witness ? kExitOk : kExitInexact;
}

int cmd_verify(const CommonOpts& o) {
  EdgeColoring psi;
  Graph g;
  PhiKind kind;
  std::string pattern_name;
  int claimed_m = -1;
  if (!o.in_path.empty()) {
    Witness w = read_witness_file(o.in_path);
    psi = w.coloring;
    g = parse_graph(w.pattern);
    kind = w.kind;
    pattern_name = w.pattern;
    claimed_m = w.m;
  } else {
    if (o.pattern_spec.empty() || o.graph_spec.empty())
      throw error("verify needs --pattern and --graph (or --in <witness>)");
    PatternSpec spec = parse_pattern(o.pattern_spec);
    psi = generate(spec, o.n);
    g = parse_graph(o.graph_spec);
    kind = parse_phi(o.phi);
    pattern_name = o.graph_spec;
  }
  bool ok = verify_lower_bound(psi, g, kind);
  bool m_ok = claimed_m < 0 || claimed_m == psi.color_count;
  if (o.json_out) {
    json j;
    j["certificate"] = ok;
    j["colors"] = psi.color_count;
    j["claimed_m_matches"] = m_ok;
    if (ok) j["implied_bound"] = psi.color_count + 1;
    std::printf("%s\n", j.dump(2).c_str());
  } else {
    std::printf("coloring of K_%d with %d colors, kind %s, pattern %s\n",
                psi.n, psi.color_count, std::string(to_string(kind)).c_str(),
                g.name.c_str());
    if (!m_ok)
      std::printf("claimed m=%d does not match the color count %d\n",
                  claimed_m, psi.color_count);
    if (ok)
      std::printf("certificate: true  (no %s-good copy; implies phi >= %d)\n",
                  std::string(to_string(kind)).c_str(), psi.color_count + 1);
    else
      std::printf("certificate: FALSE (a %s-good copy exists)\n",
                  std::string(to_string(kind)).c_str());
  }
  if (ok && m_ok) maybe_emit_witness(o, psi, pattern_name, kind);
  return ok && m_ok ? kExitOk : kExitUsage;
}

int cmd_construct(const CommonOpts& o) {
  PatternSpec spec = parse_pattern(o.pattern_spec);
  EdgeColoring psi = generate(spec, o.n);
  auto claimed = claimed_colors(spec, o.n);
  if (o.json_out) {
    json j;
    j["pattern"] = o.pattern_spec;
    j["n"] = o.n;
    j["colors"] = psi.color;
    j["color_count"] = psi.color_count;
    if (claimed) j["claimed_colors"] = *claimed;
    std::printf("%s\n", j.dump(2).c_str());
  } else {
    std::printf("%s on K_%d: %d colors%s\n", o.pattern_spec.c_str(), o.n,
                psi.color_count,
                claimed ? "" : " (construction-defined count)");
    std::printf("colors: %s\n", format_colors(psi).c_str());
  }
  return kExitOk;
}

int cmd_orient(const CommonOpts& o, bool count_only) {
  Graph g = parse_graph(o.graph_spec);
  OrderKind kind = parse_mode(o.mode);
  if (count_only) {
    long long c = count_orderings(g, kind);
    if (o.json_out) {
      json j;
      j["graph"] = g.name;
      j["mode"] = std::string(to_string(kind));
      j["count"] = c;
      std::printf("%s\n", j.dump(2).c_str());
    } else {
      std::printf("%s admits %lld %s permutation(s) of its %d vertices\n",
                  g.name.c_str(), c, std::string(to_string(kind)).c_str(),
                  g.order);
    }
    return kExitOk;
  }
  auto res = solve_ordering(g, kind);
  if (o.json_out) {
    json j;
    j["graph"] = g.name;
    j["mode"] = std::string(to_string(kind));
    j["exists"] = res.has_value();
    if (res) {
      j["permutation"] = res->perm;
      j["backward_counts"] = res->backward;
    }
    std::printf("%s\n", j.dump(2).c_str());
    return kExitOk;
  }
  if (!res) {
    std::printf("%s admits no %s\n", g.name.c_str(),
                kind == OrderKind::OMO ? "odd-majority orientation"
                                       : "odd-even ordering");
    return kExitOk;
  }
  std::string perm, back;
  for (int v : res->perm) perm += (perm.empty() ? "" : " ") + std::to_string(v);
  for (int v = 0; v < g.order; ++v)
    back += (back.empty() ? "" : " ") + std::to_string(res->backward[v]);
  std::printf("ordering found: %s\n", perm.c_str());
  std::printf("backward neighbor counts per vertex: %s\n", back.c_str());
  return kExitOk;
}

const std::vector<std::string>& table_rows() {
  static const std::vector<std::string> rows = {
      "P2",   "P3",        "2P2",  "P4",   "union:P3+P2",  "K1,3",
      "3P2",  "C3",        "K1,3+", "union:K1,3+P2", "paw",
      "union:P3+2P2", "union:C3+P2", "union:P4+P2", "P5", "2P3",
      "K1,4", "C4",        "4P2",  "P6",   "K4-e", "K4"};
  return rows;
}

int cmd_table(const CommonOpts& o) {
  const Registry& reg = registry_for(o);
  bool any_inexact = false;
  int findings = 0, mismatches = 0;
  json jrows = json::array();
  if (!o.json_out) {
    std::printf("host K_%d, rows with at most %d edges; cells from exhaustive "
                "search, compared against the registry\n",
                o.n, o.max_edges);
    std::printf("%-10s", "G");
    for (PhiKind k : kAllPhiKinds)
      std::printf(" %12s", std::string(to_string(k)).c_str());
    std::printf("\n");
  }
  for (const auto& row : table_rows()) {
    Graph g = parse_graph(row);
    if (g.size() > o.max_edges || g.order > o.n) continue;
    json jrow;
    jrow["pattern"] = g.name;
    if (!o.json_out) std::printf("%-10s", g.name.c_str());
    for (PhiKind kind : kAllPhiKinds) {
      SearchOutcome out = phi_exact(g, o.n, kind, make_budget(o), o.threads);
      KnownValue kv = reg.known(kind, g.name, o.n);
      std::string cell = std::to_string(out.phi);
      std::string flag;
      if (!out.exhausted) {
        any_inexact = true;
        cell = ">=" + std::to_string(out.phi);
      } else if (kv.status == KnownValue::Status::Exact && !kv.asymptotic) {
        if (kv.value == out.phi) {
          flag = "=";
        } else if (kv.small_n_caveat) {
          flag = "!table(" + std::to_string(kv.value) + ")";
          ++findings;
        } else {
          flag = "MISMATCH(" + std::to_string(kv.value) + ")";
          ++mismatches;
        }
      } else if (kv.status == KnownValue::Status::Exact) {
        flag = "asym(" + std::to_string(kv.value) + ")";
      } else if (kv.status == KnownValue::Status::Bounds) {
        bool in = (!kv.lower || out.phi >= *kv.lower) &&
                  (!kv.upper || out.phi <= *kv.upper);
        if (in) flag = "in-bounds";
        else if (kv.small_n_caveat) { flag = "!bounds"; ++findings; }
        else { flag = "OUT-OF-BOUNDS"; ++mismatches; }
      }
      jrow[std::string(to_string(kind))] = {{"phi", out.phi},
                                            {"exact", out.exhausted},
                                            {"registry", flag}};
      if (!o.json_out)
        std::printf(" %12s", (cell + (flag.empty() ? "" : " " + flag)).c_str());
    }
    if (!o.json_out) std::printf("\n");
    jrows.push_back(jrow);
  }
  if (o.json_out) {
    json j;
    j["n"] = o.n;
    j["rows"] = jrows;
    j["small_n_findings"] = findings;
    j["mismatches"] = mismatches;
    std::printf("%s\n", j.dump(2).c_str());
  } else {
    std::printf("legend: '=' matches registry; '!...' differs under the "
                "small-host caveat (finding); MISMATCH differs from a "
                "validity-covered exact value\n");
    if (findings) std::printf("small-host findings: %d\n", findings);
    if (mismatches) std::printf("registry mismatches: %d\n", mismatches);
  }
  return any_inexact ? kExitInexact : kExitOk;
}

int cmd_check_hierarchy(const CommonOpts& o) {
  Graph g = parse_graph(o.graph_spec);
  std::map<PhiKind, long long> values;
  bool all_exact = true;
  for (PhiKind kind : kAllPhiKinds) {
    SearchOutcome out = phi_exact(g, o.n, kind, make_budget(o), o.threads);
    if (!out.exhausted) {
      all_exact = false;
      continue;
    }
    values[kind] = out.phi;
  }
  auto violations = check_hierarchy(values);
  if (o.json_out) {
    json j;
    j["pattern"] = g.name;
    j["n"] = o.n;
    for (auto& [k, v] : values) j["values"][std::string(to_string(k))] = v;
    j["violations"] = violations;
    j["all_exact"] = all_exact;
    std::printf("%s\n", j.dump(2).c_str());
  } else {
    std::printf("%s at n=%d:", g.name.c_str(), o.n);
    for (PhiKind k : kAllPhiKinds) {
      if (values.count(k))
        std::printf(" %s=%lld", std::string(to_string(k)).c_str(), values[k]);
      else
        std::printf(" %s=?", std::string(to_string(k)).c_str());
    }
    std::printf("\n");
    if (violations.empty())
      std::printf("hierarchy: no violations\n");
    else
      for (auto& v : violations) std::printf("hierarchy VIOLATION: %s\n", v.c_str());
  }
  if (!violations.empty()) return kExitUsage;
  return all_exact ? kExitOk : kExitInexact;
}

int cmd_canonical_clique(const CommonOpts& o) {
  PatternSpec spec = parse_pattern(o.pattern_spec);
  EdgeColoring psi = generate(spec, o.n);
  auto found = find_canonical_clique(psi, o.k);
  if (o.json_out) {
    json j;
    j["pattern"] = o.pattern_spec;
    j["n"] = o.n;
    j["k"] = o.k;
    j["found"] = found.has_value();
    if (found) {
      j["vertices"] = found->vertices;
      j["tag"] = std::string(to_string(found->tag));
    }
    std::printf("%s\n", j.dump(2).c_str());
  } else if (found) {
    std::string vs;
    for (int v : found->vertices) vs += (vs.empty() ? "" : " ") + std::to_string(v);
    std::printf("found K_%d on {%s}, tag %s\n", o.k, vs.c_str(),
                std::string(to_string(found->tag)).c_str());
  } else {
    std::printf("no monochromatic, rainbow, or lex K_%d found\n", o.k);
  }
  return kExitOk;
}

int cmd_experiment(const CommonOpts& o) {
  auto scan = scan_bipartite_independent_even(o.max_order);
  if (o.json_out) {
    json j;
    j["max_order"] = o.max_order;
    j["connected_bipartite_scanned"] = scan.graphs_scanned;
    j["with_independent_even_set"] = scan.with_property;
    j["counterexamples"] = json::array();
    for (auto& g : scan.counterexamples) {
      json e = json::array();
      for (auto [u, v] : g.edges) e.push_back({u, v});
      j["counterexamples"].push_back({{"order", g.order}, {"edges", e}});
    }
    std::printf("%s\n", j.dump(2).c_str());
  } else {
    std::printf("connected bipartite graphs scanned (labelled, <=%d vertices): %lld\n",
                o.max_order, scan.graphs_scanned);
    std::printf("with an independent even-degree vertex set: %lld\n",
                scan.with_property);
    if (scan.counterexamples.empty()) {
      std::printf("all of them admit an odd-majority orientation; "
                  "no counterexample found\n");
    } else {
      std::printf("COUNTEREXAMPLES (no odd-majority orientation): %zu\n",
                  scan.counterexamples.size());
      for (auto& g : scan.counterexamples) {
        std::string es;
        for (auto [u, v] : g.edges)
          es += (es.empty() ? "" : ",") + std::to_string(u) + "-" + std::to_string(v);
        std::printf("  order %d: %s\n", g.order, es.c_str());
      }
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computation, construction, and verification for "
               "parity-constrained anti-Ramsey functions on K_n"};
  app.require_subcommand(1);
  CommonOpts o;

  auto add_budget = [&](CLI::App* c) {
    c->add_option("--threads", o.threads, "worker threads for the search");
    c->add_option("--budget-secs", o.budget_secs, "wall-time budget per search");
    c->add_option("--budget-nodes", o.budget_nodes, "node budget per search");
  };
  auto add_common = [&](CLI::App* c) {
    c->add_flag("--json", o.json_out, "machine-readable output");
    c->add_option("--registry", o.registry_path, "override the built-in registry file");
  };

  auto* compute = app.add_subcommand("compute", "exact phi(n,G) for one kind");
  compute->add_option("--graph", o.graph_spec)->required();
  compute->add_option("--n", o.n)->required();
  compute->add_option("--phi", o.phi)->required();
  compute->add_option("--out", o.out_path, "write the witness JSON here");
  add_budget(compute);
  add_common(compute);

  auto* decide = app.add_subcommand(
      "decide", "does an avoiding coloring with exactly m colors exist");
  decide->add_option("--graph", o.graph_spec)->required();
  decide->add_option("--n", o.n)->required();
  decide->add_option("--m", o.m)->required();
  decide->add_option("--phi", o.phi)->required();
  decide->add_option("--out", o.out_path);
  add_budget(decide);
  add_common(decide);

  auto* verify = app.add_subcommand(
      "verify", "certify that a coloring contains no good copy");
  verify->add_option("--pattern", o.pattern_spec, "coloring pattern to generate");
  verify->add_option("--n", o.n);
  verify->add_option("--graph", o.graph_spec, "pattern graph G to scan for");
  verify->add_option("--phi", o.phi);
  verify->add_option("--in", o.in_path, "verify a stored witness file instead");
  verify->add_option("--out", o.out_path);
  add_common(verify);

  auto* construct = app.add_subcommand("construct", "generate a coloring pattern");
  construct->add_option("--pattern", o.pattern_spec)->required();
  construct->add_option("--n", o.n)->required();
  add_common(construct);

  auto* orient = app.add_subcommand("orient", "find an odd-majority orientation "
                                              "or odd-even ordering");
  orient->add_option("--graph", o.graph_spec)->required();
  orient->add_option("--mode", o.mode, "omo (default) or oeo");
  add_common(orient);

  auto* corient = app.add_subcommand("count-orient", "count satisfying orderings");
  corient->add_option("--graph", o.graph_spec)->required();
  corient->add_option("--mode", o.mode, "omo (default) or oeo");
  add_common(corient);

  auto* table = app.add_subcommand("table", "small-graph table versus registry");
  table->add_option("--n", o.n)->required();
  table->add_option("--max-edges", o.max_edges, "largest row size (default 4)");
  add_budget(table);
  add_common(table);

  auto* hier = app.add_subcommand("check-hierarchy",
                                  "all eight functions for one graph + DAG check");
  hier->add_option("--graph", o.graph_spec)->required();
  hier->add_option("--n", o.n)->required();
  add_budget(hier);
  add_common(hier);

  auto* clique = app.add_subcommand("canonical-clique",
                                    "monochromatic/rainbow/lex clique finder");
  clique->add_option("--pattern", o.pattern_spec)->required();
  clique->add_option("--n", o.n)->required();
  clique->add_option("--k", o.k)->required();
  add_common(clique);

  auto* exp = app.add_subcommand("experiment-omo-bipartite",
                                 "scan bipartite graphs with independent "
                                 "even-degree sets for missing orientations");
  exp->add_option("--max-order", o.max_order);
  add_common(exp);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (compute->parsed()) return cmd_compute(o);
    if (decide->parsed()) return cmd_decide(o);
    if (verify->parsed()) return cmd_verify(o);
    if (construct->parsed()) return cmd_construct(o);
    if (orient->parsed()) return cmd_orient(o, false);
    if (corient->parsed()) return cmd_orient(o, true);
    if (table->parsed()) return cmd_table(o);
    if (hier->parsed()) return cmd_check_hierarchy(o);
    if (clique->parsed()) return cmd_canonical_clique(o);
    if (exp->parsed()) return cmd_experiment(o);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }
  return kExitUsage;
}
