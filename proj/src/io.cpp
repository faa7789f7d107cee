#include "augcube/io.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "augcube/error.hpp"
#include "augcube/oracle.hpp"

namespace augcube {

Json edges_to_json(std::span<const Edge> edges, int n) {
  Json out = Json::array();
  for (const Edge& e : edges) out.push_back({label(e.u, n), label(e.v, n)});
  return out;
}

std::vector<Edge> edges_from_json(const Json& j, int n) {
  std::vector<Edge> out;
  for (const auto& pair : j) {
    out.push_back(Edge::make(parse_label(pair.at(0).get<std::string>(), n),
                             parse_label(pair.at(1).get<std::string>(), n)));
  }
  return out;
}

Json graph_to_json(const CubeGraph& g) {
  const int n = g.dimension();
  const auto edges = g.edges();
  return Json{{"artifact", "graph"},
              {"n", n},
              {"kind", to_string(g.kind())},
              {"generators", g.generators().labels()},
              {"vertex_count", g.vertex_count()},
              {"edge_count", edges.size()},
              {"edges", edges_to_json(edges, n)}};
}

namespace {

std::vector<std::string> matching_names(const SubcubeSelection& sel) {
  std::vector<std::string> out;
  for (const auto& id : sel.chosen()) out.push_back(id.name());
  return out;
}

std::vector<std::string> labels_of(std::span<const Vertex> vs, int n) {
  std::vector<std::string> out;
  for (Vertex v : vs) out.push_back(label(v, n));
  return out;
}

SubcubeSelection selection_from_json(const Json& names, int n) {
  std::vector<MatchingId> ids;
  for (const auto& name : names) ids.push_back(parse_matching(name.get<std::string>()));
  return SubcubeSelection(n, std::move(ids));
}

int expected_edhc_count(GraphKind host, int n) {
  if (host == GraphKind::Hypercube) return n / 2;
  return n % 2 == 1 ? n - 1 : n - 2;
}

std::string edge_text(const Edge& e, int n) { return "(" + label(e.u, n) + ", " + label(e.v, n) + ")"; }

ArtifactCheck fail(std::string detail) { return ArtifactCheck{false, std::move(detail)}; }

}  // namespace

Json subcube_to_json(const SpanningSubcube& sub) {
  const int n = sub.dimension();
  const auto edges = sub.edges();
  return Json{{"n", n},
              {"kind", "Cayley"},
              {"matchings", matching_names(sub.selection)},
              {"generators", sub.selection.generators().labels()},
              {"witness", labels_of(sub.witness.columns(), n)},
              {"edges", edges_to_json(edges, n)}};
}

Json pair_to_json(const SubcubePair& pair) {
  const int n = pair.first.dimension();
  const auto a = pair.first.edges();
  const auto b = pair.second.edges();
  const auto common = edge_intersection(a, b);
  const auto shared = shared_matching(pair.first.selection, pair.second.selection);
  return Json{{"artifact", "pair"},
              {"n", n},
              {"first", subcube_to_json(pair.first)},
              {"second", subcube_to_json(pair.second)},
              {"intersection", {{"matching", shared ? shared->name() : ""}, {"edges", edges_to_json(common, n)}}},
              {"union_size", edge_union(a, b).size()}};
}

Json fn_table_to_json(int max_n) {
  if (max_n < 2 || max_n > kMaxDimension) throw Error(ErrorKind::InvalidDimension, "fn-table needs 2 <= max <= 30");
  Json rows = Json::array();
  for (int n = 2; n <= max_n; ++n) {
    Json row{{"n", n}, {"f", f_lower_bound(n).str()}};
    if (n <= 10) row["exhaustive"] = enumerate_cayley_index_subsets(n).size();
    rows.push_back(row);
  }
  return Json{{"artifact", "fn-table"}, {"max", max_n}, {"rows", rows}};
}

Json subcubes_to_json(int n) {
  if (n < 2 || n > 10) throw Error(ErrorKind::OutOfDeskScale, "subcube listing handles 2 <= n <= 10");
  Json list = Json::array();
  for (const auto& gens : enumerate_cayley_generator_subsets(n)) {
    const auto sel = SubcubeSelection::from_generators(gens);
    list.push_back({{"matchings", matching_names(sel)}, {"generators", gens.labels()}});
  }
  return Json{{"artifact", "subcubes"}, {"n", n}, {"count", list.size()}, {"f", f_lower_bound(n).str()},
              {"selections", list}};
}

Json cycle_to_json(const CycleSequence& c, int n) { return labels_of(c.vertices, n); }

CycleSequence cycle_from_json(const Json& j, int n) {
  CycleSequence c;
  for (const auto& v : j) c.vertices.push_back(parse_label(v.get<std::string>(), n));
  return c;
}

Json edhc_report_to_json(const EdhcReport& r, int n) {
  Json out{{"pass", r.pass}};
  if (!r.pass) {
    out["violation"] = r.violation;
    out["cycle"] = r.cycle;
    if (r.edge) out["edge"] = {label(r.edge->u, n), label(r.edge->v, n)};
  }
  return out;
}

Json bundle_to_json(const EdhcBundle& b) {
  Json cycles = Json::array();
  for (const auto& c : b.cycles) cycles.push_back(cycle_to_json(c, b.n));
  return Json{{"artifact", "edhc"}, {"host", to_string(b.host)}, {"n", b.n}, {"m", b.cycles.size()},
              {"cycles", cycles}};
}

EdhcBundle bundle_from_json(const Json& j) {
  EdhcBundle b;
  const std::string host = j.at("host").get<std::string>();
  if (host == "AQ") {
    b.host = GraphKind::AugmentedCube;
  } else if (host == "Q") {
    b.host = GraphKind::Hypercube;
  } else {
    throw Error(ErrorKind::InvalidInput, "unknown host '" + host + "'");
  }
  b.n = j.at("n").get<int>();
  for (const auto& c : j.at("cycles")) b.cycles.push_back(cycle_from_json(c, b.n));
  return b;
}

Json fault_set_to_json(const FaultSet& f) {
  return edges_to_json(std::vector<Edge>(f.faulty.begin(), f.faulty.end()), f.n);
}

FaultSet fault_set_from_json(const Json& j, int n) { return FaultSet::make(n, edges_from_json(j, n)); }

Json verdict_to_json(const SubcubeVerdict& v) {
  Json out{{"kind", to_string(v.kind)}, {"internal_faults", v.internal_faults},
           {"degree_two_vertices", v.degree_two_vertices}};
  if (!v.reason.empty()) out["reason"] = v.reason;
  return out;
}

Json trial_to_json(const TrialReport& t, int n, bool with_cycles) {
  Json out{{"seed", t.seed}, {"pattern", to_string(t.pattern)}, {"faults", fault_set_to_json(t.faults)},
           {"conditional_ok", t.conditional_ok}, {"route", to_string(t.spectrum.route)}};
  if (t.selection) {
    out["selection"] = t.selection->subcube.selection.generators().labels();
    out["selection_matchings"] = matching_names(t.selection->subcube.selection);
    out["selection_route"] = to_string(t.selection->route);
    out["verdict"] = verdict_to_json(t.selection->verdict);
    out["internal_faults"] = t.selection->verdict.internal_faults;
  } else {
    out["selection"] = nullptr;
    out["internal_faults"] = nullptr;
  }
  out["spectrum_complete"] = t.spectrum.complete();
  out["missing_lengths"] = t.spectrum.missing_lengths;
  out["expansions"] = t.spectrum.expansions;
  if (!t.spectrum_problem.empty()) out["spectrum_problem"] = t.spectrum_problem;
  if (with_cycles) {
    Json cycles = Json::object();
    for (const auto& [len, c] : t.spectrum.cycles) cycles[std::to_string(len)] = cycle_to_json(c, n);
    out["cycles"] = cycles;
  }
  return out;
}

Json subgraph_count_to_json(int n) {
  const auto found = enumerate_qn_spanning_subgraphs(n).size();
  const std::size_t claimed = n == 2 ? 3 : 45;
  return Json{{"artifact", "oracle-subgraph-count"}, {"n", n}, {"count", found}, {"claimed", claimed},
              {"verdict", found == claimed}};
}

Json four_cycles_to_json(int n) {
  const CubeGraph g = build_augmented_cube(n);
  std::uint64_t worst = 0;
  for (const Edge& e : g.edges()) worst = std::max(worst, per_edge_4cycles(g, e));
  const std::uint64_t count = count_4cycles(g);
  const std::int64_t formula = (std::int64_t{1} << (n - 2)) * (2 * n * n + 5 * n - 11);
  const auto bound = static_cast<std::uint64_t>(2 * n + 8);
  const bool formula_holds = static_cast<std::int64_t>(count) == formula;
  return Json{{"artifact", "oracle-four-cycles"}, {"n", n},
              {"count", count}, {"formula", formula}, {"formula_holds", formula_holds},
              {"per_edge_max", worst}, {"per_edge_bound", bound}, {"bound_holds", worst <= bound},
              {"verdict", formula_holds && worst <= bound}};
}

Json table1_check_to_json(const std::vector<Table1Row>& rows) {
  const auto found = enumerate_qn_spanning_subgraphs(3);
  const std::set<std::vector<Edge>> enumerated(found.begin(), found.end());
  std::set<std::vector<Edge>> table;
  Json listed = Json::array();
  Json not_subcubes = Json::array();
  Json repeated = Json::array();
  for (const auto& row : rows) {
    auto edges = row.edges;
    std::sort(edges.begin(), edges.end());
    if (!enumerated.contains(edges)) not_subcubes.push_back(row.row);
    if (!table.insert(edges).second) repeated.push_back(row.row);
    listed.push_back({{"row", row.row}, {"printed_pairs", row.printed_pairs}, {"edges", edges_to_json(row.edges, 3)}});
  }
  std::size_t missing = 0;
  for (const auto& e : enumerated) missing += table.contains(e) ? 0 : 1;
  const bool equal = table == enumerated;
  return Json{{"artifact", "oracle-table1"},
              {"table_rows", rows.size()},
              {"distinct_sets", table.size()},
              {"enumerated", enumerated.size()},
              {"rows_not_subcubes", not_subcubes},
              {"rows_repeating_earlier", repeated},
              {"enumerated_missing_from_table", missing},
              {"equal_as_sets", equal},
              {"verdict", equal && rows.size() == enumerated.size()},
              {"rows", listed}};
}

namespace {

ArtifactCheck check_graph(const Json& a) {
  const int n = a.at("n").get<int>();
  const std::string kind = a.at("kind").get<std::string>();
  std::optional<CubeGraph> g;
  if (kind == "AQ") g = build_augmented_cube(n);
  if (kind == "Q") g = build_hypercube(n);
  if (!g) return fail("graph kind '" + kind + "' cannot be rebuilt");
  if (a.at("generators").get<std::vector<std::string>>() != g->generators().labels()) {
    return fail("generators differ from " + kind + "_" + std::to_string(n));
  }
  auto edges = edges_from_json(a.at("edges"), n);
  std::sort(edges.begin(), edges.end());
  if (edges != g->edges()) return fail("edge set differs from " + kind + "_" + std::to_string(n));
  if (a.at("edge_count").get<std::size_t>() != edges.size() ||
      a.at("vertex_count").get<std::size_t>() != g->vertex_count()) {
    return fail("recorded counts disagree with the edge list");
  }
  return {};
}

ArtifactCheck check_fn_table(const Json& a) {
  for (const auto& row : a.at("rows")) {
    const int n = row.at("n").get<int>();
    if (row.at("f").get<std::string>() != f_lower_bound(n).str()) return fail("f(" + std::to_string(n) + ") differs");
    if (row.contains("exhaustive")) {
      const auto count = enumerate_cayley_index_subsets(n).size();
      if (row.at("exhaustive").get<std::size_t>() != count || BigInt(count) != f_lower_bound(n)) {
        return fail("exhaustive basis count for n = " + std::to_string(n) + " differs");
      }
    }
  }
  return {};
}

ArtifactCheck check_subcubes(const Json& a) {
  const int n = a.at("n").get<int>();
  std::vector<std::vector<std::string>> seen;
  for (const auto& s : a.at("selections")) {
    const auto sel = selection_from_json(s.at("matchings"), n);
    if (!sel.full_rank()) return fail("selection is not a basis");
    if (s.at("generators").get<std::vector<std::string>>() != sel.generators().labels()) {
      return fail("generators do not match matchings");
    }
    seen.push_back(s.at("generators").get<std::vector<std::string>>());
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return fail("selection listed twice");
  if (BigInt(seen.size()) != f_lower_bound(n) || a.at("count").get<std::size_t>() != seen.size()) {
    return fail("selection count differs from f(n)");
  }
  return {};
}

ArtifactCheck check_subcube(const Json& s, int n, const std::string& tag) {
  const auto sel = selection_from_json(s.at("matchings"), n);
  if (!sel.full_rank()) return fail(tag + ": selection is not a basis");
  const CubeGraph graph = build_cayley(n, sel.generators());
  std::vector<Vertex> columns;
  for (const auto& c : s.at("witness")) columns.push_back(parse_label(c.get<std::string>(), n));
  if (!validate_witness(graph, build_hypercube(n), LinearMap(columns))) return fail(tag + ": witness fails");
  auto edges = edges_from_json(s.at("edges"), n);
  std::sort(edges.begin(), edges.end());
  if (edges != graph.edges()) return fail(tag + ": edges differ from the selected matchings");
  return {};
}

ArtifactCheck check_pair(const Json& a) {
  const int n = a.at("n").get<int>();
  for (const char* side : {"first", "second"}) {
    if (auto c = check_subcube(a.at(side), n, side); !c.pass) return c;
  }
  const auto first = edges_from_json(a.at("first").at("edges"), n);
  const auto second = edges_from_json(a.at("second").at("edges"), n);
  const auto common = edge_intersection(first, second);
  const auto name = a.at("intersection").at("matching").get<std::string>();
  if (name.empty()) return fail("pair does not meet in a single matching");
  auto listed = edges_from_json(a.at("intersection").at("edges"), n);
  std::sort(listed.begin(), listed.end());
  if (common != listed || common != canonical_matching(n, parse_matching(name))) {
    return fail("intersection is not exactly " + name);
  }
  if (edge_union(first, second) != build_augmented_cube(n).edges()) return fail("union is not E(AQ_n)");
  return {};
}

ArtifactCheck check_edhc(const Json& a) {
  const EdhcBundle b = bundle_from_json(a);
  const CubeGraph host = b.host == GraphKind::Hypercube ? build_hypercube(b.n) : build_augmented_cube(b.n);
  const EdhcReport r = verify_edhc_bundle(host, b);
  if (!r.pass) {
    std::string detail = "cycle " + std::to_string(r.cycle) + ": " + r.violation;
    if (r.edge) detail += " at edge " + edge_text(*r.edge, b.n);
    return fail(detail);
  }
  const int expected = expected_edhc_count(b.host, b.n);
  if (static_cast<int>(b.cycles.size()) != expected) {
    return fail(std::to_string(b.cycles.size()) + " cycles, expected " + std::to_string(expected));
  }
  return {};
}

ArtifactCheck check_trials(const Json& a) {
  const int n = a.at("n").get<int>();
  const int count = a.at("faults").get<int>();
  for (const auto& t : a.at("trials")) {
    const auto seed = t.at("seed").get<std::uint64_t>();
    const std::string tag = "trial seed " + std::to_string(seed);
    const FaultSet faults = fault_set_from_json(t.at("faults"), n);
    const FaultPattern pattern = parse_fault_pattern(t.at("pattern").get<std::string>());
    if (generate_faults(n, count, pattern, seed).faulty != faults.faulty) {
      return fail(tag + ": fault set does not replay from its seed");
    }
    if (!conditional_model_ok(n, faults) || !t.at("conditional_ok").get<bool>()) {
      return fail(tag + ": faults break the conditional model");
    }
    if (!t.at("selection").is_null()) {
      const auto sel = selection_from_json(t.at("selection_matchings"), n);
      const SubcubeVerdict v = prop52_admissible(subcube_from_selection(sel), faults);
      if (v.internal_faults != t.at("internal_faults").get<int>()) return fail(tag + ": internal fault count differs");
      if (!v.usable() || v.internal_faults > 3 * n - 8) return fail(tag + ": selected subcube is not admissible");
    }
    SpectrumReport spectrum;
    spectrum.n = n;
    if (t.contains("cycles")) {
      for (const auto& [len, c] : t.at("cycles").items()) spectrum.cycles.emplace(std::stoi(len), cycle_from_json(c, n));
      spectrum.missing_lengths = t.at("missing_lengths").get<std::vector<int>>();
    } else {
      spectrum = even_cycle_spectrum(n, faults);
    }
    if (auto problem = check_spectrum(n, faults, spectrum); !problem.empty()) return fail(tag + ": " + problem);
    if (!spectrum.complete() || !t.at("spectrum_complete").get<bool>()) {
      return fail(tag + ": spectrum incomplete");
    }
  }
  return {};
}

ArtifactCheck check_regenerated(const Json& a, const Json& fresh) {
  if (a != fresh) return fail("recorded values differ from a fresh run");
  return {};
}

std::vector<Table1Row> rows_from_json(const Json& a) {
  std::vector<Table1Row> rows;
  for (const auto& r : a.at("rows")) {
    Table1Row row;
    row.row = r.at("row").get<int>();
    row.edges = edges_from_json(r.at("edges"), 3);
    row.printed_pairs = r.at("printed_pairs").get<std::size_t>();
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

ArtifactCheck verify_artifact(const Json& artifact) {
  try {
    if (!artifact.is_object() || !artifact.contains("artifact")) return fail("not a tagged artifact");
    const std::string kind = artifact.at("artifact").get<std::string>();
    if (kind == "graph") return check_graph(artifact);
    if (kind == "fn-table") return check_fn_table(artifact);
    if (kind == "subcubes") return check_subcubes(artifact);
    if (kind == "pair") return check_pair(artifact);
    if (kind == "edhc") return check_edhc(artifact);
    if (kind == "fault-trial") return check_trials(artifact);
    if (kind == "oracle-subgraph-count") {
      return check_regenerated(artifact, subgraph_count_to_json(artifact.at("n").get<int>()));
    }
    if (kind == "oracle-four-cycles") {
      return check_regenerated(artifact, four_cycles_to_json(artifact.at("n").get<int>()));
    }
    if (kind == "oracle-table1") return check_regenerated(artifact, table1_check_to_json(rows_from_json(artifact)));
    return fail("unknown artifact kind '" + kind + "'");
  } catch (const Error& e) {
    return fail(e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(std::string("malformed artifact: ") + e.what());
  }
}

std::string to_dot(int n, std::span<const Edge> edges, const std::vector<std::vector<Edge>>& groups) {
  static constexpr std::array<const char*, 8> kPalette{"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                                        "#ff7f0e", "#17becf", "#8c564b", "#e377c2"};
  std::vector<std::set<Edge>> sets;
  for (const auto& g : groups) sets.emplace_back(g.begin(), g.end());
  std::ostringstream out;
  out << "graph AQ" << n << " {\n  node [shape=circle, fontsize=10];\n";
  for (Vertex v = 0; v < (Vertex{1} << n); ++v) out << "  \"" << label(v, n) << "\";\n";
  for (const Edge& e : edges) {
    const auto cls = classify_edge(n, e);
    out << "  \"" << label(e.u, n) << "\" -- \"" << label(e.v, n) << "\" [";
    if (cls) {
      out << "style=" << (cls->kind == EdgeKind::Hypercube ? "solid" : "dashed") << ", label=\""
          << (cls->kind == EdgeKind::Hypercube ? "" : "<=") << cls->dimension << "\"";
    }
    for (std::size_t k = 0; k < sets.size(); ++k) {
      if (sets[k].contains(e)) {
        out << ", color=\"" << kPalette[k % kPalette.size()] << "\"";
        break;
      }
    }
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace augcube
