#include "augcube/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "augcube/error.hpp"
#include "augcube/io.hpp"
#include "augcube/rng.hpp"

namespace augcube::cli {

namespace {

constexpr std::uint64_t kDefaultSeed = 20260101;

struct Outputs {
  std::string json_path;
  std::string dot_path;
};

void add_outputs(CLI::App* cmd, Outputs& o) {
  cmd->add_option("--json", o.json_path, "Also write the JSON artifact to this file");
  cmd->add_option("--dot", o.dot_path, "Write a DOT drawing to this file");
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream file(path);
  if (!file) throw Error(ErrorKind::InvalidInput, "cannot write '" + path + "'");
  file << text;
}

void emit(std::ostream& out, const Outputs& o, const Json& artifact) {
  const std::string text = artifact.dump(2) + "\n";
  out << text;
  if (!o.json_path.empty()) write_file(o.json_path, text);
}

void emit_dot(const Outputs& o, int n, std::span<const Edge> edges, const std::vector<std::vector<Edge>>& groups) {
  if (!o.dot_path.empty()) write_file(o.dot_path, to_dot(n, edges, groups));
}

std::vector<std::vector<Edge>> cycle_groups(const EdhcBundle& b) {
  std::vector<std::vector<Edge>> groups;
  for (const auto& c : b.cycles) groups.push_back(c.edges());
  return groups;
}

bool trial_failed(const TrialReport& t) {
  if (!t.conditional_ok || !t.spectrum_problem.empty() || !t.spectrum.complete()) return true;
  return t.selection && !t.selection->verdict.usable();
}

EdgeKind parse_kind(const std::string& text) {
  if (text == "hypercube") return EdgeKind::Hypercube;
  return EdgeKind::Augmented;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Augmented cubes: subcubes, Hamiltonian cycles and fault-tolerant cycles", "augcube"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);

  Outputs outputs;
  std::optional<std::uint64_t> budget;
  int n = 0;
  int exit_code = kExitOk;
  std::function<void()> action;

  auto* topology = app.add_subcommand("topology", "Build AQ_n or Q_n");
  std::string graph_kind = "AQ";
  topology->add_option("n,--n", n, "Dimension")->required()->check(CLI::Range(1, 16));
  topology->add_option("--kind", graph_kind, "AQ or Q")->check(CLI::IsMember({"AQ", "Q"}));
  add_outputs(topology, outputs);
  topology->callback([&] {
    action = [&] {
      const CubeGraph g = graph_kind == "Q" ? build_hypercube(n) : build_augmented_cube(n);
      const auto edges = g.edges();
      emit(out, outputs, graph_to_json(g));
      emit_dot(outputs, n, edges, {});
    };
  });

  auto* fn_table = app.add_subcommand("fn-table", "Closed-form f(n) against exhaustive basis counts");
  int max_n = 6;
  fn_table->add_option("--max", max_n, "Largest n")->check(CLI::Range(2, kMaxDimension));
  add_outputs(fn_table, outputs);
  fn_table->callback([&] { action = [&] { emit(out, outputs, fn_table_to_json(max_n)); }; });

  auto* subcubes = app.add_subcommand("subcubes", "Every Cayley selection of n matchings with full rank");
  subcubes->add_option("n,--n", n, "Dimension")->required()->check(CLI::Range(2, 10));
  add_outputs(subcubes, outputs);
  subcubes->callback([&] { action = [&] { emit(out, outputs, subcubes_to_json(n)); }; });

  auto* pair = app.add_subcommand("pair", "Reciprocal pair of spanning subcubes");
  std::vector<int> exchanged;
  std::optional<int> fixed_j;
  std::string edge_kind = "hypercube";
  pair->add_option("n,--n", n, "Dimension")->required()->check(CLI::Range(2, 16));
  pair->add_option("--J", exchanged, "Exchanged dimensions, comma separated")->delimiter(',');
  pair->add_option("--j", fixed_j, "Dimension of the shared matching");
  pair->add_option("--kind", edge_kind, "Kind of the shared matching")
      ->check(CLI::IsMember({"hypercube", "augmented"}));
  add_outputs(pair, outputs);
  pair->callback([&] {
    action = [&] {
      const SubcubePair p = fixed_j ? reciprocal_pair_fixed_intersection(n, *fixed_j, parse_kind(edge_kind))
                                    : reciprocal_pair(n, std::set<int>(exchanged.begin(), exchanged.end()));
      emit(out, outputs, pair_to_json(p));
      const auto all = build_augmented_cube(n).edges();
      emit_dot(outputs, n, all, {p.first.edges(), p.second.edges()});
    };
  });

  auto* edhc = app.add_subcommand("edhc", "Edge-disjoint Hamiltonian cycles");
  std::string host_kind = "AQ";
  bool verify = false;
  bool search_extra = false;
  edhc->add_option("n,--n", n, "Dimension")->required()->check(CLI::Range(2, 21));
  edhc->add_option("--host", host_kind, "AQ or Q")->check(CLI::IsMember({"AQ", "Q"}));
  edhc->add_flag("--verify", verify, "Attach the verifier report");
  edhc->add_flag("--search-extra", search_extra, "On AQ_4, also search for a third cycle");
  edhc->add_option("--budget", budget, "Expansion budget for --search-extra");
  add_outputs(edhc, outputs);
  edhc->callback([&] {
    action = [&] {
      const bool hypercube = host_kind == "Q";
      const CubeGraph host = hypercube ? build_hypercube(n) : build_augmented_cube(n);
      const EdhcBundle bundle = hypercube ? hypercube_ham_decomposition(n) : augcube_edhcs(n);
      Json artifact = bundle_to_json(bundle);
      if (verify) {
        const EdhcReport report = verify_edhc_bundle(host, bundle);
        artifact["report"] = edhc_report_to_json(report, n);
        if (!report.pass) exit_code = kExitFailed;
      }
      if (search_extra) {
        if (hypercube || n != 4) throw Error(ErrorKind::InvalidInput, "--search-extra applies to AQ_4 only");
        std::uint64_t expansions = 0;
        const auto found = search_edhcs(host, 3, budget.value_or(50'000'000), &expansions);
        Json extra{{"target", 3}, {"found", found.has_value()}, {"expansions", expansions}};
        if (found) {
          extra["cycles"] = bundle_to_json(*found).at("cycles");
          extra["report"] = edhc_report_to_json(verify_edhc_bundle(host, *found), n);
        }
        artifact["extra_search"] = extra;
      }
      emit(out, outputs, artifact);
      const auto edges = host.edges();
      emit_dot(outputs, n, edges, cycle_groups(bundle));
    };
  });

  auto* fault_trial = app.add_subcommand("fault-trial", "Seeded conditional-fault trials");
  int fault_count = -1;
  int trials = 1;
  std::uint64_t seed = kDefaultSeed;
  std::string pattern = "random";
  bool with_cycles = false;
  n = 5;
  fault_trial->add_option("--n", n, "Dimension")->check(CLI::Range(5, 10));
  fault_trial->add_option("--faults", fault_count, "Number of faulty edges (default 4n-8)");
  fault_trial->add_option("--trials", trials, "Number of trials")->check(CLI::Range(1, 1'000'000));
  fault_trial->add_option("--seed", seed, "Base seed");
  fault_trial->add_option("--pattern", pattern, "random, vertex, matching, path2 or fig4")
      ->check(CLI::IsMember({"random", "vertex", "matching", "path2", "fig4"}));
  fault_trial->add_option("--budget", budget, "Search expansions per cycle length");
  fault_trial->add_flag("--cycles", with_cycles, "Include every cycle in the report");
  add_outputs(fault_trial, outputs);
  fault_trial->callback([&] {
    action = [&] {
      const int count = fault_count < 0 ? 4 * n - 8 : fault_count;
      SearchOptions options = default_search_options();
      if (budget) options.per_length_budget = *budget;
      const FaultPattern kind = parse_fault_pattern(pattern);
      Json list = Json::array();
      int failures = 0;
      int routed = 0;
      std::optional<FaultSet> first_faults;
      for (int i = 0; i < trials; ++i) {
        const std::uint64_t trial_seed = SplitMix64::derive(seed, static_cast<std::uint64_t>(i));
        const TrialReport t = run_fault_trial(n, count, kind, trial_seed, options);
        if (!first_faults) first_faults = t.faults;
        if (trial_failed(t)) ++failures;
        if (t.spectrum.route == SpectrumRoute::DegreeTwoVertex) ++routed;
        Json entry = trial_to_json(t, n, with_cycles);
        entry["failed"] = trial_failed(t);
        list.push_back(std::move(entry));
      }
      Json artifact{{"artifact", "fault-trial"}, {"n", n}, {"faults", count}, {"pattern", pattern},
                    {"seed", seed}, {"budget", options.per_length_budget},
                    {"summary", {{"trials", trials}, {"failures", failures}, {"degree_two_route", routed}}},
                    {"trials", list}};
      emit(out, outputs, artifact);
      if (first_faults) {
        const auto all = build_augmented_cube(n).edges();
        emit_dot(outputs, n, all, {std::vector<Edge>(first_faults->faulty.begin(), first_faults->faulty.end())});
      }
      if (failures > 0) exit_code = kExitFailed;
    };
  });

  auto* oracle = app.add_subcommand("oracle", "Brute-force checks");
  oracle->require_subcommand(1);
  auto* subgraph_count = oracle->add_subcommand("subgraph-count", "Count Q_n-isomorphic spanning subgraphs");
  subgraph_count->add_option("n,--n", n, "Dimension")->required()->check(CLI::Range(2, 3));
  add_outputs(subgraph_count, outputs);
  subgraph_count->callback([&] {
    action = [&] {
      const Json verdict = subgraph_count_to_json(n);
      emit(out, outputs, verdict);
      if (!verdict.at("verdict").get<bool>()) exit_code = kExitFailed;
    };
  });
  auto* four_cycles = oracle->add_subcommand("four-cycles", "Count 4-cycles of AQ_n");
  four_cycles->add_option("n,--n", n, "Dimension")->required()->check(CLI::Range(2, 8));
  add_outputs(four_cycles, outputs);
  four_cycles->callback([&] {
    action = [&] {
      const Json verdict = four_cycles_to_json(n);
      emit(out, outputs, verdict);
      if (!verdict.at("verdict").get<bool>()) exit_code = kExitFailed;
    };
  });
  auto* table1 = oracle->add_subcommand("table1-check", "Compare the shipped AQ_3 table with enumeration");
  std::string table_path = std::string(AUGCUBE_DATA_DIR) + "/table1_aq3.json";
  table1->add_option("--table", table_path, "Table file");
  add_outputs(table1, outputs);
  table1->callback([&] {
    action = [&] {
      const Json verdict = table1_check_to_json(load_table1(table_path));
      emit(out, outputs, verdict);
      if (!verdict.at("verdict").get<bool>()) exit_code = kExitFailed;
    };
  });

  auto* verify_cmd = app.add_subcommand("verify", "Re-check an emitted JSON artifact");
  std::string artifact_path;
  verify_cmd->add_option("file", artifact_path, "Artifact file")->required()->check(CLI::ExistingFile);
  verify_cmd->callback([&] {
    action = [&] {
      std::ifstream file(artifact_path);
      Json artifact = Json::parse(file, nullptr, false);
      const ArtifactCheck check =
          artifact.is_discarded() ? ArtifactCheck{false, "not valid JSON"} : verify_artifact(artifact);
      Json result{{"file", artifact_path},
                  {"artifact", artifact.is_object() ? artifact.value("artifact", "") : ""},
                  {"pass", check.pass}};
      if (!check.pass) result["detail"] = check.detail;
      out << result.dump(2) << "\n";
      if (!check.pass) exit_code = kExitFailed;
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kExitUsage;
  }

  try {
    action();
  } catch (const Error& e) {
    err << "augcube: " << to_string(e.kind()) << ": " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::SearchBudgetExceeded:
      case ErrorKind::InvariantViolation:
      case ErrorKind::SelectionFailed:
        return kExitFailed;
      default:
        return kExitUsage;
    }
  }
  return exit_code;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace augcube::cli
