// Acceptance gate: one PASS/FAIL line per criterion. With no argument every
// criterion runs; with a number only that one does.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "augcube/fault_model.hpp"
#include "augcube/hamiltonicity.hpp"
#include "augcube/oracle.hpp"
#include "augcube/reciprocity.hpp"
#include "augcube/rng.hpp"

using namespace augcube;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<Outcome()> body;
};

class Collector {
 public:
  void require(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  void note(const std::string& text) { notes_.push_back(text); }

  Outcome outcome() const {
    std::ostringstream out;
    const auto& lines = failures_.empty() ? notes_ : failures_;
    for (std::size_t i = 0; i < lines.size() && i < 8; ++i) out << (i ? "; " : "") << lines[i];
    if (lines.size() > 8) out << "; ... " << lines.size() - 8 << " more";
    return {failures_.empty(), out.str()};
  }

 private:
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

std::vector<Edge> sorted(std::vector<Edge> edges) {
  std::sort(edges.begin(), edges.end());
  return edges;
}

// AQ_1 = K_2; AQ_n joins 0x and 1y when x = y or x = ~y.
std::vector<Edge> recursive_augmented_cube(int n) {
  if (n == 1) return {Edge::make(0, 1)};
  const Vertex top = Vertex{1} << (n - 1);
  const Vertex low_mask = top - 1;
  std::vector<Edge> out;
  for (const Edge& e : recursive_augmented_cube(n - 1)) {
    out.push_back(e);
    out.push_back(Edge::make(e.u | top, e.v | top));
  }
  for (Vertex x = 0; x < top; ++x) {
    out.push_back(Edge::make(x, x | top));
    out.push_back(Edge::make(x, (~x & low_mask) | top));
  }
  return sorted(out);
}

Outcome structure() {
  Collector c;
  for (int n = 2; n <= 7; ++n) {
    const CubeGraph g = build_augmented_cube(n);
    const std::string tag = "n=" + std::to_string(n);
    c.require(g.vertex_count() == (std::size_t{1} << n), tag + " vertex count");
    bool regular = true;
    for (Vertex v = 0; v < g.vertex_count(); ++v) regular &= g.neighbors(v).size() == static_cast<std::size_t>(2 * n - 1);
    c.require(regular, tag + " not (2n-1)-regular");
    c.require(g.edges().size() == static_cast<std::size_t>(2 * n - 1) << (n - 1), tag + " edge count");
    const auto recursive = recursive_augmented_cube(n);
    c.require(recursive == g.edges(), tag + " recursive construction differs");
    c.require(build_cayley(n, standard_generators(n)).edges() == recursive, tag + " Cayley construction differs");
  }
  c.note("n=2..7 match the recursive construction edge for edge");
  return c.outcome();
}

int local_rank(std::vector<Vertex> rows) {
  int rank = 0;
  for (int bit = 31; bit >= 0; --bit) {
    auto pivot = std::find_if(rows.begin() + rank, rows.end(), [&](Vertex r) { return (r >> bit) & 1U; });
    if (pivot == rows.end()) continue;
    std::iter_swap(rows.begin() + rank, pivot);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (static_cast<int>(i) != rank && ((rows[i] >> bit) & 1U)) rows[i] ^= rows[rank];
    }
    ++rank;
  }
  return rank;
}

std::uint64_t count_bases(int n) {
  const auto gens = standard_generators(n).bits();
  const int m = static_cast<int>(gens.size());
  std::uint64_t count = 0;
  std::vector<bool> pick(m, false);
  std::fill(pick.begin(), pick.begin() + n, true);
  do {
    std::vector<Vertex> chosen;
    for (int i = 0; i < m; ++i) {
      if (pick[i]) chosen.push_back(gens[i]);
    }
    if (local_rank(chosen) == n) ++count;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return count;
}

Outcome f_values() {
  Collector c;
  c.require(f_lower_bound(2) == 3, "f(2) != 3");
  c.require(f_lower_bound(3) == 8, "f(3) != 8");
  std::ostringstream row;
  for (int n = 2; n <= 10; ++n) {
    const std::uint64_t exhaustive = count_bases(n);
    c.require(f_lower_bound(n) == BigInt(exhaustive),
              "n=" + std::to_string(n) + ": closed form " + f_lower_bound(n).str() + " vs " + std::to_string(exhaustive));
    row << (n > 2 ? " " : "") << exhaustive;
  }
  c.note("f(2..10) = " + row.str());
  return c.outcome();
}

Outcome census() {
  Collector c;
  const auto two = enumerate_qn_spanning_subgraphs(2);
  const auto three = enumerate_qn_spanning_subgraphs(3);
  c.require(two.size() == 3, "n=2 count " + std::to_string(two.size()) + ", expected 3");
  c.require(three.size() == 45, "n=3 count " + std::to_string(three.size()) + ", expected 45");
  const auto rows = load_table1(std::string(AUGCUBE_DATA_DIR) + "/table1_aq3.json");
  std::set<std::vector<Edge>> table;
  int not_subcube = 0;
  const std::set<std::vector<Edge>> found(three.begin(), three.end());
  for (const auto& r : rows) {
    auto e = sorted(r.edges);
    if (!found.contains(e)) ++not_subcube;
    table.insert(std::move(e));
  }
  c.require(table == found, "golden table has " + std::to_string(rows.size()) + " rows, " + std::to_string(table.size()) +
                                " distinct edge sets, " + std::to_string(not_subcube) +
                                " rows not Q_3-isomorphic; enumeration finds " + std::to_string(found.size()));
  return c.outcome();
}

void check_pair(Collector& c, const SubcubePair& p, int n, MatchingId expected, const std::string& tag) {
  const auto a = p.first.edges();
  const auto b = p.second.edges();
  c.require(edge_intersection(a, b) == canonical_matching(n, expected), tag + ": intersection is not " + expected.name());
  c.require(edge_union(a, b) == build_augmented_cube(n).edges(), tag + ": union is not E(AQ_n)");
  const CubeGraph q = build_hypercube(n);
  for (const auto* sub : {&p.first, &p.second}) {
    c.require(validate_witness(sub->graph, q, sub->witness), tag + ": witness fails");
    c.require(sub->graph.edges().size() == static_cast<std::size_t>(n) << (n - 1), tag + ": not spanning n-regular");
  }
}

Outcome reciprocity() {
  Collector c;
  int pairs = 0;
  for (int n = 2; n <= 5; ++n) {
    for (unsigned mask = 0; mask < (1U << (n - 1)); ++mask) {
      std::set<int> j;
      for (int k = 0; k < n - 1; ++k) {
        if ((mask >> k) & 1U) j.insert(k + 2);
      }
      check_pair(c, reciprocal_pair(n, j), n, MatchingId::hypercube(1), "n=" + std::to_string(n) + " J mask " + std::to_string(mask));
      ++pairs;
    }
    for (int j = 2; j <= n; ++j) {
      const std::string tag = "n=" + std::to_string(n) + " j=" + std::to_string(j);
      check_pair(c, reciprocal_pair_fixed_intersection(n, j, EdgeKind::Hypercube), n, MatchingId::hypercube(j), tag);
      check_pair(c, reciprocal_pair_fixed_intersection(n, j, EdgeKind::Augmented), n, MatchingId::augmented(j),
                 tag + " augmented");
      pairs += 2;
    }
  }
  c.note(std::to_string(pairs) + " pairs checked");
  return c.outcome();
}

Outcome minimum_overlap() {
  Collector c;
  const auto all = enumerate_qn_spanning_subgraphs(3);
  std::size_t least = SIZE_MAX;
  int minimal = 0;
  for (std::size_t a = 0; a < all.size(); ++a) {
    for (std::size_t b = a + 1; b < all.size(); ++b) {
      const auto common = edge_intersection(all[a], all[b]);
      if (common.size() < least) {
        least = common.size();
        minimal = 0;
      }
      if (common.size() == least) ++minimal;
      if (common.size() == 4) c.require(is_perfect_matching(common, 8), "minimal intersection is not a perfect matching");
    }
  }
  c.require(least == 4, "minimum intersection " + std::to_string(least));
  c.note(std::to_string(all.size()) + " enumerated subcubes, " + std::to_string(minimal) +
         " pairs meet in exactly 4 edges, all perfect matchings");
  return c.outcome();
}

Outcome four_cycles() {
  Collector c;
  std::ostringstream seen;
  for (int n = 3; n <= 5; ++n) {
    const CubeGraph g = build_augmented_cube(n);
    const std::uint64_t count = count_4cycles(g);
    const std::uint64_t formula = (std::uint64_t{1} << (n - 2)) * static_cast<std::uint64_t>(2 * n * n + 5 * n - 11);
    std::uint64_t worst = 0;
    for (const Edge& e : g.edges()) worst = std::max(worst, per_edge_4cycles(g, e));
    const std::string tag = "n=" + std::to_string(n);
    c.require(count == formula, tag + ": " + std::to_string(count) + " 4-cycles, formula " + std::to_string(formula));
    c.require(worst <= static_cast<std::uint64_t>(2 * n + 8),
              tag + ": per-edge max " + std::to_string(worst) + " > " + std::to_string(2 * n + 8));
    seen << tag << " " << count << "/" << worst << " ";
  }
  c.note(seen.str());
  return c.outcome();
}

Outcome edhcs() {
  Collector c;
  const std::map<int, std::size_t> expected{{3, 2}, {4, 2}, {5, 4}, {6, 4}};
  for (const auto& [n, count] : expected) {
    const CubeGraph host = build_augmented_cube(n);
    const EdhcBundle b = augcube_edhcs(n);
    const std::string tag = "n=" + std::to_string(n);
    c.require(b.cycles.size() == count, tag + ": " + std::to_string(b.cycles.size()) + " cycles");
    const EdhcReport r = verify_edhc_bundle(host, b);
    c.require(r.pass, tag + ": " + r.violation);
    if (n == 5) c.require(is_perfect_matching(residual_edges(host, b), host.vertex_count()), "n=5 residual is not a perfect matching");
  }
  c.note("2, 2, 4, 4 cycles verified; AQ_5 residual is a perfect matching");
  return c.outcome();
}

int min_degree(int n, const FaultSet& f) {
  const auto d = fault_free_degrees(n, f);
  return *std::min_element(d.begin(), d.end());
}

Outcome fault_tolerance() {
  constexpr int kTrials = 500;
  constexpr std::uint64_t kBaseSeed = 0xacce97;
  Collector c;
  std::ostringstream summary;
  for (int n : {5, 6}) {
    const int count = 4 * n - 8;
    for (auto pattern : {FaultPattern::Random, FaultPattern::Vertex, FaultPattern::Matching, FaultPattern::Path2}) {
      int selected = 0;
      int routed = 0;
      int failures = 0;
      std::uint64_t worst = 0;
      for (int i = 0; i < kTrials; ++i) {
        const std::uint64_t seed = SplitMix64::derive(kBaseSeed + static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(i));
        const TrialReport t = run_fault_trial(n, count, pattern, seed);
        const std::string tag = "n=" + std::to_string(n) + " " + to_string(pattern) + " seed " + std::to_string(seed);
        worst = std::max(worst, t.spectrum.expansions);
        bool ok = true;
        auto need = [&](bool cond, const std::string& what) {
          if (!cond) {
            ok = false;
            c.require(false, tag + ": " + what);
          }
        };
        need(t.faults.size() == static_cast<std::size_t>(count), "wrong fault count");
        need(t.conditional_ok && conditional_model_ok(n, t.faults), "conditional model broken");
        if (min_degree(n, t.faults) >= 3) {
          const FaultLightSubcube s = select_fault_light_subcube(n, t.faults);
          need(s.verdict.usable(), "selected subcube inadmissible");
          need(s.verdict.internal_faults <= 3 * n - 8, "selected subcube has " + std::to_string(s.verdict.internal_faults) + " faults");
          ++selected;
        } else {
          need(t.spectrum.route == SpectrumRoute::DegreeTwoVertex, "degree-2 vertex not routed");
          ++routed;
        }
        need(t.spectrum.complete(), "spectrum incomplete");
        need(t.spectrum.cycles.size() == (std::size_t{1} << (n - 1)) - 1, "wrong number of lengths");
        need(check_spectrum(n, t.faults, t.spectrum).empty(), check_spectrum(n, t.faults, t.spectrum));
        if (!ok) ++failures;
      }
      summary << "n=" << n << " " << to_string(pattern) << ": " << kTrials << " trials, " << selected << " selected, "
              << routed << " degree-2, " << failures << " failed, max " << worst << " expansions. ";
    }
  }
  c.note(summary.str());
  return c.outcome();
}

Outcome negative_control() {
  Collector c;
  for (int n : {3, 4}) {
    const FaultSet f = figure4_fixture(n);
    const std::vector<Edge> faults(f.faulty.begin(), f.faulty.end());
    const HamSearchResult r = ham_cycle_search(build_hypercube(n), faults, 100'000'000);
    const std::string tag = "Q_" + std::to_string(n);
    c.require(!r.cycle.has_value(), tag + " has a Hamiltonian cycle");
    c.require(r.exhausted, tag + " search not exhausted");
    c.note(tag + " minus " + std::to_string(faults.size()) + " faults: no Hamiltonian cycle, exhausted after " +
           std::to_string(r.expansions) + " expansions");
  }
  return c.outcome();
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {1, "structure of AQ_n", 5, structure},
      {2, "f(n) closed form against exhaustive count", 10, f_values},
      {3, "Q_n-isomorphic spanning subgraph census", 60, census},
      {4, "reciprocal pair laws", 30, reciprocity},
      {5, "minimum pairwise overlap", 60, minimum_overlap},
      {6, "4-cycle counts", 60, four_cycles},
      {7, "edge-disjoint Hamiltonian cycles", 120, edhcs},
      {8, "fault-tolerant even cycles", 1800, fault_tolerance},
      {9, "non-Hamiltonian fixture negative control", 10, negative_control},
  };
  int only = 0;
  if (argc > 1) only = std::atoi(argv[1]);
  bool all_pass = true;
  for (const auto& cr : criteria) {
    if (only != 0 && cr.id != only) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = cr.body();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > cr.limit_seconds) {
      o.pass = false;
      o.detail += " (took " + std::to_string(seconds) + " s, limit " + std::to_string(cr.limit_seconds) + " s)";
    }
    all_pass &= o.pass;
    std::cout << "CRITERION " << cr.id << ": " << (o.pass ? "PASS" : "FAIL") << " - " << cr.title << " [" << std::fixed
              << std::setprecision(2) << seconds << " s] " << o.detail << "\n";
  }
  return all_pass ? 0 : 1;
}
