#pragma once

// Conditional edge faults on AQ_n: per-matching census, fault-light subcube
// selection, and fault-free cycles of every even length.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "augcube/hamiltonicity.hpp"
#include "augcube/reciprocity.hpp"

namespace augcube {

struct FaultSet {
  int n = 0;
  std::set<Edge> faulty;

  /// Throws invalid-edge for a pair that is not an AQ_n edge.
  static FaultSet make(int n, std::span<const Edge> edges);

  std::size_t size() const noexcept { return faulty.size(); }
  bool contains(const Edge& e) const { return faulty.contains(e); }
};

/// Number of fault-free AQ_n edges at each vertex.
std::vector<int> fault_free_degrees(int n, const FaultSet& faults);

bool conditional_model_ok(int n, const FaultSet& faults);

struct FaultCensus {
  int n = 0;
  /// Indexed like all_matchings(n).
  std::vector<int> counts;
  MatchingId argmin = MatchingId::hypercube(1);
  int min_count = 0;
  /// |F| <= 4n-8 < 2(2n-1), so some matching carries at most one fault.
  bool pigeonhole_applies = false;

  int total() const;
  int count(MatchingId id) const { return counts.at(static_cast<std::size_t>(matching_index(n, id))); }
};

FaultCensus matching_fault_census(const FaultSet& faults);

enum class Admissibility { Admissible, Lemma53Exception, Inadmissible };

std::string to_string(Admissibility a);

struct SubcubeVerdict {
  Admissibility kind = Admissibility::Admissible;
  std::string reason;
  int internal_faults = 0;
  int degree_two_vertices = 0;

  bool usable() const noexcept { return kind != Admissibility::Inadmissible; }
};

/// Checks the Hamiltonicity preconditions for a faulty hypercube: minimum
/// degree two, no pair of degree-2 vertices with the same two neighbours,
/// at most 3n-8 internal faults. Exactly three degree-2 vertices is reported
/// as the separate exception verdict.
SubcubeVerdict prop52_admissible(const SpanningSubcube& sub, const FaultSet& faults);

enum class SelectionRoute { Guided, Repair, Exhaustive };

std::string to_string(SelectionRoute r);

struct FaultLightSubcube {
  SpanningSubcube subcube;
  SubcubeVerdict verdict;
  SelectionRoute route = SelectionRoute::Guided;
};

/// Anchors on the least-faulty matching, starts from the better member of
/// the reciprocal pair meeting there, then swaps E_j / E_<=j greedily while
/// rank is kept. Falls back to single and double swaps, then to a scan of
/// all Cayley selections. Requires n >= 5, |F| <= 4n-8 and three fault-free
/// edges at every vertex.
FaultLightSubcube select_fault_light_subcube(int n, const FaultSet& faults);

struct SearchOptions {
  std::uint64_t per_length_budget = 10'000'000;
  std::optional<std::uint64_t> total_budget;
};

/// Reads AUGCUBE_BUDGET if set, else the default per-length budget.
SearchOptions default_search_options();

enum class SpectrumRoute { DegreeTwoVertex, FaultLightSubcube };

std::string to_string(SpectrumRoute r);

struct SpectrumReport {
  int n = 0;
  std::map<int, CycleSequence> cycles;
  std::vector<int> missing_lengths;
  SpectrumRoute route = SpectrumRoute::FaultLightSubcube;
  std::optional<FaultLightSubcube> selection;
  std::uint64_t expansions = 0;

  bool complete() const noexcept { return missing_lengths.empty(); }
};

/// A fault-free cycle of every even length 4..2^n. A vertex left with two
/// fault-free edges is routed through; otherwise a Hamiltonian cycle of a
/// fault-light subcube is cut down by chords. Lengths the searches could not
/// reach within budget are listed as missing.
SpectrumReport even_cycle_spectrum(int n, const FaultSet& faults,
                                   const SearchOptions& options = default_search_options());

/// Empty string when every cycle has its key as length, is simple, uses
/// only AQ_n edges and avoids the faults; otherwise the first problem.
std::string check_spectrum(int n, const FaultSet& faults, const SpectrumReport& report);

/// Two nonadjacent vertices u, v of a 4-cycle of Q_n with every other
/// incident Q_n edge faulty: 2n-4 faults.
FaultSet figure4_fixture(int n);

/// Vertices and edges removed from AQ_n before a path search.
struct Obstruction {
  std::set<Vertex> vertices;
  std::set<Edge> edges;

  std::size_t size() const noexcept { return vertices.size() + edges.size(); }
};

/// A u-v path with exactly `length` edges in AQ_n - A. The admissible range
/// is max(d(u,v)+2, 4) .. 2^n - |A_vertices| - 1 with |A| <= 2n-4.
std::vector<Vertex> fault_free_path_of_length(int n, const Obstruction& removed, Vertex u, Vertex v,
                                              int length, std::uint64_t budget = 10'000'000);

enum class FaultPattern { Random, Vertex, Matching, Path2, Figure4 };

std::string to_string(FaultPattern p);
FaultPattern parse_fault_pattern(std::string_view text);

/// A conditional-model fault set of the given size drawn from `seed`.
FaultSet generate_faults(int n, int count, FaultPattern pattern, std::uint64_t seed);

struct TrialReport {
  std::uint64_t seed = 0;
  FaultPattern pattern = FaultPattern::Random;
  FaultSet faults;
  bool conditional_ok = false;
  /// Absent when a vertex keeps only two fault-free edges; the spectrum
  /// then routes through that vertex instead.
  std::optional<FaultLightSubcube> selection;
  SpectrumReport spectrum;
  /// check_spectrum result; empty when every cycle checks out.
  std::string spectrum_problem;
};

TrialReport run_fault_trial(int n, int fault_count, FaultPattern pattern, std::uint64_t seed,
                            const SearchOptions& options = default_search_options());

}  // namespace augcube
