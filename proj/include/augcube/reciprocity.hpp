#pragma once

// Q_n-isomorphic spanning subgraphs of AQ_n built from canonical perfect
// matchings, reciprocal pairs that meet in exactly one matching, and the
// split of a subcube into two Q_{n-1} halves along one of its matchings.

#include <set>
#include <utility>
#include <vector>

#include "augcube/topology.hpp"

namespace augcube {

/// n distinct canonical matchings of AQ_n. The matching <-> generator
/// correspondence makes this the same thing as a subset T of S.
class SubcubeSelection {
 public:
  SubcubeSelection(int n, std::vector<MatchingId> chosen);

  static SubcubeSelection from_generators(const GeneratorSet& generators);

  int dimension() const noexcept { return n_; }
  std::span<const MatchingId> chosen() const noexcept { return chosen_; }
  bool contains(MatchingId id) const noexcept;
  GeneratorSet generators() const;
  bool full_rank() const;

  /// The same selection with `out` swapped for `in` at the same position.
  SubcubeSelection replaced(MatchingId out, MatchingId in) const;

  friend bool operator==(const SubcubeSelection&, const SubcubeSelection&) = default;

 private:
  int n_;
  std::vector<MatchingId> chosen_;
};

struct SpanningSubcube {
  SubcubeSelection selection;
  CubeGraph graph;
  /// Carries `graph` onto build_hypercube(n); validated on every edge.
  LinearMap witness;

  int dimension() const noexcept { return selection.dimension(); }
  std::vector<Edge> edges() const { return graph.edges(); }
};

SpanningSubcube subcube_from_selection(const SubcubeSelection& selection);

/// Q_n^1 = E_1 u ... u E_n.
SubcubeSelection canonical_hypercube_selection(int n);
/// Q_n^2 = E_1 u E_<=2 u ... u E_<=n.
SubcubeSelection canonical_augmented_selection(int n);

using SubcubePair = std::pair<SpanningSubcube, SpanningSubcube>;

/// First: Q_n^1 with E_j -> E_<=j for j in J. Second: Q_n^2 with
/// E_<=j -> E_j for j in J. The two always meet in E_1 and cover E(AQ_n).
SubcubePair reciprocal_pair(int n, const std::set<int>& exchanged);

/// A pair meeting in exactly E_j (kind Hypercube) or E_<=j (kind Augmented).
SubcubePair reciprocal_pair_fixed_intersection(int n, int j, EdgeKind kind);

/// The shared matching of a pair, or nullopt when the pair does not meet
/// in exactly one canonical matching.
std::optional<MatchingId> shared_matching(const SubcubeSelection& a, const SubcubeSelection& b);

std::vector<Edge> edge_intersection(std::span<const Edge> a, std::span<const Edge> b);
std::vector<Edge> edge_union(std::span<const Edge> a, std::span<const Edge> b);

/// Result of deleting one chosen matching from a subcube. component0 holds
/// the all-zero vertex. `cross(v) = v ^ offset` pairs the two halves and is
/// an isomorphism between them.
struct SubcubeSplit {
  MatchingId matching;
  Vertex offset = 0;
  std::vector<Vertex> component0;
  std::vector<Vertex> component1;
  /// Generators spanning component0, in selection order (matching removed).
  std::vector<Vertex> half_generators;

  Vertex cross(Vertex v) const noexcept { return v ^ offset; }
};

SubcubeSplit split_along_matching(const SpanningSubcube& subcube, MatchingId matching);

}  // namespace augcube
