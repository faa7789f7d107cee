#include "augcube/reciprocity.hpp"

#include <algorithm>
#include <deque>

#include "augcube/error.hpp"

namespace augcube {

SubcubeSelection::SubcubeSelection(int n, std::vector<MatchingId> chosen)
    : n_(n), chosen_(std::move(chosen)) {
  if (n < 2 || n > 24) throw Error(ErrorKind::InvalidDimension, "subcube dimension out of range");
  if (static_cast<int>(chosen_.size()) != n) {
    throw Error(ErrorKind::NotASubcube, "a selection needs exactly n matchings");
  }
  std::vector<int> seen;
  for (const auto& id : chosen_) seen.push_back(matching_index(n, id));
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
    throw Error(ErrorKind::NotASubcube, "matching repeated in selection");
  }
}

SubcubeSelection SubcubeSelection::from_generators(const GeneratorSet& generators) {
  const int n = generators.ambient_n();
  std::vector<MatchingId> ids;
  for (const auto& g : generators.elements()) {
    auto id = matching_of_generator(n, g.bits());
    if (!id) {
      throw Error(ErrorKind::InvalidInput, g.to_string() + " is not a generator of AQ_" + std::to_string(n));
    }
    ids.push_back(*id);
  }
  return SubcubeSelection(n, std::move(ids));
}

bool SubcubeSelection::contains(MatchingId id) const noexcept {
  return std::find(chosen_.begin(), chosen_.end(), id) != chosen_.end();
}

GeneratorSet SubcubeSelection::generators() const {
  std::vector<GroupElement> elems;
  for (const auto& id : chosen_) elems.emplace_back(n_, id.generator_bits());
  return GeneratorSet(n_, std::move(elems));
}

bool SubcubeSelection::full_rank() const {
  std::vector<Vertex> bits;
  for (const auto& id : chosen_) bits.push_back(id.generator_bits());
  return rank_gf2(std::span<const Vertex>(bits)) == n_;
}

SubcubeSelection SubcubeSelection::replaced(MatchingId out, MatchingId in) const {
  auto next = chosen_;
  auto it = std::find(next.begin(), next.end(), out);
  if (it == next.end()) throw Error(ErrorKind::InvalidInput, out.name() + " is not in the selection");
  *it = in;
  return SubcubeSelection(n_, std::move(next));
}

SpanningSubcube subcube_from_selection(const SubcubeSelection& selection) {
  const int n = selection.dimension();
  if (!selection.full_rank()) {
    throw Error(ErrorKind::NotASubcube, "selected matchings do not span GF(2)^" + std::to_string(n));
  }
  GeneratorSet gens = selection.generators();
  CubeGraph graph = build_cayley(n, gens);
  const CubeGraph hypercube = build_hypercube(n);
  LinearMap witness = isomorphism_witness(graph, gens, hypercube.generators());
  return SpanningSubcube{selection, std::move(graph), std::move(witness)};
}

SubcubeSelection canonical_hypercube_selection(int n) {
  std::vector<MatchingId> ids;
  for (int i = 1; i <= n; ++i) ids.push_back(MatchingId::hypercube(i));
  return SubcubeSelection(n, std::move(ids));
}

SubcubeSelection canonical_augmented_selection(int n) {
  std::vector<MatchingId> ids{MatchingId::hypercube(1)};
  for (int j = 2; j <= n; ++j) ids.push_back(MatchingId::augmented(j));
  return SubcubeSelection(n, std::move(ids));
}

SubcubePair reciprocal_pair(int n, const std::set<int>& exchanged) {
  if (n < 2) throw Error(ErrorKind::InvalidDimension, "reciprocal pairs need n >= 2");
  for (int j : exchanged) {
    if (j < 2 || j > n) {
      throw Error(ErrorKind::InvalidInput, "exchanged dimension " + std::to_string(j) + " outside [2, n]");
    }
  }
  std::vector<MatchingId> first{MatchingId::hypercube(1)};
  std::vector<MatchingId> second{MatchingId::hypercube(1)};
  for (int j = 2; j <= n; ++j) {
    const bool swap = exchanged.contains(j);
    first.push_back(swap ? MatchingId::augmented(j) : MatchingId::hypercube(j));
    second.push_back(swap ? MatchingId::hypercube(j) : MatchingId::augmented(j));
  }
  return {subcube_from_selection(SubcubeSelection(n, std::move(first))),
          subcube_from_selection(SubcubeSelection(n, std::move(second)))};
}

SubcubePair reciprocal_pair_fixed_intersection(int n, int j, EdgeKind kind) {
  if (j < 2 || j > n) {
    throw Error(ErrorKind::InvalidDimension, "j = " + std::to_string(j) + " outside [2, n]");
  }
  // G1: Q_n^1 with E_1 replaced by E_<=j.
  std::vector<MatchingId> g1;
  for (int i = 2; i <= n; ++i) g1.push_back(MatchingId::hypercube(i));
  g1.push_back(MatchingId::augmented(j));
  SpanningSubcube first = subcube_from_selection(SubcubeSelection(n, std::move(g1)));
  if (kind == EdgeKind::Augmented) {
    return {subcube_from_selection(canonical_augmented_selection(n)), std::move(first)};
  }
  // G2: Q_n^2 with E_<=j replaced by E_j.
  SubcubeSelection g2 =
      canonical_augmented_selection(n).replaced(MatchingId::augmented(j), MatchingId::hypercube(j));
  return {std::move(first), subcube_from_selection(g2)};
}

std::optional<MatchingId> shared_matching(const SubcubeSelection& a, const SubcubeSelection& b) {
  std::optional<MatchingId> shared;
  for (const auto& id : a.chosen()) {
    if (!b.contains(id)) continue;
    if (shared) return std::nullopt;
    shared = id;
  }
  return shared;
}

std::vector<Edge> edge_intersection(std::span<const Edge> a, std::span<const Edge> b) {
  std::vector<Edge> x(a.begin(), a.end());
  std::vector<Edge> y(b.begin(), b.end());
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  std::vector<Edge> out;
  std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  return out;
}

std::vector<Edge> edge_union(std::span<const Edge> a, std::span<const Edge> b) {
  std::vector<Edge> x(a.begin(), a.end());
  std::vector<Edge> y(b.begin(), b.end());
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  std::vector<Edge> out;
  std::set_union(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  return out;
}

SubcubeSplit split_along_matching(const SpanningSubcube& subcube, MatchingId matching) {
  const auto& sel = subcube.selection;
  if (!sel.contains(matching)) {
    throw Error(ErrorKind::InvalidSplit, matching.name() + " is not one of the subcube's matchings");
  }
  SubcubeSplit split;
  split.matching = matching;
  split.offset = matching.generator_bits();
  for (const auto& id : sel.chosen()) {
    if (!(id == matching)) split.half_generators.push_back(id.generator_bits());
  }

  // component0 is the span of the remaining generators.
  const std::size_t count = subcube.graph.vertex_count();
  std::vector<char> in0(count, 0);
  std::deque<Vertex> queue{0};
  in0[0] = 1;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (Vertex s : split.half_generators) {
      if (!in0[v ^ s]) {
        in0[v ^ s] = 1;
        queue.push_back(v ^ s);
      }
    }
  }
  for (Vertex v = 0; v < count; ++v) {
    (in0[v] ? split.component0 : split.component1).push_back(v);
  }
  if (split.component0.size() != split.component1.size() || in0[split.offset]) {
    throw Error(ErrorKind::InvariantViolation, "split did not produce two equal halves");
  }
  return split;
}

}  // namespace augcube
