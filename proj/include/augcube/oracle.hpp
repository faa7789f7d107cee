#pragma once

// Brute-force checks that share no code with the constructive modules:
// subgraph enumeration, small-graph isomorphism, 4-cycle counts and
// exhaustive cycle/path searches at desk scale.

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "augcube/hamiltonicity.hpp"
#include "augcube/topology.hpp"

namespace augcube {

/// Vertex set of a graph with at most 128 vertices.
class VertexMask {
 public:
  static constexpr int kCapacity = 128;

  VertexMask() = default;

  void set(int v) noexcept { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void reset(int v) noexcept { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  bool test(int v) const noexcept { return (words_[v >> 6] >> (v & 63)) & 1U; }
  int count() const noexcept;
  bool empty() const noexcept { return (words_[0] | words_[1]) == 0; }
  /// Lowest member; only valid when not empty.
  int first() const noexcept;

  VertexMask operator&(const VertexMask& o) const noexcept { return {words_[0] & o.words_[0], words_[1] & o.words_[1]}; }
  VertexMask operator|(const VertexMask& o) const noexcept { return {words_[0] | o.words_[0], words_[1] | o.words_[1]}; }
  VertexMask without(const VertexMask& o) const noexcept { return {words_[0] & ~o.words_[0], words_[1] & ~o.words_[1]}; }

  template <typename F>
  void for_each(F&& f) const {
    for (int w = 0; w < 2; ++w) {
      for (std::uint64_t m = words_[w]; m != 0; m &= m - 1) f(w * 64 + std::countr_zero(m));
    }
  }

  friend bool operator==(const VertexMask&, const VertexMask&) = default;

 private:
  VertexMask(std::uint64_t lo, std::uint64_t hi) : words_{lo, hi} {}

  std::array<std::uint64_t, 2> words_{};
};

class SmallGraph {
 public:
  explicit SmallGraph(int vertices);

  static SmallGraph from_edges(int vertices, std::span<const Edge> edges);
  static SmallGraph from_cube(const CubeGraph& g);

  int vertex_count() const noexcept { return static_cast<int>(adj_.size()); }
  void add_edge(int a, int b);
  void remove_edge(int a, int b);
  bool adjacent(int a, int b) const { return adj_.at(a).test(b); }
  const VertexMask& neighbors(int v) const { return adj_.at(v); }
  int degree(int v) const { return adj_.at(v).count(); }
  std::size_t edge_count() const;
  std::vector<Edge> edges() const;

 private:
  std::vector<VertexMask> adj_;
};

struct IsomorphismResult {
  bool isomorphic = false;
  /// mapping[v] is the image in the second graph of vertex v of the first.
  std::vector<int> mapping;
};

/// Backtracking over degree-compatible candidates; a found bijection is
/// re-checked on every edge before it is returned.
IsomorphismResult graph_isomorphic_small(const SmallGraph& g, const SmallGraph& h);

/// All spanning subgraphs of AQ_n isomorphic to Q_n, each as a sorted edge
/// list, in lexicographic order of edge subsets. n must be 2 or 3.
std::vector<std::vector<Edge>> enumerate_qn_spanning_subgraphs(int n);

std::uint64_t count_4cycles(const CubeGraph& g);
/// Number of 4-cycles through the edge e.
std::uint64_t per_edge_4cycles(const CubeGraph& g, const Edge& e);

struct HamSearchResult {
  std::optional<CycleSequence> cycle;
  /// True when the search space was covered: a missing cycle is proven absent.
  bool exhausted = false;
  std::uint64_t expansions = 0;
};

/// Hamiltonian cycle of g minus the given edges; at most 128 vertices.
HamSearchResult ham_cycle_search(const CubeGraph& g, std::span<const Edge> faults, std::uint64_t budget);
HamSearchResult ham_cycle_search(const SmallGraph& g, std::uint64_t budget);

struct PathSpectrum {
  std::set<int> lengths;
  bool exhausted = false;
};

/// Every length of a simple u-v path in g avoiding the removed vertices
/// and edges.
PathSpectrum path_spectrum_search(const CubeGraph& g, const std::set<Vertex>& removed_vertices,
                                  const std::set<Edge>& removed_edges, Vertex u, Vertex v,
                                  std::uint64_t budget = 100'000'000);

struct Table1Row {
  int row = 0;
  /// Edges as printed, canonicalised; duplicates collapse.
  std::vector<Edge> edges;
  std::size_t printed_pairs = 0;
};

std::vector<Table1Row> load_table1(const std::string& path);

}  // namespace augcube
