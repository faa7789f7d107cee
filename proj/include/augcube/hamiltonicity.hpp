#pragma once

// Edge-disjoint Hamiltonian cycles (EDHCs) for hypercubes and augmented cubes.

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "augcube/topology.hpp"

namespace augcube {

/// Vertex order of a cycle; the closing edge runs from back() to front().
struct CycleSequence {
  std::vector<Vertex> vertices;

  std::size_t size() const noexcept { return vertices.size(); }
  std::vector<Edge> edges() const;

  friend bool operator==(const CycleSequence&, const CycleSequence&) = default;
};

struct EdhcBundle {
  GraphKind host = GraphKind::AugmentedCube;
  int n = 0;
  std::vector<CycleSequence> cycles;
};

struct EdhcReport {
  bool pass = true;
  std::string violation;
  int cycle = -1;
  std::optional<Edge> edge;
};

/// floor(n/2) edge-disjoint Hamiltonian cycles of Q_n. Odd n lifts the
/// decomposition of Q_{n-1} across dimension n; even n >= 4 starts from the
/// 2-factors of dimension pairs and merges cycles by 4-cycle switches under a
/// fixed seed. Output is deterministic for each n.
EdhcBundle hypercube_ham_decomposition(int n);

/// One edge per cycle, scanning each cycle in traversal order. Chosen edges
/// share no endpoint with each other or with `forbidden`.
std::vector<Edge> select_merge_edges(const std::vector<CycleSequence>& cycles,
                                     const std::set<Vertex>& forbidden);

using VertexMap = std::function<Vertex(Vertex)>;

/// C - (u,v) + (u, cross(u)) + cross(C) - (cross(u), cross(v)) + (cross(v), v).
CycleSequence merge_across(const CycleSequence& cycle, const VertexMap& cross, const Edge& e);

/// m edge-disjoint Hamiltonian cycles of AQ_n: m = n-1 for odd n, n-2 for
/// even n. n in {3, 4} is solved by search; n >= 5 merges hypercube
/// decompositions of the two halves of Q_n^1 and Q_n^2 across E_1. Cycles
/// from Q_n^1 come first.
EdhcBundle augcube_edhcs(int n);

/// Backtracking search for `count` edge-disjoint Hamiltonian cycles of a
/// host with at most 64 vertices. nullopt when the budget runs out first.
std::optional<EdhcBundle> search_edhcs(const CubeGraph& host, int count, std::uint64_t budget,
                                       std::uint64_t* expansions = nullptr);

EdhcReport verify_edhc_bundle(const CubeGraph& host, const EdhcBundle& bundle);

/// Host edges used by no cycle of the bundle.
std::vector<Edge> residual_edges(const CubeGraph& host, const EdhcBundle& bundle);

bool is_perfect_matching(std::span<const Edge> edges, std::size_t vertex_count);

}  // namespace augcube
