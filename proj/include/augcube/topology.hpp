#pragma once

// Graph construction for Q_n, AQ_n and general Cayley graphs Cay(Z_2^n, T).
//
// Vertices are the integers 0 .. 2^n - 1 with bit k carrying a_{k+1}. Two
// vertices are adjacent iff their XOR lies in the generator set, so AQ_n is
// Cay(Z_2^n, standard_generators(n)) and Q_n is Cay(Z_2^n, {e_1..e_n}).

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "augcube/boolean_group.hpp"

namespace augcube {

/// Undirected edge stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  static Edge make(Vertex a, Vertex b);

  Vertex difference() const noexcept { return u ^ v; }
  bool touches(Vertex x) const noexcept { return u == x || v == x; }

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline std::uint64_t edge_key(const Edge& e) noexcept {
  return (std::uint64_t{e.u} << 32) | e.v;
}

enum class EdgeKind { Hypercube, Augmented };

struct EdgeClass {
  EdgeKind kind = EdgeKind::Hypercube;
  int dimension = 1;

  friend bool operator==(const EdgeClass&, const EdgeClass&) = default;
};

/// Names one of the 2n-1 canonical perfect matchings: E_i (hypercube edges of
/// dimension i) or E_<=j (augmented edges of dimension j).
struct MatchingId {
  EdgeClass cls;

  static MatchingId hypercube(int i) { return {EdgeClass{EdgeKind::Hypercube, i}}; }
  static MatchingId augmented(int j) { return {EdgeClass{EdgeKind::Augmented, j}}; }

  EdgeKind kind() const noexcept { return cls.kind; }
  int dimension() const noexcept { return cls.dimension; }
  bool valid_for(int n) const noexcept;
  /// The generator whose Cayley edges form this matching.
  Vertex generator_bits() const noexcept;
  std::string name() const;

  friend bool operator==(const MatchingId&, const MatchingId&) = default;
};

int matching_count(int n);
/// Position in the canonical order E_1..E_n, E_<=2..E_<=n.
int matching_index(int n, MatchingId id);
MatchingId matching_at(int n, int index);
std::vector<MatchingId> all_matchings(int n);
std::optional<MatchingId> matching_of_generator(int n, Vertex generator);
MatchingId parse_matching(std::string_view text);

enum class GraphKind { AugmentedCube, Hypercube, Cayley };

std::string to_string(GraphKind kind);

class CubeGraph {
 public:
  CubeGraph(GraphKind kind, GeneratorSet generators);

  int dimension() const noexcept { return generators_.ambient_n(); }
  GraphKind kind() const noexcept { return kind_; }
  const GeneratorSet& generators() const noexcept { return generators_; }

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  int degree() const noexcept { return static_cast<int>(generators_.size()); }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  bool adjacent(Vertex a, Vertex b) const noexcept;

  /// All edges, sorted.
  std::vector<Edge> edges() const;
  std::size_t edge_count() const noexcept { return vertex_count() * generators_.size() / 2; }

  int component_count() const;
  /// BFS distances from src; -1 marks unreachable vertices.
  std::vector<int> distances_from(Vertex src) const;

 private:
  GraphKind kind_;
  GeneratorSet generators_;
  std::vector<Vertex> generator_bits_;
  std::vector<std::vector<Vertex>> adjacency_;
};

/// n = 1 yields K_2.
CubeGraph build_augmented_cube(int n);
CubeGraph build_hypercube(int n);
CubeGraph build_cayley(int n, const GeneratorSet& generators);

/// nullopt when the endpoints are not adjacent in AQ_n.
std::optional<EdgeClass> classify_edge(int n, const Edge& e);

std::vector<Edge> canonical_matching(int n, MatchingId id);

/// A linear map of GF(2)^n, stored by the images of e_1..e_n.
class LinearMap {
 public:
  explicit LinearMap(std::vector<Vertex> columns);
  static LinearMap identity(int n);

  int dimension() const noexcept { return static_cast<int>(columns_.size()); }
  std::span<const Vertex> columns() const noexcept { return columns_; }
  Vertex apply(Vertex x) const noexcept;

  friend bool operator==(const LinearMap&, const LinearMap&) = default;

 private:
  std::vector<Vertex> columns_;
};

/// Returns the unique linear bijection sending from[k] to to[k] and checks,
/// edge by edge, that it carries `graph` (which must be Cay(Z_2^n, from))
/// onto Cay(Z_2^n, to).
LinearMap isomorphism_witness(const CubeGraph& graph, const GeneratorSet& from,
                              const GeneratorSet& to);

/// True iff `map` is a bijection taking every edge of `source` to an edge of
/// `target` (equal edge counts then make it an isomorphism).
bool validate_witness(const CubeGraph& source, const CubeGraph& target, const LinearMap& map);

}  // namespace augcube
