#include "augcube/topology.hpp"

#include <algorithm>
#include <deque>

#include "augcube/error.hpp"

namespace augcube {

Edge Edge::make(Vertex a, Vertex b) {
  if (a == b) throw Error(ErrorKind::InvalidEdge, "edge endpoints coincide");
  return a < b ? Edge{a, b} : Edge{b, a};
}

bool MatchingId::valid_for(int n) const noexcept {
  if (cls.kind == EdgeKind::Hypercube) return cls.dimension >= 1 && cls.dimension <= n;
  return cls.dimension >= 2 && cls.dimension <= n;
}

Vertex MatchingId::generator_bits() const noexcept {
  if (cls.kind == EdgeKind::Hypercube) return Vertex{1} << (cls.dimension - 1);
  return (Vertex{1} << cls.dimension) - 1;
}

std::string MatchingId::name() const {
  return (cls.kind == EdgeKind::Hypercube ? "E_" : "E_<=") + std::to_string(cls.dimension);
}

MatchingId parse_matching(std::string_view text) {
  auto number = [&](std::string_view digits) {
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(),
                                       [](char c) { return c >= '0' && c <= '9'; })) {
      throw Error(ErrorKind::InvalidInput, "bad matching name '" + std::string(text) + "'");
    }
    return std::stoi(std::string(digits));
  };
  if (text.starts_with("E_<=")) return MatchingId::augmented(number(text.substr(4)));
  if (text.starts_with("E_")) return MatchingId::hypercube(number(text.substr(2)));
  throw Error(ErrorKind::InvalidInput, "bad matching name '" + std::string(text) + "'");
}

int matching_count(int n) { return 2 * n - 1; }

int matching_index(int n, MatchingId id) {
  if (!id.valid_for(n)) {
    throw Error(ErrorKind::InvalidInput, id.name() + " is not a matching of AQ_" + std::to_string(n));
  }
  return id.kind() == EdgeKind::Hypercube ? id.dimension() - 1 : n + id.dimension() - 2;
}

MatchingId matching_at(int n, int index) {
  if (index < 0 || index >= matching_count(n)) {
    throw Error(ErrorKind::InvalidInput, "matching index out of range");
  }
  return index < n ? MatchingId::hypercube(index + 1) : MatchingId::augmented(index - n + 2);
}

std::vector<MatchingId> all_matchings(int n) {
  std::vector<MatchingId> out;
  for (int k = 0; k < matching_count(n); ++k) out.push_back(matching_at(n, k));
  return out;
}

std::optional<MatchingId> matching_of_generator(int n, Vertex generator) {
  if (auto c = classify_edge(n, Edge{0, generator}); generator != 0 && c) return MatchingId{*c};
  return std::nullopt;
}

std::string to_string(GraphKind kind) {
  switch (kind) {
    case GraphKind::AugmentedCube: return "AQ";
    case GraphKind::Hypercube: return "Q";
    case GraphKind::Cayley: return "Cayley";
  }
  return "?";
}

CubeGraph::CubeGraph(GraphKind kind, GeneratorSet generators)
    : kind_(kind), generators_(std::move(generators)), generator_bits_(generators_.bits()) {
  const int n = generators_.ambient_n();
  if (n > 24) throw Error(ErrorKind::InvalidDimension, "explicit graphs are limited to n <= 24");
  const Vertex count = Vertex{1} << n;
  adjacency_.resize(count);
  for (Vertex v = 0; v < count; ++v) {
    auto& nb = adjacency_[v];
    nb.reserve(generator_bits_.size());
    for (Vertex s : generator_bits_) nb.push_back(v ^ s);
  }
  std::sort(generator_bits_.begin(), generator_bits_.end());
}

bool CubeGraph::adjacent(Vertex a, Vertex b) const noexcept {
  return a < vertex_count() && b < vertex_count() &&
         std::binary_search(generator_bits_.begin(), generator_bits_.end(), a ^ b);
}

std::vector<Edge> CubeGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (Vertex v = 0; v < vertex_count(); ++v) {
    for (Vertex w : adjacency_[v]) {
      if (v < w) out.push_back(Edge{v, w});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> CubeGraph::distances_from(Vertex src) const {
  std::vector<int> dist(vertex_count(), -1);
  std::deque<Vertex> queue{src};
  dist.at(src) = 0;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : adjacency_[v]) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

int CubeGraph::component_count() const {
  std::vector<char> seen(vertex_count(), 0);
  int components = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < vertex_count(); ++s) {
    if (seen[s]) continue;
    ++components;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : adjacency_[v]) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
  }
  return components;
}

CubeGraph build_augmented_cube(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidDimension, "AQ_n needs n >= 1");
  if (n == 1) return CubeGraph(GraphKind::AugmentedCube, GeneratorSet(1, {GroupElement(1, 1)}));
  return CubeGraph(GraphKind::AugmentedCube, standard_generators(n));
}

CubeGraph build_hypercube(int n) {
  if (n < 1 || n > kMaxDimension) throw Error(ErrorKind::InvalidDimension, "Q_n needs n >= 1");
  std::vector<GroupElement> units;
  for (int i = 1; i <= n; ++i) units.push_back(GroupElement::unit(n, i));
  return CubeGraph(GraphKind::Hypercube, GeneratorSet(n, std::move(units)));
}

CubeGraph build_cayley(int n, const GeneratorSet& generators) {
  if (generators.ambient_n() != n) {
    throw Error(ErrorKind::InvalidInput, "generator width differs from n");
  }
  return CubeGraph(GraphKind::Cayley, generators);
}

std::optional<EdgeClass> classify_edge(int n, const Edge& e) {
  const Vertex x = e.difference();
  if (x == 0 || n < 1 || n > kMaxDimension || (x >> n) != 0) return std::nullopt;
  if ((x & (x - 1)) == 0) {
    int i = 1;
    while ((x >> (i - 1)) != 1) ++i;
    return EdgeClass{EdgeKind::Hypercube, i};
  }
  if ((x & (x + 1)) == 0) {
    int j = 0;
    while ((x >> j) != 0) ++j;
    return EdgeClass{EdgeKind::Augmented, j};
  }
  return std::nullopt;
}

std::vector<Edge> canonical_matching(int n, MatchingId id) {
  if (!id.valid_for(n) || n > 24) {
    throw Error(ErrorKind::InvalidInput, id.name() + " is not a matching of AQ_" + std::to_string(n));
  }
  const Vertex s = id.generator_bits();
  std::vector<Edge> out;
  out.reserve(std::size_t{1} << (n - 1));
  for (Vertex v = 0; v < (Vertex{1} << n); ++v) {
    if (v < (v ^ s)) out.push_back(Edge{v, v ^ s});
  }
  return out;
}

LinearMap::LinearMap(std::vector<Vertex> columns) : columns_(std::move(columns)) {}

LinearMap LinearMap::identity(int n) {
  std::vector<Vertex> cols;
  for (int i = 0; i < n; ++i) cols.push_back(Vertex{1} << i);
  return LinearMap(std::move(cols));
}

Vertex LinearMap::apply(Vertex x) const noexcept {
  Vertex y = 0;
  for (std::size_t k = 0; k < columns_.size() && x != 0; ++k, x >>= 1) {
    if (x & 1U) y ^= columns_[k];
  }
  return y;
}

namespace {

bool same_members(const GeneratorSet& a, const GeneratorSet& b) {
  auto x = a.bits();
  auto y = b.bits();
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

// Columns of the inverse of the matrix whose k-th column is basis[k]:
// result[i] is the combination mask c with XOR_{k in c} basis[k] = e_{i+1}.
std::vector<Vertex> inverse_columns(const std::vector<Vertex>& basis) {
  const int n = static_cast<int>(basis.size());
  std::vector<Vertex> pivot_vec(32, 0);
  std::vector<Vertex> pivot_combo(32, 0);
  for (int k = 0; k < n; ++k) {
    Vertex v = basis[k];
    Vertex combo = Vertex{1} << k;
    for (int b = 31; b >= 0 && v != 0; --b) {
      if (((v >> b) & 1U) == 0) continue;
      if (pivot_vec[b] == 0) {
        pivot_vec[b] = v;
        pivot_combo[b] = combo;
        v = 0;
      } else {
        v ^= pivot_vec[b];
        combo ^= pivot_combo[b];
      }
    }
  }
  std::vector<Vertex> out(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    Vertex target = Vertex{1} << i;
    Vertex combo = 0;
    for (int b = 31; b >= 0 && target != 0; --b) {
      if (((target >> b) & 1U) == 0) continue;
      target ^= pivot_vec[b];
      combo ^= pivot_combo[b];
    }
    out[static_cast<std::size_t>(i)] = combo;
  }
  return out;
}

}  // namespace

bool validate_witness(const CubeGraph& source, const CubeGraph& target, const LinearMap& map) {
  const int n = source.dimension();
  if (target.dimension() != n || map.dimension() != n) return false;
  if (source.edge_count() != target.edge_count()) return false;
  if (rank_gf2(map.columns()) != n) return false;
  for (const Edge& e : source.edges()) {
    if (!target.adjacent(map.apply(e.u), map.apply(e.v))) return false;
  }
  return true;
}

LinearMap isomorphism_witness(const CubeGraph& graph, const GeneratorSet& from,
                              const GeneratorSet& to) {
  const int n = graph.dimension();
  if (from.ambient_n() != n || to.ambient_n() != n) {
    throw Error(ErrorKind::InvalidInput, "generator width differs from graph dimension");
  }
  if (!is_minimal_generating(from.elements(), n)) {
    throw Error(ErrorKind::NotABasis, "source generators do not form a basis");
  }
  if (!is_minimal_generating(to.elements(), n)) {
    throw Error(ErrorKind::NotABasis, "target generators do not form a basis");
  }
  if (!same_members(graph.generators(), from)) {
    throw Error(ErrorKind::InvalidInput, "graph is not the Cayley graph of the source generators");
  }
  const auto from_bits = from.bits();
  const auto to_bits = to.bits();
  const auto inverse = inverse_columns(from_bits);
  std::vector<Vertex> columns(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    Vertex combo = inverse[static_cast<std::size_t>(i)];
    for (int k = 0; k < n; ++k) {
      if ((combo >> k) & 1U) columns[static_cast<std::size_t>(i)] ^= to_bits[static_cast<std::size_t>(k)];
    }
  }
  LinearMap map(std::move(columns));
  if (!validate_witness(graph, build_cayley(n, to), map)) {
    throw Error(ErrorKind::InvariantViolation, "constructed witness failed edge validation");
  }
  return map;
}

}  // namespace augcube
