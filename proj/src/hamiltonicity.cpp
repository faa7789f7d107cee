#include "augcube/hamiltonicity.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <unordered_map>
#include <unordered_set>

#include "augcube/error.hpp"
#include "augcube/reciprocity.hpp"
#include "augcube/rng.hpp"

namespace augcube {

std::vector<Edge> CycleSequence::edges() const {
  std::vector<Edge> out;
  out.reserve(vertices.size());
  for (std::size_t t = 0; t < vertices.size(); ++t) {
    out.push_back(Edge::make(vertices[t], vertices[(t + 1) % vertices.size()]));
  }
  return out;
}

namespace {

// 2-factors of Q_n held as one colour per edge, plus per-factor successor,
// cycle id and cycle count so a 4-cycle switch can be scored in O(1).
class FactorSwitcher {
 public:
  FactorSwitcher(int n, int factors) : n_(n), count_(Vertex{1} << n), factors_(factors) {
    colour_.assign(count_ * static_cast<std::size_t>(n), 0);
    for (Vertex v = 0; v < count_; ++v) {
      for (int d = 0; d < n; ++d) colour_[slot(v, d)] = static_cast<std::uint8_t>(d / 2);
    }
    next_.assign(static_cast<std::size_t>(factors), std::vector<Vertex>(count_));
    comp_.assign(static_cast<std::size_t>(factors), std::vector<std::uint32_t>(count_));
    cycles_.assign(static_cast<std::size_t>(factors), 0);
    for (int f = 0; f < factors; ++f) relabel(f);
  }

  int total_cycles() const {
    int t = 0;
    for (int c : cycles_) t += c;
    return t;
  }

  void run(std::uint64_t seed, std::uint64_t max_steps) {
    SplitMix64 rng(seed);
    for (std::uint64_t step = 0; step < max_steps && total_cycles() > factors_; ++step) {
      const auto v = static_cast<Vertex>(rng.below(count_));
      const int i = static_cast<int>(rng.below(static_cast<std::uint64_t>(n_)));
      int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(n_ - 1)));
      if (j >= i) ++j;
      const Vertex a = v;
      const Vertex b = v ^ (Vertex{1} << i);
      const Vertex c = b ^ (Vertex{1} << j);
      const Vertex d = v ^ (Vertex{1} << j);
      const int x = colour_[slot(a, i)];
      const int y = colour_[slot(b, j)];
      if (x == y || colour_[slot(d, i)] != x || colour_[slot(a, j)] != y) continue;
      const int delta = change(x, a, b, c, d) + change(y, b, c, d, a);
      if (delta > 0 || (delta == 0 && !rng.chance(1, 2))) continue;
      set_colour(a, i, y);
      set_colour(d, i, y);
      set_colour(b, j, x);
      set_colour(a, j, x);
      relabel(x);
      relabel(y);
    }
  }

  CycleSequence factor_cycle(int f) const {
    CycleSequence cycle;
    const auto nb = factor_neighbors(f, 0);
    Vertex prev = 0;
    Vertex cur = std::min(nb[0], nb[1]);
    cycle.vertices.push_back(0);
    while (cur != 0) {
      cycle.vertices.push_back(cur);
      const auto step = factor_neighbors(f, cur);
      const Vertex nxt = step[0] == prev ? step[1] : step[0];
      prev = cur;
      cur = nxt;
    }
    return cycle;
  }

 private:
  std::size_t slot(Vertex v, int d) const { return static_cast<std::size_t>(v) * n_ + d; }

  void set_colour(Vertex v, int d, int f) {
    colour_[slot(v, d)] = static_cast<std::uint8_t>(f);
    colour_[slot(v ^ (Vertex{1} << d), d)] = static_cast<std::uint8_t>(f);
  }

  std::array<Vertex, 2> factor_neighbors(int f, Vertex v) const {
    std::array<Vertex, 2> out{};
    int k = 0;
    for (int d = 0; d < n_ && k < 2; ++d) {
      if (colour_[slot(v, d)] == f) out[k++] = v ^ (Vertex{1} << d);
    }
    return out;
  }

  void relabel(int f) {
    auto& next = next_[f];
    auto& comp = comp_[f];
    std::vector<char> seen(count_, 0);
    std::uint32_t id = 0;
    for (Vertex s = 0; s < count_; ++s) {
      if (seen[s]) continue;
      Vertex prev = s;
      Vertex cur = factor_neighbors(f, s)[0];
      next[s] = cur;
      comp[s] = id;
      seen[s] = 1;
      while (cur != s) {
        seen[cur] = 1;
        comp[cur] = id;
        const auto nb = factor_neighbors(f, cur);
        const Vertex nxt = nb[0] == prev ? nb[1] : nb[0];
        next[cur] = nxt;
        prev = cur;
        cur = nxt;
      }
      ++id;
    }
    cycles_[f] = static_cast<int>(id);
  }

  // Cycle-count change in factor f when p-q and r-s are replaced by q-r and s-p.
  int change(int f, Vertex p, Vertex q, Vertex r, Vertex s) const {
    const auto& next = next_[f];
    const auto& comp = comp_[f];
    if (comp[p] != comp[r]) return -1;
    const bool forward = next[p] == q;
    return (forward ? next[r] == s : next[s] == r) ? 1 : 0;
  }

  int n_;
  Vertex count_;
  int factors_;
  std::vector<std::uint8_t> colour_;
  std::vector<std::vector<Vertex>> next_;
  std::vector<std::vector<std::uint32_t>> comp_;
  std::vector<int> cycles_;
};

constexpr std::uint64_t kSwitchSeed = 0x5eed2c0ffee1ULL;

EdhcBundle even_decomposition(int n) {
  const int factors = n / 2;
  FactorSwitcher switcher(n, factors);
  for (std::uint64_t attempt = 0; switcher.total_cycles() > factors; ++attempt) {
    if (attempt == 8) {
      throw Error(ErrorKind::InvariantViolation,
                  "4-cycle switching did not reach a Hamiltonian decomposition of Q_" + std::to_string(n));
    }
    switcher.run(SplitMix64::derive(kSwitchSeed, attempt), std::uint64_t{4000} << n);
  }
  EdhcBundle bundle{GraphKind::Hypercube, n, {}};
  for (int f = 0; f < factors; ++f) bundle.cycles.push_back(switcher.factor_cycle(f));
  return bundle;
}

}  // namespace

EdhcBundle hypercube_ham_decomposition(int n) {
  if (n < 2 || n > 20) throw Error(ErrorKind::InvalidDimension, "hypercube decomposition needs 2 <= n <= 20");
  if (n % 2 == 0) return even_decomposition(n);
  EdhcBundle lower = hypercube_ham_decomposition(n - 1);
  const Vertex top = Vertex{1} << (n - 1);
  const auto bridges = select_merge_edges(lower.cycles, {});
  EdhcBundle bundle{GraphKind::Hypercube, n, {}};
  for (std::size_t k = 0; k < lower.cycles.size(); ++k) {
    bundle.cycles.push_back(merge_across(lower.cycles[k], [top](Vertex v) { return v ^ top; }, bridges[k]));
  }
  return bundle;
}

std::vector<Edge> select_merge_edges(const std::vector<CycleSequence>& cycles,
                                     const std::set<Vertex>& forbidden) {
  std::unordered_set<Vertex> used(forbidden.begin(), forbidden.end());
  std::vector<Edge> out;
  for (std::size_t k = 0; k < cycles.size(); ++k) {
    const auto& vs = cycles[k].vertices;
    bool found = false;
    for (std::size_t t = 0; t < vs.size() && !found; ++t) {
      const Vertex a = vs[t];
      const Vertex b = vs[(t + 1) % vs.size()];
      if (used.contains(a) || used.contains(b)) continue;
      used.insert(a);
      used.insert(b);
      out.push_back(Edge::make(a, b));
      found = true;
    }
    if (!found) {
      throw Error(ErrorKind::SelectionFailed, "no admissible merge edge on cycle " + std::to_string(k));
    }
  }
  return out;
}

CycleSequence merge_across(const CycleSequence& cycle, const VertexMap& cross, const Edge& e) {
  const auto& vs = cycle.vertices;
  const std::size_t len = vs.size();
  if (len < 3) throw Error(ErrorKind::InvalidInput, "a cycle needs at least 3 vertices");
  // Walk the cycle from v back round to u without using u-v.
  std::vector<Vertex> path;
  path.reserve(len);
  for (std::size_t t = 0; t < len && path.empty(); ++t) {
    const Vertex a = vs[t];
    const Vertex b = vs[(t + 1) % len];
    if (Edge::make(a, b) != e) continue;
    for (std::size_t s = 0; s < len; ++s) path.push_back(vs[(t + 1 + s) % len]);
  }
  if (path.empty()) throw Error(ErrorKind::InvalidEdge, "merge edge is not on the cycle");

  std::unordered_set<Vertex> own(vs.begin(), vs.end());
  std::unordered_set<Vertex> image;
  CycleSequence out;
  out.vertices = path;
  out.vertices.reserve(2 * len);
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    const Vertex w = cross(*it);
    if (own.contains(w) || !image.insert(w).second) {
      throw Error(ErrorKind::InvalidInput, "cross map is not a bijection onto a disjoint copy");
    }
    out.vertices.push_back(w);
  }
  return out;
}

namespace {

std::vector<CycleSequence> embed(const std::vector<CycleSequence>& cycles, const std::vector<Vertex>& basis) {
  std::vector<CycleSequence> out;
  const LinearMap psi(basis);
  for (const auto& c : cycles) {
    CycleSequence mapped;
    mapped.vertices.reserve(c.size());
    for (Vertex y : c.vertices) mapped.vertices.push_back(psi.apply(y));
    out.push_back(std::move(mapped));
  }
  return out;
}

}  // namespace

EdhcBundle augcube_edhcs(int n) {
  if (n < 3 || n > 21) throw Error(ErrorKind::InvalidDimension, "EDHC construction needs 3 <= n <= 21");
  if (n <= 4) {
    const CubeGraph host = build_augmented_cube(n);
    auto found = search_edhcs(host, 2, 50'000'000);
    if (!found) throw Error(ErrorKind::InvariantViolation, "no EDHC pair found for AQ_" + std::to_string(n));
    return *found;
  }

  const SubcubeSplit c_side = split_along_matching(subcube_from_selection(canonical_hypercube_selection(n)),
                                                   MatchingId::hypercube(1));
  const SubcubeSplit d_side = split_along_matching(subcube_from_selection(canonical_augmented_selection(n)),
                                                   MatchingId::hypercube(1));
  const EdhcBundle half = hypercube_ham_decomposition(n - 1);

  const auto c_cycles = embed(half.cycles, c_side.half_generators);
  const auto d_cycles = embed(half.cycles, d_side.half_generators);

  const auto c_bridges = select_merge_edges(c_cycles, {});
  // The D side must avoid both ends of every E_1 edge the C side will use.
  std::set<Vertex> forbidden;
  for (const Edge& e : c_bridges) {
    for (Vertex w : {e.u, e.v}) {
      forbidden.insert(w);
      forbidden.insert(c_side.cross(w));
    }
  }
  const auto d_bridges = select_merge_edges(d_cycles, forbidden);

  EdhcBundle bundle{GraphKind::AugmentedCube, n, {}};
  const auto c_cross = [&](Vertex v) { return c_side.cross(v); };
  const auto d_cross = [&](Vertex v) { return d_side.cross(v); };
  for (std::size_t k = 0; k < c_cycles.size(); ++k) {
    bundle.cycles.push_back(merge_across(c_cycles[k], c_cross, c_bridges[k]));
  }
  for (std::size_t k = 0; k < d_cycles.size(); ++k) {
    bundle.cycles.push_back(merge_across(d_cycles[k], d_cross, d_bridges[k]));
  }
  return bundle;
}

namespace {

struct BudgetExhausted {};

class EdhcSearch {
 public:
  EdhcSearch(const CubeGraph& host, std::uint64_t budget) : budget_(budget) {
    count_ = static_cast<int>(host.vertex_count());
    full_ = count_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << count_) - 1;
    avail_.assign(static_cast<std::size_t>(count_), 0);
    for (int v = 0; v < count_; ++v) {
      for (Vertex w : host.neighbors(static_cast<Vertex>(v))) avail_[v] |= std::uint64_t{1} << w;
    }
  }

  bool solve(int remaining) {
    if (remaining == 0) return true;
    path_.assign(1, 0);
    return extend(std::uint64_t{1}, remaining);
  }

  std::uint64_t expansions() const noexcept { return expansions_; }
  const std::vector<CycleSequence>& cycles() const noexcept { return found_; }

 private:
  bool extend(std::uint64_t visited, int remaining) {
    if (++expansions_ > budget_) throw BudgetExhausted{};
    const int cur = path_.back();
    if (visited == full_) {
      if (!((avail_[cur] >> 0) & 1U) || path_[1] > path_.back()) return false;
      return accept(remaining);
    }
    const std::uint64_t open = full_ & ~visited;
    // Every unvisited vertex needs two usable neighbours among open, cur and 0.
    const std::uint64_t ends = (std::uint64_t{1} << cur) | 1U;
    for (std::uint64_t m = open; m != 0; m &= m - 1) {
      const int w = std::countr_zero(m);
      if (std::popcount(avail_[w] & (open | ends)) < 2) return false;
    }
    for (std::uint64_t m = avail_[cur] & open; m != 0; m &= m - 1) {
      const int w = std::countr_zero(m);
      path_.push_back(w);
      if (extend(visited | (std::uint64_t{1} << w), remaining)) return true;
      path_.pop_back();
    }
    return false;
  }

  bool accept(int remaining) {
    const std::vector<int> cycle = path_;
    toggle(cycle);
    CycleSequence seq;
    for (int v : cycle) seq.vertices.push_back(static_cast<Vertex>(v));
    found_.push_back(std::move(seq));
    const bool done = solve(remaining - 1);
    if (done) return true;
    found_.pop_back();
    toggle(cycle);
    path_ = cycle;
    return false;
  }

  void toggle(const std::vector<int>& cycle) {
    for (std::size_t t = 0; t < cycle.size(); ++t) {
      const int a = cycle[t];
      const int b = cycle[(t + 1) % cycle.size()];
      avail_[a] ^= std::uint64_t{1} << b;
      avail_[b] ^= std::uint64_t{1} << a;
    }
  }

  std::uint64_t budget_;
  std::uint64_t expansions_ = 0;
  int count_ = 0;
  std::uint64_t full_ = 0;
  std::vector<std::uint64_t> avail_;
  std::vector<int> path_;
  std::vector<CycleSequence> found_;
};

}  // namespace

std::optional<EdhcBundle> search_edhcs(const CubeGraph& host, int count, std::uint64_t budget,
                                       std::uint64_t* expansions) {
  if (host.vertex_count() > 64 || host.vertex_count() < 3) {
    throw Error(ErrorKind::OutOfDeskScale, "EDHC search handles hosts with 3..64 vertices");
  }
  EdhcSearch search(host, budget);
  std::optional<EdhcBundle> out;
  try {
    if (search.solve(count)) out = EdhcBundle{host.kind(), host.dimension(), search.cycles()};
  } catch (const BudgetExhausted&) {
  }
  if (expansions) *expansions = search.expansions();
  return out;
}

EdhcReport verify_edhc_bundle(const CubeGraph& host, const EdhcBundle& bundle) {
  EdhcReport report;
  auto fail = [&](int cycle, std::string why, std::optional<Edge> edge = std::nullopt) {
    report.pass = false;
    report.cycle = cycle;
    report.violation = std::move(why);
    report.edge = edge;
    return report;
  };
  if (bundle.n != host.dimension()) return fail(-1, "bundle dimension differs from host");
  const std::size_t count = host.vertex_count();
  std::unordered_map<std::uint64_t, int> owner;
  for (std::size_t k = 0; k < bundle.cycles.size(); ++k) {
    const int id = static_cast<int>(k);
    const auto& vs = bundle.cycles[k].vertices;
    if (vs.size() != count) return fail(id, "cycle is not spanning");
    std::vector<char> seen(count, 0);
    for (Vertex v : vs) {
      if (v >= count) return fail(id, "vertex outside host");
      if (seen[v]) return fail(id, "vertex repeated");
      seen[v] = 1;
    }
    for (std::size_t t = 0; t < vs.size(); ++t) {
      const Vertex a = vs[t];
      const Vertex b = vs[(t + 1) % vs.size()];
      const Edge e = Edge::make(a, b);
      if (!host.adjacent(a, b)) return fail(id, "consecutive vertices are not adjacent", e);
      auto [it, fresh] = owner.emplace(edge_key(e), id);
      if (!fresh) {
        return fail(id, "edge shared with cycle " + std::to_string(it->second), e);
      }
    }
  }
  return report;
}

std::vector<Edge> residual_edges(const CubeGraph& host, const EdhcBundle& bundle) {
  std::unordered_set<std::uint64_t> used;
  for (const auto& c : bundle.cycles) {
    for (const Edge& e : c.edges()) used.insert(edge_key(e));
  }
  std::vector<Edge> out;
  for (const Edge& e : host.edges()) {
    if (!used.contains(edge_key(e))) out.push_back(e);
  }
  return out;
}

bool is_perfect_matching(std::span<const Edge> edges, std::size_t vertex_count) {
  if (edges.size() * 2 != vertex_count) return false;
  std::vector<char> hit(vertex_count, 0);
  for (const Edge& e : edges) {
    if (e.u >= vertex_count || e.v >= vertex_count || hit[e.u] || hit[e.v]) return false;
    hit[e.u] = hit[e.v] = 1;
  }
  return true;
}

}  // namespace augcube
