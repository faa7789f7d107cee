#include "augcube/oracle.hpp"

#include <algorithm>
#include <deque>
#include <fstream>

#include <json.hpp>

#include "augcube/error.hpp"

namespace augcube {

int VertexMask::count() const noexcept { return std::popcount(words_[0]) + std::popcount(words_[1]); }

int VertexMask::first() const noexcept {
  return words_[0] != 0 ? std::countr_zero(words_[0]) : 64 + std::countr_zero(words_[1]);
}

SmallGraph::SmallGraph(int vertices) {
  if (vertices < 0 || vertices > VertexMask::kCapacity) {
    throw Error(ErrorKind::OutOfDeskScale, "small graphs hold at most 128 vertices");
  }
  adj_.resize(static_cast<std::size_t>(vertices));
}

SmallGraph SmallGraph::from_edges(int vertices, std::span<const Edge> edges) {
  SmallGraph g(vertices);
  for (const Edge& e : edges) g.add_edge(static_cast<int>(e.u), static_cast<int>(e.v));
  return g;
}

SmallGraph SmallGraph::from_cube(const CubeGraph& g) {
  if (g.vertex_count() > static_cast<std::size_t>(VertexMask::kCapacity)) {
    throw Error(ErrorKind::OutOfDeskScale, "small graphs hold at most 128 vertices");
  }
  SmallGraph out(static_cast<int>(g.vertex_count()));
  for (const Edge& e : g.edges()) out.add_edge(static_cast<int>(e.u), static_cast<int>(e.v));
  return out;
}

void SmallGraph::add_edge(int a, int b) {
  if (a == b || a < 0 || b < 0 || a >= vertex_count() || b >= vertex_count()) {
    throw Error(ErrorKind::InvalidEdge, "edge endpoints out of range or equal");
  }
  adj_[a].set(b);
  adj_[b].set(a);
}

void SmallGraph::remove_edge(int a, int b) {
  adj_.at(a).reset(b);
  adj_.at(b).reset(a);
}

std::size_t SmallGraph::edge_count() const {
  std::size_t total = 0;
  for (const auto& m : adj_) total += static_cast<std::size_t>(m.count());
  return total / 2;
}

std::vector<Edge> SmallGraph::edges() const {
  std::vector<Edge> out;
  for (int v = 0; v < vertex_count(); ++v) {
    adj_[v].for_each([&](int w) {
      if (v < w) out.push_back(Edge{static_cast<Vertex>(v), static_cast<Vertex>(w)});
    });
  }
  return out;
}

namespace {

class IsoSearch {
 public:
  IsoSearch(const SmallGraph& g, const SmallGraph& h) : g_(g), h_(h) {
    const int count = g.vertex_count();
    map_.assign(count, -1);
    used_.assign(count, 0);
    // BFS order keeps each new vertex adjacent to something already placed.
    std::vector<char> seen(count, 0);
    for (int s = 0; s < count; ++s) {
      if (seen[s]) continue;
      std::deque<int> queue{s};
      seen[s] = 1;
      while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        order_.push_back(v);
        g.neighbors(v).for_each([&](int w) {
          if (!seen[w]) {
            seen[w] = 1;
            queue.push_back(w);
          }
        });
      }
    }
  }

  bool run(std::size_t depth = 0) {
    if (depth == order_.size()) return true;
    const int v = order_[depth];
    for (int c = 0; c < h_.vertex_count(); ++c) {
      if (used_[c] || h_.degree(c) != g_.degree(v) || !consistent(v, c, depth)) continue;
      map_[v] = c;
      used_[c] = 1;
      if (run(depth + 1)) return true;
      used_[c] = 0;
      map_[v] = -1;
    }
    return false;
  }

  const std::vector<int>& mapping() const noexcept { return map_; }

 private:
  bool consistent(int v, int c, std::size_t depth) const {
    for (std::size_t k = 0; k < depth; ++k) {
      const int w = order_[k];
      if (g_.adjacent(v, w) != h_.adjacent(c, map_[w])) return false;
    }
    return true;
  }

  const SmallGraph& g_;
  const SmallGraph& h_;
  std::vector<int> order_;
  std::vector<int> map_;
  std::vector<char> used_;
};

}  // namespace

IsomorphismResult graph_isomorphic_small(const SmallGraph& g, const SmallGraph& h) {
  IsomorphismResult result;
  const int count = g.vertex_count();
  if (count != h.vertex_count() || g.edge_count() != h.edge_count()) return result;
  std::vector<int> dg;
  std::vector<int> dh;
  for (int v = 0; v < count; ++v) {
    dg.push_back(g.degree(v));
    dh.push_back(h.degree(v));
  }
  std::sort(dg.begin(), dg.end());
  std::sort(dh.begin(), dh.end());
  if (dg != dh) return result;

  IsoSearch search(g, h);
  if (!search.run()) return result;
  const auto& map = search.mapping();
  for (const Edge& e : g.edges()) {
    if (!h.adjacent(map[e.u], map[e.v])) {
      throw Error(ErrorKind::InvariantViolation, "isomorphism witness failed edge check");
    }
  }
  result.isomorphic = true;
  result.mapping = map;
  return result;
}

std::vector<std::vector<Edge>> enumerate_qn_spanning_subgraphs(int n) {
  if (n < 2) throw Error(ErrorKind::InvalidDimension, "subgraph enumeration needs n >= 2");
  if (n > 3) throw Error(ErrorKind::OutOfDeskScale, "subgraph enumeration stops at n = 3");
  const int count = 1 << n;
  const std::vector<Edge> edges = build_augmented_cube(n).edges();
  const SmallGraph cube = SmallGraph::from_cube(build_hypercube(n));
  const int pick = n * (count / 2);
  const int total = static_cast<int>(edges.size());

  std::vector<std::vector<Edge>> out;
  std::vector<int> idx(static_cast<std::size_t>(pick));
  for (int k = 0; k < pick; ++k) idx[k] = k;
  std::vector<int> degree(static_cast<std::size_t>(count));
  std::vector<Edge> chosen(static_cast<std::size_t>(pick));
  while (true) {
    std::fill(degree.begin(), degree.end(), 0);
    for (int k = 0; k < pick; ++k) {
      chosen[k] = edges[idx[k]];
      ++degree[chosen[k].u];
      ++degree[chosen[k].v];
    }
    if (std::all_of(degree.begin(), degree.end(), [n](int d) { return d == n; }) &&
        graph_isomorphic_small(SmallGraph::from_edges(count, chosen), cube).isomorphic) {
      out.push_back(chosen);
    }
    int k = pick - 1;
    while (k >= 0 && idx[k] == total - pick + k) --k;
    if (k < 0) break;
    ++idx[k];
    for (int j = k + 1; j < pick; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

std::uint64_t count_4cycles(const CubeGraph& g) {
  // Each cycle a-b-c-d is counted once: a is its least vertex and b < d.
  std::uint64_t total = 0;
  for (Vertex a = 0; a < g.vertex_count(); ++a) {
    for (Vertex b : g.neighbors(a)) {
      if (b < a) continue;
      for (Vertex c : g.neighbors(b)) {
        if (c <= a) continue;
        for (Vertex d : g.neighbors(c)) {
          if (d > b && g.adjacent(d, a)) ++total;
        }
      }
    }
  }
  return total;
}

std::uint64_t per_edge_4cycles(const CubeGraph& g, const Edge& e) {
  if (!g.adjacent(e.u, e.v)) throw Error(ErrorKind::InvalidEdge, "not an edge of the graph");
  std::uint64_t total = 0;
  for (Vertex c : g.neighbors(e.v)) {
    if (c == e.u) continue;
    for (Vertex d : g.neighbors(c)) {
      if (d != e.v && d != e.u && g.adjacent(d, e.u)) ++total;
    }
  }
  return total;
}

namespace {

struct OutOfBudget {};

class HamOracle {
 public:
  HamOracle(const SmallGraph& g, std::uint64_t budget) : g_(g), budget_(budget) {}

  std::optional<std::vector<int>> run() {
    const int count = g_.vertex_count();
    if (count < 3) return std::nullopt;
    for (int v = 0; v < count; ++v) all_.set(v);
    path_.assign(1, 0);
    VertexMask visited;
    visited.set(0);
    if (extend(visited)) return path_;
    return std::nullopt;
  }

  std::uint64_t expansions() const noexcept { return expansions_; }

 private:
  bool extend(VertexMask& visited) {
    if (++expansions_ > budget_) throw OutOfBudget{};
    const int head = path_.back();
    const VertexMask open = all_.without(visited);
    if (open.empty()) return g_.adjacent(head, 0);
    VertexMask ends;
    ends.set(head);
    ends.set(0);
    bool stranded = false;
    open.for_each([&](int w) {
      if ((g_.neighbors(w) & (open | ends)).count() < 2) stranded = true;
    });
    if (stranded) return false;
    const VertexMask next = g_.neighbors(head) & open;
    std::vector<int> options;
    next.for_each([&](int w) { options.push_back(w); });
    for (int w : options) {
      visited.set(w);
      path_.push_back(w);
      if (extend(visited)) return true;
      path_.pop_back();
      visited.reset(w);
    }
    return false;
  }

  const SmallGraph& g_;
  std::uint64_t budget_;
  std::uint64_t expansions_ = 0;
  VertexMask all_;
  std::vector<int> path_;
};

}  // namespace

HamSearchResult ham_cycle_search(const SmallGraph& g, std::uint64_t budget) {
  HamSearchResult result;
  HamOracle oracle(g, budget);
  try {
    if (auto path = oracle.run()) {
      CycleSequence c;
      for (int v : *path) c.vertices.push_back(static_cast<Vertex>(v));
      result.cycle = std::move(c);
    }
    result.exhausted = true;
  } catch (const OutOfBudget&) {
    result.exhausted = false;
  }
  result.expansions = oracle.expansions();
  return result;
}

HamSearchResult ham_cycle_search(const CubeGraph& g, std::span<const Edge> faults, std::uint64_t budget) {
  SmallGraph small = SmallGraph::from_cube(g);
  for (const Edge& e : faults) small.remove_edge(static_cast<int>(e.u), static_cast<int>(e.v));
  return ham_cycle_search(small, budget);
}

PathSpectrum path_spectrum_search(const CubeGraph& g, const std::set<Vertex>& removed_vertices,
                                  const std::set<Edge>& removed_edges, Vertex u, Vertex v,
                                  std::uint64_t budget) {
  SmallGraph small = SmallGraph::from_cube(g);
  for (const Edge& e : removed_edges) small.remove_edge(static_cast<int>(e.u), static_cast<int>(e.v));
  VertexMask blocked;
  for (Vertex x : removed_vertices) blocked.set(static_cast<int>(x));

  PathSpectrum result;
  std::uint64_t expansions = 0;
  VertexMask visited = blocked;
  visited.set(static_cast<int>(u));
  // Plain DFS over all simple paths from u; v ends a path.
  auto walk = [&](auto&& self, int head, int length) -> void {
    if (++expansions > budget) throw OutOfBudget{};
    if (head == static_cast<int>(v)) {
      result.lengths.insert(length);
      return;
    }
    const VertexMask next = small.neighbors(head).without(visited);
    next.for_each([&](int w) {
      visited.set(w);
      self(self, w, length + 1);
      visited.reset(w);
    });
  };
  try {
    if (!blocked.test(static_cast<int>(u)) && !blocked.test(static_cast<int>(v))) walk(walk, static_cast<int>(u), 0);
    result.exhausted = true;
  } catch (const OutOfBudget&) {
    result.exhausted = false;
  }
  return result;
}

std::vector<Table1Row> load_table1(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidInput, path + ": " + e.what());
  }
  std::vector<Table1Row> rows;
  for (const auto& r : doc.at("rows")) {
    Table1Row row;
    row.row = r.at("row").get<int>();
    std::set<Edge> edges;
    for (const auto& pair : r.at("edges")) {
      const Vertex a = parse_label(pair.at(0).get<std::string>(), 3);
      const Vertex b = parse_label(pair.at(1).get<std::string>(), 3);
      edges.insert(Edge::make(a, b));
      ++row.printed_pairs;
    }
    row.edges.assign(edges.begin(), edges.end());
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace augcube
