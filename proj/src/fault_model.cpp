#include "augcube/fault_model.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <tuple>

#include "augcube/error.hpp"
#include "augcube/rng.hpp"

namespace augcube {

namespace {

constexpr int kMaxFaultDimension = 10;

using Adjacency = std::vector<std::vector<Vertex>>;

void check_dimension(int n, int low) {
  if (n < low) throw Error(ErrorKind::RejectedInput, "needs n >= " + std::to_string(low));
  if (n > kMaxFaultDimension) {
    throw Error(ErrorKind::OutOfDeskScale, "fault model handles n <= " + std::to_string(kMaxFaultDimension));
  }
}

// Fault positions keyed by vertex and canonical matching index.
struct FaultIndex {
  int n;
  Vertex count;
  std::vector<Vertex> gens;
  std::vector<std::uint32_t> mask;

  FaultIndex(int n_, const FaultSet& faults) : n(n_), count(Vertex{1} << n_), mask(count, 0) {
    for (const auto& id : all_matchings(n)) gens.push_back(id.generator_bits());
    for (const Edge& e : faults.faulty) {
      const int k = matching_index(n, MatchingId{*classify_edge(n, e)});
      mask[e.u] |= 1U << k;
      mask[e.v] |= 1U << k;
    }
  }

  bool faulty(Vertex v, int k) const { return (mask[v] >> k) & 1U; }

  // Fault-free adjacency restricted to the matchings in `selection`.
  Adjacency adjacency(std::uint32_t selection) const {
    Adjacency adj(count);
    for (Vertex v = 0; v < count; ++v) {
      for (int k = 0; k < static_cast<int>(gens.size()); ++k) {
        if (((selection >> k) & 1U) && !faulty(v, k)) adj[v].push_back(v ^ gens[k]);
      }
    }
    return adj;
  }

  std::uint32_t all() const { return (1U << gens.size()) - 1; }
};

struct BudgetSpent {};

// Simple-path search for an exact edge count between two vertices (a cycle
// when they coincide). Spanning requests prune on residual degree and follow
// forced moves; shorter requests prune on distance to the target.
class WalkSearch {
 public:
  WalkSearch(const Adjacency& adj, std::vector<char> alive, std::uint64_t budget)
      : adj_(adj), alive_(std::move(alive)), budget_(budget) {}

  std::optional<std::vector<Vertex>> find(Vertex s, Vertex t, int length) {
    exhausted_ = false;
    const std::size_t count = adj_.size();
    if (!alive_[s] || !alive_[t] || length < 1) {
      exhausted_ = true;
      return std::nullopt;
    }
    const int alive_count = static_cast<int>(std::count(alive_.begin(), alive_.end(), 1));
    cycle_ = s == t;
    spanning_ = cycle_ ? length == alive_count : length + 1 == alive_count;
    if ((cycle_ && length < 3) || length > alive_count) {
      exhausted_ = true;
      return std::nullopt;
    }
    s_ = s;
    t_ = t;
    visited_.assign(count, 0);
    dist_.assign(count, -1);
    open_.assign(count, 0);
    if (spanning_) {
      for (Vertex v = 0; v < count; ++v) {
        if (!alive_[v]) continue;
        for (Vertex w : adj_[v]) open_[v] += alive_[w] ? 1 : 0;
        const int needed = (v == s || v == t) && !cycle_ ? 1 : 2;
        if (open_[v] < needed) {
          exhausted_ = true;
          return std::nullopt;
        }
      }
    } else {
      std::deque<Vertex> queue{t};
      dist_[t] = 0;
      while (!queue.empty()) {
        const Vertex v = queue.front();
        queue.pop_front();
        for (Vertex w : adj_[v]) {
          if (alive_[w] && dist_[w] < 0) {
            dist_[w] = dist_[v] + 1;
            queue.push_back(w);
          }
        }
      }
    }
    path_.assign(1, s);
    visited_[s] = 1;
    try {
      if (step(s, length)) {
        exhausted_ = true;
        if (cycle_) path_.pop_back();
        return path_;
      }
    } catch (const BudgetSpent&) {
      return std::nullopt;
    }
    exhausted_ = true;
    return std::nullopt;
  }

  bool exhausted() const noexcept { return exhausted_; }
  std::uint64_t expansions() const noexcept { return expansions_; }

 private:
  bool step(Vertex head, int left) {
    if (++expansions_ > budget_) throw BudgetSpent{};
    if (left == 0) return head == t_;

    std::vector<Vertex> options;
    int forced = 0;
    Vertex forced_vertex = 0;
    for (Vertex w : adj_[head]) {
      if (!alive_[w]) continue;
      if (w == t_) {
        if (left == 1) options.push_back(w);
        continue;
      }
      if (visited_[w] || left < 2) continue;
      if (!spanning_) {
        if (dist_[w] < 0 || dist_[w] > left - 1) continue;
      } else if (open_[w] == 2) {
        ++forced;
        forced_vertex = w;
      }
      options.push_back(w);
    }
    if (forced > 1) return false;
    if (forced == 1) options.assign(1, forced_vertex);
    if (spanning_) {
      std::stable_sort(options.begin(), options.end(),
                       [&](Vertex a, Vertex b) { return open_[a] < open_[b]; });
    }

    for (Vertex w : options) {
      if (w == t_) {
        path_.push_back(w);
        return true;
      }
      if (spanning_ && !close(head, w)) {
        reopen(head);
        continue;
      }
      visited_[w] = 1;
      path_.push_back(w);
      if (step(w, left - 1)) return true;
      path_.pop_back();
      visited_[w] = 0;
      if (spanning_) reopen(head);
    }
    return false;
  }

  // head stops being an endpoint; false when that strands a vertex.
  bool close(Vertex head, Vertex next) {
    bool ok = true;
    const bool stays_open = head == t_;
    if (stays_open) return true;
    for (Vertex y : adj_[head]) {
      if (!alive_[y]) continue;
      --open_[y];
      if (y == next || visited_[y]) continue;
      if (open_[y] < (y == t_ ? 1 : 2)) ok = false;
    }
    if (cycle_ && head != s_ && open_[s_] < 1) ok = false;
    return ok;
  }

  void reopen(Vertex head) {
    if (head == t_) return;
    for (Vertex y : adj_[head]) {
      if (alive_[y]) ++open_[y];
    }
  }

  const Adjacency& adj_;
  std::vector<char> alive_;
  std::uint64_t budget_;
  std::uint64_t expansions_ = 0;
  bool exhausted_ = false;
  bool cycle_ = false;
  bool spanning_ = false;
  Vertex s_ = 0;
  Vertex t_ = 0;
  std::vector<char> visited_;
  std::vector<int> dist_;
  std::vector<int> open_;
  std::vector<Vertex> path_;
};

// Every chord c_i c_j of a cycle closes two shorter cycles; keep the even
// ones not seen yet. Returns the lengths added.
std::vector<int> harvest_chords(const std::vector<Vertex>& cycle, const Adjacency& adj,
                                std::map<int, CycleSequence>& found) {
  const int len = static_cast<int>(cycle.size());
  std::vector<int> pos(adj.size(), -1);
  for (int i = 0; i < len; ++i) pos[cycle[i]] = i;
  std::vector<int> added;
  auto record = [&](int length, auto&& build) {
    if (length < 4 || length % 2 != 0 || found.contains(length)) return;
    CycleSequence c;
    build(c.vertices);
    found.emplace(length, std::move(c));
    added.push_back(length);
  };
  for (int i = 0; i < len; ++i) {
    for (Vertex w : adj[cycle[i]]) {
      const int j = pos[w];
      if (j < 0 || j <= i + 1 || (i == 0 && j == len - 1)) continue;
      record(j - i + 1, [&](std::vector<Vertex>& out) {
        out.assign(cycle.begin() + i, cycle.begin() + j + 1);
      });
      record(len - (j - i) + 1, [&](std::vector<Vertex>& out) {
        out.assign(cycle.begin() + j, cycle.end());
        out.insert(out.end(), cycle.begin(), cycle.begin() + i + 1);
      });
    }
  }
  return added;
}

// Chords of every known cycle until nothing new appears.
void harvest_all(const Adjacency& adj, std::map<int, CycleSequence>& found) {
  std::vector<int> work;
  for (const auto& [len, c] : found) work.push_back(len);
  while (!work.empty()) {
    const int len = work.back();
    work.pop_back();
    const auto cycle = found.at(len).vertices;
    for (int added : harvest_chords(cycle, adj, found)) work.push_back(added);
  }
}

// Runs attempt(k, slice) with slices growing fourfold until one succeeds,
// one proves absence, or the cap is spent.
template <typename Attempt>
std::optional<std::vector<Vertex>> restarting_search(std::uint64_t cap, std::uint64_t& spent, Attempt&& attempt) {
  std::uint64_t used = 0;
  std::uint64_t slice = 50'000;
  for (std::size_t k = 0; used < cap; ++k, slice *= 4) {
    auto [found, expansions, exhausted] = attempt(k, std::min(slice, cap - used));
    used += expansions;
    if (found || exhausted) {
      spent += used;
      return found;
    }
  }
  spent += used;
  return std::nullopt;
}

int counterpart(int n, int k) {
  if (k >= 1 && k < n) return n + k - 1;
  if (k >= n) return k - n + 1;
  return -1;
}

// Scores selections given as bitmasks over canonical matching indices.
class SelectionScorer {
 public:
  SelectionScorer(int n, const FaultSet& faults) : n_(n), index_(n, faults) {
    counts_ = matching_fault_census(faults).counts;
  }

  const FaultIndex& index() const noexcept { return index_; }
  const std::vector<int>& counts() const noexcept { return counts_; }

  int internal(std::uint32_t sel) const {
    int total = 0;
    for (int k = 0; k < static_cast<int>(counts_.size()); ++k) {
      if ((sel >> k) & 1U) total += counts_[k];
    }
    return total;
  }

  bool full_rank(std::uint32_t sel) const {
    std::vector<Vertex> bits;
    for (int k = 0; k < static_cast<int>(index_.gens.size()); ++k) {
      if ((sel >> k) & 1U) bits.push_back(index_.gens[k]);
    }
    return static_cast<int>(bits.size()) == n_ && rank_gf2(std::span<const Vertex>(bits)) == n_;
  }

  SubcubeVerdict evaluate(std::uint32_t sel) const {
    SubcubeVerdict verdict;
    verdict.internal_faults = internal(sel);
    std::vector<std::pair<Vertex, std::array<Vertex, 2>>> low;
    for (Vertex v = 0; v < index_.count; ++v) {
      const int degree = n_ - std::popcount(index_.mask[v] & sel);
      if (degree < 2) {
        verdict.kind = Admissibility::Inadmissible;
        verdict.reason = "vertex " + label(v, n_) + " keeps " + std::to_string(degree) + " fault-free edges";
        return verdict;
      }
      if (degree > 2) continue;
      std::array<Vertex, 2> nb{};
      int filled = 0;
      for (int k = 0; k < static_cast<int>(index_.gens.size()); ++k) {
        if (((sel >> k) & 1U) && !index_.faulty(v, k)) nb[filled++] = v ^ index_.gens[k];
      }
      std::sort(nb.begin(), nb.end());
      low.emplace_back(v, nb);
    }
    verdict.degree_two_vertices = static_cast<int>(low.size());
    if (verdict.internal_faults > 3 * n_ - 8) {
      verdict.kind = Admissibility::Inadmissible;
      verdict.reason = std::to_string(verdict.internal_faults) + " internal faults exceed 3n-8";
      return verdict;
    }
    if (low.size() == 3) {
      verdict.kind = Admissibility::Lemma53Exception;
      verdict.reason = "exactly three degree-2 vertices";
      return verdict;
    }
    for (std::size_t a = 0; a < low.size(); ++a) {
      for (std::size_t b = a + 1; b < low.size(); ++b) {
        if (low[a].second == low[b].second) {
          verdict.kind = Admissibility::Inadmissible;
          verdict.reason = "degree-2 vertices " + label(low[a].first, n_) + " and " + label(low[b].first, n_) +
                           " share both neighbours";
          return verdict;
        }
      }
    }
    return verdict;
  }

 private:
  int n_;
  FaultIndex index_;
  std::vector<int> counts_;
};

std::uint32_t mask_of(int n, const SubcubeSelection& sel) {
  std::uint32_t m = 0;
  for (const auto& id : sel.chosen()) m |= 1U << matching_index(n, id);
  return m;
}

SubcubeSelection selection_of(int n, std::uint32_t mask) {
  std::vector<MatchingId> ids;
  for (int k = 0; k < matching_count(n); ++k) {
    if ((mask >> k) & 1U) ids.push_back(matching_at(n, k));
  }
  return SubcubeSelection(n, std::move(ids));
}

void check_spectrum_input(int n, const FaultSet& faults) {
  check_dimension(n, 5);
  if (faults.n != n) throw Error(ErrorKind::RejectedInput, "fault set dimension differs from n");
  if (static_cast<int>(faults.size()) > 4 * n - 8) {
    throw Error(ErrorKind::RejectedInput, std::to_string(faults.size()) + " faults exceed 4n-8");
  }
  if (!conditional_model_ok(n, faults)) {
    throw Error(ErrorKind::RejectedInput, "a vertex keeps fewer than two fault-free edges");
  }
}

}  // namespace

FaultSet FaultSet::make(int n, std::span<const Edge> edges) {
  if (n < 1 || n > 24) throw Error(ErrorKind::InvalidDimension, "fault set dimension out of range");
  FaultSet out{n, {}};
  for (const Edge& e : edges) {
    const Edge c = Edge::make(e.u, e.v);
    if (!classify_edge(n, c)) {
      throw Error(ErrorKind::InvalidEdge,
                  "(" + label(c.u, n) + ", " + label(c.v, n) + ") is not an edge of AQ_" + std::to_string(n));
    }
    out.faulty.insert(c);
  }
  return out;
}

std::vector<int> fault_free_degrees(int n, const FaultSet& faults) {
  if (n < 1 || n > 24) throw Error(ErrorKind::InvalidDimension, "dimension out of range");
  std::vector<int> degree(std::size_t{1} << n, 2 * n - 1);
  for (const Edge& e : faults.faulty) {
    --degree.at(e.u);
    --degree.at(e.v);
  }
  return degree;
}

bool conditional_model_ok(int n, const FaultSet& faults) {
  const auto degree = fault_free_degrees(n, faults);
  return std::all_of(degree.begin(), degree.end(), [](int d) { return d >= 2; });
}

int FaultCensus::total() const { return std::accumulate(counts.begin(), counts.end(), 0); }

FaultCensus matching_fault_census(const FaultSet& faults) {
  const int n = faults.n;
  FaultCensus census;
  census.n = n;
  census.counts.assign(static_cast<std::size_t>(matching_count(n)), 0);
  for (const Edge& e : faults.faulty) {
    auto cls = classify_edge(n, e);
    if (!cls) throw Error(ErrorKind::InvalidEdge, "fault is not an AQ_n edge");
    ++census.counts[static_cast<std::size_t>(matching_index(n, MatchingId{*cls}))];
  }
  const auto lowest = std::min_element(census.counts.begin(), census.counts.end());
  census.argmin = matching_at(n, static_cast<int>(lowest - census.counts.begin()));
  census.min_count = *lowest;
  census.pigeonhole_applies = static_cast<int>(faults.size()) <= 4 * n - 8;
  return census;
}

std::string to_string(Admissibility a) {
  switch (a) {
    case Admissibility::Admissible: return "admissible";
    case Admissibility::Lemma53Exception: return "lemma53-exception";
    case Admissibility::Inadmissible: return "inadmissible";
  }
  return "?";
}

SubcubeVerdict prop52_admissible(const SpanningSubcube& sub, const FaultSet& faults) {
  const int n = sub.dimension();
  if (faults.n != n) throw Error(ErrorKind::InvalidInput, "fault set dimension differs from subcube");
  SelectionScorer scorer(n, faults);
  return scorer.evaluate(mask_of(n, sub.selection));
}

std::string to_string(SelectionRoute r) {
  switch (r) {
    case SelectionRoute::Guided: return "guided";
    case SelectionRoute::Repair: return "repair";
    case SelectionRoute::Exhaustive: return "exhaustive";
  }
  return "?";
}

FaultLightSubcube select_fault_light_subcube(int n, const FaultSet& faults) {
  check_spectrum_input(n, faults);
  const auto degree = fault_free_degrees(n, faults);
  if (*std::min_element(degree.begin(), degree.end()) < 3) {
    throw Error(ErrorKind::RejectedInput, "subcube selection needs three fault-free edges at every vertex");
  }
  const SelectionScorer scorer(n, faults);
  const FaultCensus census = matching_fault_census(faults);
  const int anchor = matching_index(n, census.argmin);

  auto finish = [&](std::uint32_t mask, SelectionRoute route) {
    return FaultLightSubcube{subcube_from_selection(selection_of(n, mask)), scorer.evaluate(mask), route};
  };

  // Guided: the reciprocal pair meeting in the anchor matching.
  SubcubePair pair = [&] {
    if (anchor == 0) return reciprocal_pair(n, {});
    const MatchingId id = census.argmin;
    return reciprocal_pair_fixed_intersection(n, id.dimension(), id.kind());
  }();
  const std::uint32_t first = mask_of(n, pair.first.selection);
  const std::uint32_t second = mask_of(n, pair.second.selection);
  std::uint32_t mask = scorer.internal(second) < scorer.internal(first) ? second : first;

  for (bool improved = true; improved;) {
    improved = false;
    for (int k = 0; k < matching_count(n) && !improved; ++k) {
      const int c = counterpart(n, k);
      if (k == anchor || c < 0 || !((mask >> k) & 1U) || ((mask >> c) & 1U)) continue;
      const std::uint32_t next = (mask & ~(1U << k)) | (1U << c);
      if (scorer.internal(next) < scorer.internal(mask) && scorer.full_rank(next)) {
        mask = next;
        improved = true;
      }
    }
  }
  if (scorer.evaluate(mask).usable()) return finish(mask, SelectionRoute::Guided);

  // Repair: one, then two, replacements of the guided selection.
  auto best_of = [&](const std::vector<std::uint32_t>& candidates) -> std::optional<std::uint32_t> {
    std::optional<std::uint32_t> best;
    int best_faults = 0;
    for (std::uint32_t cand : candidates) {
      if (!scorer.full_rank(cand)) continue;
      const SubcubeVerdict v = scorer.evaluate(cand);
      if (!v.usable()) continue;
      if (!best || v.internal_faults < best_faults) {
        best = cand;
        best_faults = v.internal_faults;
      }
    }
    return best;
  };
  const std::uint32_t all = (1U << matching_count(n)) - 1;
  std::vector<std::uint32_t> singles;
  std::vector<std::uint32_t> doubles;
  for (std::uint32_t out = mask; out != 0; out &= out - 1) {
    const std::uint32_t o = out & -out;
    for (std::uint32_t in = all & ~mask; in != 0; in &= in - 1) {
      singles.push_back((mask & ~o) | (in & -in));
    }
  }
  if (auto found = best_of(singles)) return finish(*found, SelectionRoute::Repair);
  for (std::uint32_t cand = 0; cand <= all; ++cand) {
    if (std::popcount(cand) == n && std::popcount(cand & mask) == n - 2) doubles.push_back(cand);
  }
  if (auto found = best_of(doubles)) return finish(*found, SelectionRoute::Repair);

  std::vector<std::uint32_t> everything;
  for (const auto& subset : enumerate_cayley_index_subsets(n)) {
    std::uint32_t m = 0;
    for (int k : subset) m |= 1U << k;
    everything.push_back(m);
  }
  if (auto found = best_of(everything)) return finish(*found, SelectionRoute::Exhaustive);
  throw Error(ErrorKind::InvariantViolation,
              "no Cayley subcube keeps at most 3n-8 faults with an admissible verdict");
}

SearchOptions default_search_options() {
  SearchOptions options;
  if (const char* env = std::getenv("AUGCUBE_BUDGET"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (end != nullptr && *end == '\0' && value > 0) options.per_length_budget = value;
  }
  return options;
}

std::string to_string(SpectrumRoute r) {
  return r == SpectrumRoute::DegreeTwoVertex ? "degree-two-vertex" : "fault-light-subcube";
}

SpectrumReport even_cycle_spectrum(int n, const FaultSet& faults, const SearchOptions& options) {
  check_spectrum_input(n, faults);
  const FaultIndex index(n, faults);
  const Vertex count = index.count;
  const Adjacency free_adj = index.adjacency(index.all());
  const auto degree = fault_free_degrees(n, faults);

  SpectrumReport report;
  report.n = n;
  std::uint64_t spent = 0;
  auto allowance = [&]() -> std::uint64_t {
    if (!options.total_budget) return options.per_length_budget;
    if (spent >= *options.total_budget) return 0;
    return std::min(options.per_length_budget, *options.total_budget - spent);
  };

  const auto pivot = std::find(degree.begin(), degree.end(), 2);
  std::optional<Vertex> hub;
  std::array<Vertex, 2> ends{};
  if (pivot != degree.end()) {
    hub = static_cast<Vertex>(pivot - degree.begin());
    ends = {free_adj[*hub][0], free_adj[*hub][1]};
  }

  std::vector<char> all_alive(count, 1);
  std::vector<char> without_hub = all_alive;
  if (hub) without_hub[*hub] = 0;

  if (hub) {
    report.route = SpectrumRoute::DegreeTwoVertex;
    // Hamiltonian x-y path avoiding the hub, alternating direction on restart.
    auto path = restarting_search(allowance(), spent, [&](std::size_t attempt, std::uint64_t slice) {
      WalkSearch search(free_adj, without_hub, slice);
      const bool flip = attempt % 2 == 1;
      auto found = search.find(ends[flip ? 1 : 0], ends[flip ? 0 : 1], static_cast<int>(count) - 2);
      if (found && flip) std::reverse(found->begin(), found->end());
      return std::make_tuple(std::move(found), search.expansions(), search.exhausted());
    });
    if (path) {
      CycleSequence c;
      c.vertices.push_back(*hub);
      c.vertices.insert(c.vertices.end(), path->begin(), path->end());
      report.cycles.emplace(static_cast<int>(count), std::move(c));
    }
  } else {
    report.route = SpectrumRoute::FaultLightSubcube;
    report.selection = select_fault_light_subcube(n, faults);
    const Adjacency sub_adj = index.adjacency(mask_of(n, report.selection->subcube.selection));
    std::vector<Vertex> starts(count);
    std::iota(starts.begin(), starts.end(), Vertex{0});
    std::stable_sort(starts.begin(), starts.end(),
                     [&](Vertex a, Vertex b) { return sub_adj[a].size() < sub_adj[b].size(); });
    auto cycle = restarting_search(allowance(), spent, [&](std::size_t attempt, std::uint64_t slice) {
      WalkSearch search(sub_adj, all_alive, slice);
      const Vertex start = starts[attempt % count];
      auto found = search.find(start, start, static_cast<int>(count));
      return std::make_tuple(std::move(found), search.expansions(), search.exhausted());
    });
    if (cycle) {
      report.cycles.emplace(static_cast<int>(count), CycleSequence{*cycle});
      harvest_all(sub_adj, report.cycles);
    }
  }
  harvest_all(free_adj, report.cycles);

  for (int len = 4; len <= static_cast<int>(count); len += 2) {
    if (report.cycles.contains(len)) continue;
    const std::uint64_t cap = allowance();
    std::uint64_t used = 0;
    std::optional<std::vector<Vertex>> found;
    if (hub && len >= 6) {
      WalkSearch search(free_adj, without_hub, cap);
      found = search.find(ends[0], ends[1], len - 2);
      used += search.expansions();
      if (found) found->insert(found->begin(), *hub);
    }
    // A start with no cycle of this length is dropped for later starts.
    std::vector<char> alive = all_alive;
    for (Vertex s = 0; s < count && !found && used < cap; ++s) {
      WalkSearch search(free_adj, alive, cap - used);
      found = search.find(s, s, len);
      used += search.expansions();
      if (!found && search.exhausted()) alive[s] = 0;
    }
    spent += used;
    if (found) {
      report.cycles.emplace(len, CycleSequence{*found});
      harvest_all(free_adj, report.cycles);
    }
  }

  for (int len = 4; len <= static_cast<int>(count); len += 2) {
    if (!report.cycles.contains(len)) report.missing_lengths.push_back(len);
  }
  report.expansions = spent;
  return report;
}

std::string check_spectrum(int n, const FaultSet& faults, const SpectrumReport& report) {
  const Vertex count = Vertex{1} << n;
  for (const auto& [len, cycle] : report.cycles) {
    const std::string tag = "length " + std::to_string(len) + ": ";
    if (static_cast<int>(cycle.size()) != len) return tag + "cycle has " + std::to_string(cycle.size()) + " vertices";
    if (len < 4 || len % 2 != 0 || len > static_cast<int>(count)) return tag + "not an even length in range";
    std::vector<char> seen(count, 0);
    for (Vertex v : cycle.vertices) {
      if (v >= count || seen[v]) return tag + "vertex repeated or out of range";
      seen[v] = 1;
    }
    for (const Edge& e : cycle.edges()) {
      if (!classify_edge(n, e)) return tag + "(" + label(e.u, n) + ", " + label(e.v, n) + ") is not an edge";
      if (faults.contains(e)) return tag + "uses faulty edge (" + label(e.u, n) + ", " + label(e.v, n) + ")";
    }
  }
  for (int len = 4; len <= static_cast<int>(count); len += 2) {
    const bool listed = std::find(report.missing_lengths.begin(), report.missing_lengths.end(), len) !=
                        report.missing_lengths.end();
    if (report.cycles.contains(len) == listed) return "length " + std::to_string(len) + " inconsistently reported";
  }
  return {};
}

FaultSet figure4_fixture(int n) {
  if (n < 3 || n > 24) throw Error(ErrorKind::InvalidDimension, "fixture needs n >= 3");
  // u = 0 and v = 11 sit opposite on the 4-cycle 0, 1, 3, 2.
  const Vertex u = 0;
  const Vertex v = 3;
  std::vector<Edge> edges;
  for (int k = 2; k < n; ++k) {
    edges.push_back(Edge::make(u, u ^ (Vertex{1} << k)));
    edges.push_back(Edge::make(v, v ^ (Vertex{1} << k)));
  }
  return FaultSet::make(n, edges);
}

std::vector<Vertex> fault_free_path_of_length(int n, const Obstruction& removed, Vertex u, Vertex v,
                                              int length, std::uint64_t budget) {
  check_dimension(n, 2);
  const Vertex count = Vertex{1} << n;
  if (static_cast<int>(removed.size()) > 2 * n - 4) {
    throw Error(ErrorKind::RejectedInput, "more than 2n-4 removed vertices and edges");
  }
  if (u == v || u >= count || v >= count) throw Error(ErrorKind::RejectedInput, "endpoints must be distinct vertices");
  if (removed.vertices.contains(u) || removed.vertices.contains(v)) {
    throw Error(ErrorKind::RejectedInput, "an endpoint is removed");
  }
  FaultSet blocked = FaultSet::make(n, std::vector<Edge>(removed.edges.begin(), removed.edges.end()));
  const int distance = build_augmented_cube(n).distances_from(u)[v];
  const int lowest = std::max(distance + 2, 4);
  const int highest = static_cast<int>(count) - static_cast<int>(removed.vertices.size()) - 1;
  if (length < lowest || length > highest) {
    throw Error(ErrorKind::RejectedInput, "length " + std::to_string(length) + " outside [" +
                                              std::to_string(lowest) + ", " + std::to_string(highest) + "]");
  }
  const FaultIndex index(n, blocked);
  const Adjacency adj = index.adjacency(index.all());
  std::vector<char> alive(count, 1);
  for (Vertex x : removed.vertices) alive.at(x) = 0;
  WalkSearch search(adj, std::move(alive), budget);
  auto path = search.find(u, v, length);
  if (path) return *path;
  if (!search.exhausted()) {
    throw Error(ErrorKind::SearchBudgetExceeded, "path search ran out of budget");
  }
  throw Error(ErrorKind::InvariantViolation, "no path of length " + std::to_string(length) + " exists");
}

std::string to_string(FaultPattern p) {
  switch (p) {
    case FaultPattern::Random: return "random";
    case FaultPattern::Vertex: return "vertex";
    case FaultPattern::Matching: return "matching";
    case FaultPattern::Path2: return "path2";
    case FaultPattern::Figure4: return "fig4";
  }
  return "?";
}

FaultPattern parse_fault_pattern(std::string_view text) {
  for (auto p : {FaultPattern::Random, FaultPattern::Vertex, FaultPattern::Matching, FaultPattern::Path2,
                 FaultPattern::Figure4}) {
    if (text == to_string(p)) return p;
  }
  throw Error(ErrorKind::InvalidInput, "unknown fault pattern '" + std::string(text) + "'");
}

namespace {

class FaultBuilder {
 public:
  FaultBuilder(int n, int target, std::uint64_t seed)
      : n_(n), count_(Vertex{1} << n), target_(target), rng_(seed), degree_(count_, 2 * n - 1) {
    for (const auto& id : all_matchings(n)) gens_.push_back(id.generator_bits());
  }

  bool full() const { return static_cast<int>(edges_.size()) >= target_; }

  bool add(Vertex a, Vertex b) {
    if (full()) return false;
    const Edge e = Edge::make(a, b);
    if (degree_[e.u] <= 2 || degree_[e.v] <= 2 || !edges_.insert(e).second) return false;
    --degree_[e.u];
    --degree_[e.v];
    return true;
  }

  // Fault up to `k` edges at v, drawn in random generator order.
  void concentrate(Vertex v, int k) {
    std::vector<Vertex> order = gens_;
    shuffle(order);
    for (Vertex g : order) {
      if (k <= 0) break;
      if (add(v, v ^ g)) --k;
    }
  }

  void fill() {
    for (std::uint64_t tries = 0; !full(); ++tries) {
      if (tries > 1'000'000) throw Error(ErrorKind::InvalidInput, "cannot place that many conditional faults");
      const Vertex v = vertex();
      add(v, v ^ gen());
    }
  }

  Vertex vertex() { return static_cast<Vertex>(rng_.below(count_)); }
  Vertex gen() { return gens_[rng_.below(gens_.size())]; }
  std::uint64_t below(std::uint64_t bound) { return rng_.below(bound); }
  bool coin() { return rng_.chance(1, 2); }

  void shuffle(std::vector<Vertex>& items) {
    for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[rng_.below(i)]);
  }

  FaultSet result() const { return FaultSet::make(n_, std::vector<Edge>(edges_.begin(), edges_.end())); }

  const std::vector<Vertex>& gens() const noexcept { return gens_; }

 private:
  int n_;
  Vertex count_;
  int target_;
  SplitMix64 rng_;
  std::vector<int> degree_;
  std::vector<Vertex> gens_;
  std::set<Edge> edges_;
};

}  // namespace

FaultSet generate_faults(int n, int count, FaultPattern pattern, std::uint64_t seed) {
  check_dimension(n, 3);
  if (count < 0) throw Error(ErrorKind::InvalidInput, "fault count must be nonnegative");
  FaultBuilder b(n, count, seed);
  switch (pattern) {
    case FaultPattern::Random:
      break;
    case FaultPattern::Vertex: {
      const Vertex u = b.vertex();
      const int heavy = b.coin() ? 2 * n - 3 : n + static_cast<int>(b.below(static_cast<std::uint64_t>(n - 3)));
      b.concentrate(u, heavy);
      const Vertex w = b.coin() ? u ^ b.gen() : b.vertex();
      b.concentrate(w, 1 + static_cast<int>(b.below(static_cast<std::uint64_t>(2 * n - 3))));
      break;
    }
    case FaultPattern::Matching: {
      const auto& gens = b.gens();
      const std::size_t first = b.below(gens.size());
      std::size_t second = b.below(gens.size() - 1);
      if (second >= first) ++second;
      const int share = count / 2 + static_cast<int>(b.below(static_cast<std::uint64_t>(count - count / 2 + 1)));
      for (int placed = 0, tries = 0; placed < share && tries < 100000; ++tries) {
        const Vertex v = b.vertex();
        placed += b.add(v, v ^ gens[first]) ? 1 : 0;
      }
      for (int tries = 0; !b.full() && tries < 100000; ++tries) {
        const Vertex v = b.vertex();
        b.add(v, v ^ gens[second]);
      }
      break;
    }
    case FaultPattern::Path2: {
      // Three consecutive vertices of Q_n^1 left with two fault-free Q_n^1 edges.
      const Vertex mid = b.vertex();
      const int a = static_cast<int>(b.below(static_cast<std::uint64_t>(n)));
      int c = static_cast<int>(b.below(static_cast<std::uint64_t>(n - 1)));
      if (c >= a) ++c;
      const Vertex left = mid ^ (Vertex{1} << a);
      const Vertex right = mid ^ (Vertex{1} << c);
      auto keep_two = [&](Vertex v, int keep, int also) {
        for (int d = 0; d < n; ++d) {
          if (d != keep && d != also) b.add(v, v ^ (Vertex{1} << d));
        }
      };
      auto other = [&](int avoid) {
        int d = static_cast<int>(b.below(static_cast<std::uint64_t>(n - 1)));
        return d >= avoid ? d + 1 : d;
      };
      keep_two(mid, a, c);
      keep_two(left, a, other(a));
      keep_two(right, c, other(c));
      break;
    }
    case FaultPattern::Figure4: {
      const Vertex shift = b.vertex();
      for (const Edge& e : figure4_fixture(n).faulty) b.add(e.u ^ shift, e.v ^ shift);
      break;
    }
  }
  b.fill();
  return b.result();
}

TrialReport run_fault_trial(int n, int fault_count, FaultPattern pattern, std::uint64_t seed,
                            const SearchOptions& options) {
  TrialReport trial;
  trial.seed = seed;
  trial.pattern = pattern;
  trial.faults = generate_faults(n, fault_count, pattern, seed);
  trial.conditional_ok = conditional_model_ok(n, trial.faults);
  trial.spectrum = even_cycle_spectrum(n, trial.faults, options);
  trial.selection = trial.spectrum.selection;
  trial.spectrum_problem = check_spectrum(n, trial.faults, trial.spectrum);
  return trial;
}

}  // namespace augcube
