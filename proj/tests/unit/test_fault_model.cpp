#include <gtest/gtest.h>

#include "augcube/fault_model.hpp"
#include "augcube/oracle.hpp"
#include "augcube/rng.hpp"
#include "expect_error.hpp"

using namespace augcube;

namespace {

FaultSet random_faults(int n, int count, SplitMix64& rng) {
  const auto all = build_augmented_cube(n).edges();
  std::set<Edge> picked;
  while (static_cast<int>(picked.size()) < count) picked.insert(all[rng.below(all.size())]);
  return FaultSet::make(n, std::vector<Edge>(picked.begin(), picked.end()));
}

}  // namespace

TEST(FaultSet, RejectsNonEdges) {
  const std::vector<Edge> bad{Edge::make(0, 5)};
  EXPECT_ERROR_KIND(FaultSet::make(3, bad), ErrorKind::InvalidEdge);
}

TEST(ConditionalModel, Examples) {
  EXPECT_TRUE(conditional_model_ok(5, FaultSet::make(5, {})));
  const CubeGraph g = build_augmented_cube(5);
  std::vector<Edge> star;
  for (Vertex w : g.neighbors(0)) star.push_back(Edge::make(0, w));
  star.pop_back();
  EXPECT_FALSE(conditional_model_ok(5, FaultSet::make(5, star)));
  star.pop_back();
  EXPECT_TRUE(conditional_model_ok(5, FaultSet::make(5, star)));
}

TEST(Census, ConservationOverSeededTrials) {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 3 + trial % 4;
    const int count = static_cast<int>(rng.below(static_cast<std::uint64_t>(4 * n - 7)));
    const FaultCensus census = matching_fault_census(random_faults(n, count, rng));
    EXPECT_EQ(census.total(), count);
    for (int c : census.counts) EXPECT_LE(c, 1 << (n - 1));
    EXPECT_LE(census.min_count, 1);
    EXPECT_TRUE(census.pigeonhole_applies || n < 5);
  }
}

TEST(Census, WholeMatchingAndSingleEdge) {
  const auto e1 = canonical_matching(5, MatchingId::hypercube(1));
  const FaultCensus full = matching_fault_census(FaultSet::make(5, e1));
  EXPECT_EQ(full.count(MatchingId::hypercube(1)), 16);
  EXPECT_EQ(full.total(), 16);
  const std::vector<Edge> one{Edge::make(0, 3)};
  const FaultCensus single = matching_fault_census(FaultSet::make(5, one));
  EXPECT_EQ(single.count(MatchingId::augmented(2)), 1);
  EXPECT_EQ(single.total(), 1);
}

TEST(Admissibility, EmptyFaultsAreAdmissible) {
  const auto sub = subcube_from_selection(canonical_hypercube_selection(5));
  EXPECT_EQ(prop52_admissible(sub, FaultSet::make(5, {})).kind, Admissibility::Admissible);
}

TEST(Admissibility, CornerFixtureIsInadmissible) {
  for (int n = 3; n <= 6; ++n) {
    const FaultSet f = figure4_fixture(n);
    EXPECT_EQ(static_cast<int>(f.size()), 2 * n - 4);
    const auto sub = subcube_from_selection(canonical_hypercube_selection(n));
    EXPECT_EQ(prop52_admissible(sub, f).kind, Admissibility::Inadmissible);
  }
}

TEST(Admissibility, FaultyTwoPathIsTheException) {
  const int n = 5;
  const auto sub = subcube_from_selection(canonical_hypercube_selection(n));
  // Faulty 2-path 0 - 1 - 3: each of the three loses dimensions 1..n-2.
  std::set<Edge> faults;
  for (Vertex v : {0U, 1U, 3U}) {
    for (int k = 0; k < n - 2; ++k) faults.insert(Edge::make(v, v ^ (Vertex{1} << k)));
  }
  ASSERT_EQ(static_cast<int>(faults.size()), 3 * n - 8);
  const auto list = std::vector<Edge>(faults.begin(), faults.end());
  const auto verdict = prop52_admissible(sub, FaultSet::make(n, list));
  EXPECT_EQ(verdict.degree_two_vertices, 3);
  EXPECT_EQ(verdict.kind, Admissibility::Lemma53Exception);
}

TEST(Selection, EmptyFaultsGiveTheCanonicalHypercube) {
  const auto s = select_fault_light_subcube(5, FaultSet::make(5, {}));
  EXPECT_EQ(s.subcube.selection, canonical_hypercube_selection(5));
  EXPECT_EQ(s.verdict.internal_faults, 0);
}

TEST(Selection, AugmentedFaultsLeaveTheHypercubeClean) {
  std::vector<Edge> faults;
  for (int j = 2; j <= 5; ++j) {
    const auto m = canonical_matching(5, MatchingId::augmented(j));
    faults.insert(faults.end(), m.begin(), m.begin() + 3);
  }
  const auto s = select_fault_light_subcube(5, FaultSet::make(5, faults));
  EXPECT_LE(s.verdict.internal_faults, 2 * 5 - 4);
  EXPECT_TRUE(s.verdict.usable());
}

TEST(Selection, Preconditions) {
  EXPECT_ERROR_KIND(select_fault_light_subcube(4, FaultSet::make(4, {})), ErrorKind::RejectedInput);
  SplitMix64 rng(3);
  EXPECT_ERROR_KIND(select_fault_light_subcube(5, random_faults(5, 13, rng)), ErrorKind::RejectedInput);
}

TEST(Selection, SoundAcrossSeededPatterns) {
  for (int n : {5, 6}) {
    for (auto pattern : {FaultPattern::Random, FaultPattern::Vertex, FaultPattern::Matching, FaultPattern::Path2}) {
      for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const FaultSet f = generate_faults(n, 4 * n - 8, pattern, seed);
        ASSERT_TRUE(conditional_model_ok(n, f));
        const auto degrees = fault_free_degrees(n, f);
        if (*std::min_element(degrees.begin(), degrees.end()) < 3) continue;
        const auto s = select_fault_light_subcube(n, f);
        EXPECT_LE(s.verdict.internal_faults, 3 * n - 8);
        EXPECT_TRUE(s.verdict.usable());
      }
    }
  }
}

TEST(Spectrum, FaultFreeFiveCube) {
  const FaultSet none = FaultSet::make(5, {});
  const auto report = even_cycle_spectrum(5, none);
  EXPECT_TRUE(report.complete());
  EXPECT_EQ(report.cycles.size(), 15U);
  EXPECT_EQ(report.cycles.rbegin()->first, 32);
  EXPECT_EQ(check_spectrum(5, none, report), "");
}

TEST(Spectrum, CheckerCatchesAFaultyCycle) {
  const FaultSet none = FaultSet::make(5, {});
  const auto report = even_cycle_spectrum(5, none);
  const auto& four = report.cycles.at(4).vertices;
  const std::vector<Edge> hit{Edge::make(four[0], four[1])};
  EXPECT_NE(check_spectrum(5, FaultSet::make(5, hit), report), "");
}

TEST(Spectrum, Preconditions) {
  SplitMix64 rng(5);
  EXPECT_ERROR_KIND(even_cycle_spectrum(4, FaultSet::make(4, {})), ErrorKind::RejectedInput);
  EXPECT_ERROR_KIND(even_cycle_spectrum(11, FaultSet::make(11, {})), ErrorKind::OutOfDeskScale);
  EXPECT_ERROR_KIND(even_cycle_spectrum(5, random_faults(5, 13, rng)), ErrorKind::RejectedInput);
}

TEST(Spectrum, DegreeTwoVertexIsRoutedThrough) {
  const CubeGraph g = build_augmented_cube(5);
  std::vector<Edge> faults;
  for (Vertex w : g.neighbors(0)) faults.push_back(Edge::make(0, w));
  faults.resize(7);
  const FaultSet f = FaultSet::make(5, faults);
  const auto report = even_cycle_spectrum(5, f);
  EXPECT_EQ(report.route, SpectrumRoute::DegreeTwoVertex);
  EXPECT_TRUE(report.complete());
  EXPECT_EQ(check_spectrum(5, f, report), "");
}

TEST(Trial, ReplaysFromItsSeed) {
  const auto a = run_fault_trial(5, 12, FaultPattern::Vertex, 99);
  const auto b = run_fault_trial(5, 12, FaultPattern::Vertex, 99);
  EXPECT_EQ(a.faults.faulty, b.faults.faulty);
  EXPECT_EQ(a.spectrum.cycles, b.spectrum.cycles);
  EXPECT_TRUE(a.conditional_ok);
  EXPECT_TRUE(a.spectrum.complete());
}

TEST(Generators, PatternsAreConditionalAndSized) {
  for (auto pattern : {FaultPattern::Random, FaultPattern::Vertex, FaultPattern::Matching, FaultPattern::Path2,
                       FaultPattern::Figure4}) {
    const FaultSet f = generate_faults(6, 16, pattern, 1);
    EXPECT_EQ(f.size(), 16U) << to_string(pattern);
    EXPECT_TRUE(conditional_model_ok(6, f));
    EXPECT_EQ(parse_fault_pattern(to_string(pattern)), pattern);
  }
  EXPECT_ERROR_KIND(parse_fault_pattern("nope"), ErrorKind::InvalidInput);
}

TEST(Path, ExactLengthsInAQ3) {
  const auto p = fault_free_path_of_length(3, {}, 0, 3, 4);
  ASSERT_EQ(p.size(), 5U);
  EXPECT_EQ(p.front(), 0U);
  EXPECT_EQ(p.back(), 3U);
  const CubeGraph g = build_augmented_cube(3);
  for (std::size_t i = 0; i + 1 < p.size(); ++i) EXPECT_TRUE(g.adjacent(p[i], p[i + 1]));
  EXPECT_ERROR_KIND(fault_free_path_of_length(3, {}, 0, 3, 2), ErrorKind::RejectedInput);
}

TEST(Path, HamiltonianPathAroundRemovedVertices) {
  Obstruction a;
  a.vertices = {5, 6};
  const auto p = fault_free_path_of_length(4, a, 0, 1, 16 - 2 - 1);
  std::set<Vertex> seen(p.begin(), p.end());
  EXPECT_EQ(seen.size(), 14U);
  EXPECT_FALSE(seen.contains(5));
}

TEST(Path, AgreesWithOracleSpectrum) {
  const CubeGraph g = build_augmented_cube(4);
  Obstruction a;
  a.vertices = {9};
  a.edges = {Edge::make(0, 2), Edge::make(4, 5)};
  const auto oracle = path_spectrum_search(g, a.vertices, a.edges, 0, 7);
  ASSERT_TRUE(oracle.exhausted);
  const int d = g.distances_from(0)[7];
  for (int len = std::max(d + 2, 4); len <= 16 - 1 - 1; ++len) {
    EXPECT_TRUE(oracle.lengths.contains(len)) << len;
    EXPECT_EQ(fault_free_path_of_length(4, a, 0, 7, len).size(), static_cast<std::size_t>(len + 1));
  }
}
