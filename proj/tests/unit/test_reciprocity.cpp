#include <gtest/gtest.h>

#include "augcube/reciprocity.hpp"
#include "expect_error.hpp"

using namespace augcube;

namespace {

void expect_pair_laws(const SubcubePair& p, int n, MatchingId expected) {
  const auto a = p.first.edges();
  const auto b = p.second.edges();
  EXPECT_EQ(edge_intersection(a, b), canonical_matching(n, expected));
  EXPECT_EQ(edge_union(a, b), build_augmented_cube(n).edges());
  EXPECT_EQ(shared_matching(p.first.selection, p.second.selection), expected);
  for (const auto* sub : {&p.first, &p.second}) {
    EXPECT_TRUE(validate_witness(sub->graph, build_hypercube(n), sub->witness));
  }
}

}  // namespace

TEST(Selection, CanonicalSubcubes) {
  for (int n = 2; n <= 6; ++n) {
    EXPECT_EQ(subcube_from_selection(canonical_hypercube_selection(n)).edges(), build_hypercube(n).edges());
    const auto q2 = subcube_from_selection(canonical_augmented_selection(n));
    EXPECT_EQ(q2.selection.chosen()[0], MatchingId::hypercube(1));
  }
  const SubcubeSelection tiny(2, {MatchingId::hypercube(2), MatchingId::augmented(2)});
  EXPECT_EQ(subcube_from_selection(tiny).edges().size(), 4U);
}

TEST(Selection, RejectsDependentMatchings) {
  const SubcubeSelection bad(3, {MatchingId::hypercube(1), MatchingId::hypercube(2), MatchingId::augmented(2)});
  EXPECT_FALSE(bad.full_rank());
  EXPECT_ERROR_KIND(subcube_from_selection(bad), ErrorKind::NotASubcube);
}

TEST(Selection, EveryCayleySelectionHasAValidWitness) {
  for (int n = 2; n <= 5; ++n) {
    for (const auto& gens : enumerate_cayley_generator_subsets(n)) {
      const auto sub = subcube_from_selection(SubcubeSelection::from_generators(gens));
      EXPECT_TRUE(validate_witness(sub.graph, build_hypercube(n), sub.witness));
    }
  }
}

TEST(ReciprocalPair, EmptyExchangeIsTheCanonicalPair) {
  const auto p = reciprocal_pair(4, {});
  EXPECT_EQ(p.first.selection, canonical_hypercube_selection(4));
  EXPECT_EQ(p.second.selection, canonical_augmented_selection(4));
  expect_pair_laws(p, 4, MatchingId::hypercube(1));
}

TEST(ReciprocalPair, FullExchangeSwapsRoles) {
  const auto p = reciprocal_pair(4, {2, 3, 4});
  const auto q = reciprocal_pair(4, {});
  EXPECT_EQ(p.first.edges(), q.second.edges());
  EXPECT_EQ(p.second.edges(), q.first.edges());
}

TEST(ReciprocalPair, LawsForEveryExchangeSet) {
  for (int n = 2; n <= 5; ++n) {
    for (unsigned mask = 0; mask < (1U << (n - 1)); ++mask) {
      std::set<int> j;
      for (int k = 0; k < n - 1; ++k) {
        if ((mask >> k) & 1U) j.insert(k + 2);
      }
      expect_pair_laws(reciprocal_pair(n, j), n, MatchingId::hypercube(1));
    }
  }
}

TEST(ReciprocalPair, FixedIntersectionLaws) {
  for (int n = 2; n <= 5; ++n) {
    for (int j = 2; j <= n; ++j) {
      expect_pair_laws(reciprocal_pair_fixed_intersection(n, j, EdgeKind::Hypercube), n, MatchingId::hypercube(j));
      expect_pair_laws(reciprocal_pair_fixed_intersection(n, j, EdgeKind::Augmented), n, MatchingId::augmented(j));
    }
  }
  EXPECT_ERROR_KIND(reciprocal_pair_fixed_intersection(3, 4, EdgeKind::Hypercube), ErrorKind::InvalidDimension);
  EXPECT_ERROR_KIND(reciprocal_pair_fixed_intersection(3, 1, EdgeKind::Augmented), ErrorKind::InvalidDimension);
}

TEST(Split, CanonicalHypercubeAlongFirstDimension) {
  const auto sub = subcube_from_selection(canonical_hypercube_selection(4));
  const auto split = split_along_matching(sub, MatchingId::hypercube(1));
  EXPECT_EQ(split.offset, 1U);
  for (Vertex v : split.component0) EXPECT_EQ(v & 1U, 0U);
  for (Vertex v : split.component1) EXPECT_EQ(v & 1U, 1U);
}

TEST(Split, CanonicalAugmentedAlongFirstDimension) {
  const auto sub = subcube_from_selection(canonical_augmented_selection(4));
  const auto split = split_along_matching(sub, MatchingId::hypercube(1));
  for (Vertex v : split.component0) EXPECT_EQ(v & 1U, (v >> 1) & 1U);
  for (Vertex v : split.component1) EXPECT_NE(v & 1U, (v >> 1) & 1U);
}

TEST(Split, ComponentsAreCosetsAndCrossIsABijection) {
  for (int n = 2; n <= 5; ++n) {
    for (const auto& gens : enumerate_cayley_generator_subsets(n)) {
      const auto sub = subcube_from_selection(SubcubeSelection::from_generators(gens));
      for (const auto& id : sub.selection.chosen()) {
        const auto split = split_along_matching(sub, id);
        ASSERT_EQ(split.component0.size(), std::size_t{1} << (n - 1));
        EXPECT_EQ(split.component0.front(), 0U);
        std::set<Vertex> zero(split.component0.begin(), split.component0.end());
        std::set<Vertex> one(split.component1.begin(), split.component1.end());
        for (Vertex v : split.component0) {
          EXPECT_TRUE(one.contains(split.cross(v)));
          for (Vertex g : split.half_generators) EXPECT_TRUE(zero.contains(v ^ g));
        }
      }
    }
  }
}

TEST(Split, SmallQ2) {
  const auto sub = subcube_from_selection(canonical_hypercube_selection(2));
  const auto split = split_along_matching(sub, MatchingId::hypercube(2));
  EXPECT_EQ(split.component0, (std::vector<Vertex>{0, 1}));
  EXPECT_EQ(split.component1, (std::vector<Vertex>{2, 3}));
  EXPECT_EQ(split.cross(1), 3U);
  EXPECT_ERROR_KIND(split_along_matching(sub, MatchingId::augmented(2)), ErrorKind::InvalidSplit);
}

TEST(ReciprocalPair, ThreeDimensionalExchangeOfTheTopDimension) {
  const auto p = reciprocal_pair(3, {3});
  EXPECT_TRUE(p.first.selection.contains(MatchingId::hypercube(2)));
  EXPECT_TRUE(p.first.selection.contains(MatchingId::augmented(3)));
  EXPECT_TRUE(p.second.selection.contains(MatchingId::augmented(2)));
  EXPECT_TRUE(p.second.selection.contains(MatchingId::hypercube(3)));
  EXPECT_EQ(edge_union(p.first.edges(), p.second.edges()).size(), 20U);
}
