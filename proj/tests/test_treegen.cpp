#include <gtest/gtest.h>

#include <set>

#include "dissoc/canonical.hpp"
#include "dissoc/errors.hpp"
#include "dissoc/treegen.hpp"

using namespace dissoc;

namespace {
// Unlabeled trees on n vertices, n = 1..20.
const std::vector<std::uint64_t> kFreeTreeCounts{1,    1,    1,     2,     3,     6,      11,     23,     47,     106,
                                                 235,  551,  1301,  3159,  7741,  19320,  48629,  123867, 317955,
                                                 823065};
}  // namespace

TEST(FreeTrees, SmallOrders) {
  const auto four = free_trees(4);
  ASSERT_EQ(four.size(), 2u);
  std::set<CanonicalCode> codes{canonical_code(four[0]), canonical_code(four[1])};
  EXPECT_TRUE(codes.count(canonical_code(Forest::path(4))));
  EXPECT_TRUE(codes.count(canonical_code(Forest::star(3))));
  EXPECT_THROW(free_trees(0), ArgumentError);
}

TEST(FreeTrees, CountsThroughFifteen) {
  for (std::size_t n = 1; n <= 15; ++n) EXPECT_EQ(count_free_trees(n), kFreeTreeCounts[n - 1]) << "n=" << n;
}

TEST(FreeTrees, CountsSixteenThroughEighteen) {
  for (std::size_t n = 16; n <= 18; ++n) EXPECT_EQ(count_free_trees(n), kFreeTreeCounts[n - 1]) << "n=" << n;
}

TEST(FreeTrees, DistinctCodesAndValidTrees) {
  for (std::size_t n = 1; n <= 13; ++n) {
    std::set<CanonicalCode> codes;
    for (const Forest& t : free_trees(n)) {
      ASSERT_TRUE(t.is_tree());
      ASSERT_EQ(t.order(), n);
      codes.insert(canonical_code(t));
    }
    EXPECT_EQ(codes.size(), kFreeTreeCounts[n - 1]);
  }
}

TEST(FreeTrees, ClassesMatchPruefer) {
  for (std::size_t n = 1; n <= 8; ++n) {
    std::set<CanonicalCode> free, labeled;
    for (const Forest& t : free_trees(n)) free.insert(canonical_code(t));
    for_each_labeled_tree(n, [&](const Forest& t) { labeled.insert(canonical_code(t)); });
    EXPECT_EQ(free, labeled) << "n=" << n;
  }
}

TEST(FreeTrees, LevelSequencesDecreaseAndStartAtOne) {
  for (std::size_t n = 2; n <= 11; ++n) {
    FreeTreeGenerator g(n);
    std::vector<std::uint32_t> prev;
    while (g.next()) {
      const auto& seq = g.current().seq;
      ASSERT_EQ(seq.size(), n);
      EXPECT_EQ(seq[0], 1u);
      for (std::size_t i = 1; i < n; ++i) {
        EXPECT_GE(seq[i], 2u);
        EXPECT_LE(seq[i], seq[i - 1] + 1);
      }
      if (!prev.empty()) EXPECT_LT(seq, prev);
      prev = seq;
    }
  }
}

TEST(FreeTrees, ChunkedRangesCoverStream) {
  const std::size_t n = 11;
  const auto whole = free_trees(n);
  std::vector<std::string> seen(whole.size());
  for_each_free_tree(n, 40, 100, [&](std::uint64_t i, const Forest& t) { seen[i] = serialize_edge_list(t); });
  for (std::size_t i = 40; i < 100; ++i) EXPECT_EQ(seen[i], serialize_edge_list(whole[i]));

  for (std::size_t jobs : {1u, 3u, 8u}) {
    std::vector<std::string> par(whole.size());
    parallel_for_each_free_tree(n, jobs,
                                [&](std::size_t, std::uint64_t i, const Forest& t) { par[i] = serialize_edge_list(t); });
    for (std::size_t i = 0; i < whole.size(); ++i) EXPECT_EQ(par[i], serialize_edge_list(whole[i]));
  }
}

TEST(FromLevels, BuildsTreeAndValidates) {
  const Forest star = forest_from_levels(LevelSequence{{1, 2, 2, 2}});
  EXPECT_EQ(canonical_code(star), canonical_code(Forest::star(3)));
  EXPECT_THROW(forest_from_levels(LevelSequence{{2, 3}}), ArgumentError);
  EXPECT_THROW(forest_from_levels(LevelSequence{{1, 3}}), ArgumentError);
}

TEST(Pruefer, LabeledCountsAndClasses) {
  const std::vector<std::pair<std::size_t, std::size_t>> cases{{3, 1}, {4, 2}, {6, 6}};
  const std::vector<std::size_t> labeled{3, 16, 1296};
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const auto trees = labeled_trees_pruefer(cases[i].first);
    EXPECT_EQ(trees.size(), labeled[i]);
    std::set<CanonicalCode> codes;
    for (const Forest& t : trees) codes.insert(canonical_code(t));
    EXPECT_EQ(codes.size(), cases[i].second);
  }
  EXPECT_THROW(labeled_trees_pruefer(10), GuardError);
}

TEST(Pruefer, DecodeKnownSequence) {
  const std::vector<Vertex> seq{3, 3, 3, 4};
  const Forest t = pruefer_decode(seq);
  EXPECT_EQ(t.edges(), (std::vector<Edge>{{0, 3}, {1, 3}, {2, 3}, {3, 4}, {4, 5}}));
}
