#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "dissoc/canonical.hpp"
#include "dissoc/dissociation.hpp"
#include "dissoc/errors.hpp"
#include "dissoc/extremal.hpp"
#include "dissoc/structure.hpp"

using namespace dissoc;

TEST(Formula, Values) {
  EXPECT_EQ(max_mds_formula(3), 3);
  EXPECT_EQ(max_mds_formula(6), 6);
  EXPECT_EQ(max_mds_formula(7), 4);
  EXPECT_EQ(max_mds_formula(8), 3);
  EXPECT_EQ(max_mds_formula(9), 13);
  EXPECT_EQ(max_mds_formula(10), 10);
  EXPECT_EQ(max_mds_formula(11), 9);
  EXPECT_EQ(max_mds_formula(1), 1);
  EXPECT_EQ(max_mds_formula(2), 1);
  EXPECT_THROW(max_mds_formula(0), ArgumentError);
  EXPECT_EQ(max_mds_formula(300), boost::multiprecision::pow(BigCount(3), 99) + 101);
}

TEST(StarConstruction, Orders) {
  EXPECT_EQ(star_construction({{Leg::kP3, Leg::kP4}}).order(), 6u);
  EXPECT_EQ(star_construction({{Leg::kP3, Leg::kP2, Leg::kP4}}).order(), 7u);
  const Forest k14 = star_construction({{Leg::kP2, Leg::kP2, Leg::kP2, Leg::kP2}});
  EXPECT_EQ(canonical_code(k14), canonical_code(Forest::star(4)));
  const Forest k13 = star_construction({{Leg::kK13}});
  EXPECT_EQ(canonical_code(k13), canonical_code(Forest::star(3)));
  EXPECT_THROW(star_construction(LegSpec{}), ArgumentError);
}

TEST(Lt8, Facts) {
  const Forest t = lt8();
  auto deg = t.degree_sequence();
  std::sort(deg.begin(), deg.end());
  EXPECT_EQ(deg, (std::vector<std::size_t>{1, 1, 1, 1, 2, 2, 3, 3}));
  EXPECT_EQ(alpha3_count_dp(t).count, 3);
  EXPECT_EQ(t.label(0), "u1");
  EXPECT_EQ(t.label(7), "v4");
}

TEST(Family, Sizes) {
  EXPECT_EQ(generate_extremal_family(6).size(), 1u);
  EXPECT_EQ(generate_extremal_family(7).size(), 2u);
  EXPECT_EQ(generate_extremal_family(8).size(), 7u);
  EXPECT_EQ(generate_extremal_family(5).size(), 3u);
  EXPECT_EQ(generate_extremal_family(4).size(), 1u);
  EXPECT_THROW(generate_extremal_family(2), ArgumentError);
}

TEST(Family, MembersAttainFormulaAndAreDistinct) {
  for (std::size_t n = 3; n <= 40; ++n) {
    const auto fam = generate_extremal_family(n);
    ASSERT_FALSE(fam.empty());
    std::set<CanonicalCode> codes;
    for (const Forest& t : fam) {
      ASSERT_EQ(t.order(), n);
      ASSERT_TRUE(t.is_tree());
      ASSERT_EQ(alpha3_count_dp(t).count, max_mds_formula(n)) << "n=" << n;
      codes.insert(canonical_code(t));
    }
    EXPECT_EQ(codes.size(), fam.size());
  }
}

TEST(Family, Lt8AmongEightVertexExtremals) {
  const auto report = exhaustive_extremal_check(8);
  EXPECT_TRUE(std::binary_search(report.extremal_codes.begin(), report.extremal_codes.end(), canonical_code(lt8())));
}

TEST(Family, MultipleOfThreeHasOnlyCriticalTriples) {
  for (std::size_t m = 2; m <= 12; ++m) {
    const auto fam = generate_extremal_family(3 * m);
    ASSERT_EQ(fam.size(), 1u);
    const auto cs = critical_structure(fam[0]);
    EXPECT_EQ(cs.critical_triples.size(), m);
    EXPECT_TRUE(cs.insulated_edges.empty());
    EXPECT_TRUE(classify_vertices(fam[0]).static_included.empty());
  }
}

TEST(Sweep, SmallOrders) {
  const auto six = exhaustive_extremal_check(6);
  EXPECT_EQ(six.observed_max, 6);
  EXPECT_EQ(six.extremal_codes.size(), 1u);
  EXPECT_TRUE(six.match);
  const auto seven = exhaustive_extremal_check(7);
  EXPECT_EQ(seven.observed_max, 4);
  EXPECT_EQ(seven.extremal_codes.size(), 2u);
  EXPECT_TRUE(seven.match);
  const auto five = exhaustive_extremal_check(5);
  EXPECT_EQ(five.observed_max, 1);
  EXPECT_EQ(five.extremal_codes.size(), 3u);
  EXPECT_TRUE(five.match);
  const auto four = exhaustive_extremal_check(4);
  EXPECT_FALSE(four.characterized);
  EXPECT_TRUE(four.match);
  EXPECT_FALSE(four.note.empty());
}

TEST(Sweep, ParallelMatchesSerial) {
  const auto a = exhaustive_extremal_check(12, SweepOptions{18, 1});
  const auto b = exhaustive_extremal_check(12, SweepOptions{18, 3});
  EXPECT_EQ(a.observed_max, b.observed_max);
  EXPECT_EQ(a.extremal_codes, b.extremal_codes);
  EXPECT_EQ(a.trees, b.trees);
}

TEST(Sweep, Guard) { EXPECT_THROW(exhaustive_extremal_check(19), GuardError); }
