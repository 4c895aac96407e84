#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "semimod/semigroup.hpp"

namespace semimod {
namespace {

TEST(SemigroupPair, AcceptsValidPairs) {
  const SemigroupPair s(5, 7);
  EXPECT_EQ(s.alpha(), 5);
  EXPECT_EQ(s.beta(), 7);
  EXPECT_EQ(s.product(), 35);
  EXPECT_NO_THROW(SemigroupPair(2, 3));
}

TEST(SemigroupPair, RejectsInvalidPairs) {
  EXPECT_THROW(SemigroupPair(4, 6), InvalidArgument);
  EXPECT_THROW(SemigroupPair(7, 5), InvalidArgument);
  EXPECT_THROW(SemigroupPair(5, 5), InvalidArgument);
  EXPECT_THROW(SemigroupPair(1, 5), InvalidArgument);
  EXPECT_THROW(SemigroupPair(0, 5), InvalidArgument);
  EXPECT_THROW(SemigroupPair(3, Value{1} << 62), InvalidArgument);
}

TEST(SemigroupPair, Contains) {
  const SemigroupPair s(5, 7);
  EXPECT_TRUE(s.contains(24));
  EXPECT_FALSE(s.contains(23));
  EXPECT_FALSE(s.contains(-1));
  EXPECT_TRUE(s.contains(0));
}

TEST(SemigroupPair, Conductor) {
  EXPECT_EQ(conductor(SemigroupPair(5, 7)), 24);
  EXPECT_EQ(conductor(SemigroupPair(2, 3)), 2);
  EXPECT_EQ(conductor(SemigroupPair(3, 4)), 6);
  const auto g = oracle::semigroup_gaps(3, 4);
  EXPECT_EQ(g.back() + 1, 6);
}

TEST(SemigroupPair, Gaps) {
  EXPECT_EQ(gaps(SemigroupPair(2, 3)), (std::vector<Value>{1}));
  EXPECT_EQ(gaps(SemigroupPair(3, 4)), (std::vector<Value>{1, 2, 5}));
  EXPECT_EQ(oracle::semigroup_gaps(3, 4), (std::vector<Value>{1, 2, 5}));

  const auto g57 = gaps(SemigroupPair(5, 7));
  EXPECT_EQ(g57.size(), 12u);
  EXPECT_NE(std::find(g57.begin(), g57.end(), 23), g57.end());
  EXPECT_NE(std::find(g57.begin(), g57.end(), 18), g57.end());
}

TEST(LatticeCoding, GapToPoint) {
  const SemigroupPair s(5, 7);
  EXPECT_EQ(gap_to_point(s, 9), (LatticePoint{1, 3}));
  EXPECT_EQ(gap_to_point(s, 18), (LatticePoint{2, 1}));
  EXPECT_EQ(gap_to_point(SemigroupPair(3, 4), 5), (LatticePoint{1, 1}));
}

TEST(LatticeCoding, GapToPointRejectsNonGaps) {
  const SemigroupPair s(5, 7);
  EXPECT_THROW(gap_to_point(s, 0), InvalidArgument);
  EXPECT_THROW(gap_to_point(s, 14), InvalidArgument);
  EXPECT_THROW(gap_to_point(s, 24), InvalidArgument);
  EXPECT_THROW(gap_to_point(s, -3), InvalidArgument);
}

TEST(LatticeCoding, PointToValue) {
  const SemigroupPair s(5, 7);
  EXPECT_EQ(point_to_value(s, {0, 3}), 14);
  EXPECT_EQ(point_to_value(s, {0, 0}), 35);
  EXPECT_EQ(point_to_value(s, {4, 0}), 15);
  EXPECT_EQ(point_to_value(s, {7, 0}), 0);
  EXPECT_THROW(point_to_value(s, {8, 0}), InvalidArgument);
  EXPECT_THROW(point_to_value(s, {0, 6}), InvalidArgument);
  EXPECT_THROW(point_to_value(s, {-1, 0}), InvalidArgument);
}

TEST(LatticeCoding, PointOfAxisValues) {
  const SemigroupPair s(5, 7);
  EXPECT_EQ(point_of(s, 0), (LatticePoint{0, 5}));
  EXPECT_EQ(point_of(s, 14), (LatticePoint{0, 3}));
  EXPECT_EQ(point_of(s, 15), (LatticePoint{4, 0}));
  EXPECT_EQ(point_of(s, 35), (LatticePoint{0, 0}));
  // 35 - 24 = 11 is not in the semigroup, so 24 has no coding.
  EXPECT_FALSE(point_of(s, 24).has_value());
  EXPECT_FALSE(point_of(s, 36).has_value());
}

TEST(Precede, Examples) {
  const SemigroupPair s(5, 7);
  EXPECT_EQ(precede(s, 9, 11), Order::StrictlyLess);
  EXPECT_EQ(precede(s, 11, 9), Order::StrictlyGreater);
  EXPECT_EQ(precede(s, 9, 9), Order::Equal);
  EXPECT_EQ(precede(s, 23, 11), Order::Incomparable);
  // (2,2) vs (2,1): same a, b decreases.
  EXPECT_EQ(precede(s, 11, 18), Order::WeaklyLess);
  EXPECT_EQ(precede(s, 18, 11), Order::WeaklyGreater);
  EXPECT_THROW(precede(s, 24, 9), InvalidArgument);
}

class AllSmallPairs : public ::testing::TestWithParam<std::pair<Value, Value>> {};

TEST_P(AllSmallPairs, MembershipMatchesExhaustiveSearch) {
  const auto [a, b] = GetParam();
  const SemigroupPair s(a, b);
  for (Value n = -3; n <= 2 * a * b; ++n) {
    ASSERT_EQ(s.contains(n), oracle::in_semigroup(a, b, n)) << "n = " << n;
  }
}

TEST_P(AllSmallPairs, GapCountAndConductor) {
  const auto [a, b] = GetParam();
  const SemigroupPair s(a, b);
  const auto g = gaps(s);
  EXPECT_EQ(static_cast<Value>(g.size()), (a - 1) * (b - 1) / 2);
  EXPECT_EQ(g, oracle::semigroup_gaps(a, b));
  EXPECT_EQ(g.back() + 1, conductor(s));
  for (Value n = conductor(s); n < conductor(s) + 2 * b; ++n) EXPECT_TRUE(s.contains(n));
}

TEST_P(AllSmallPairs, GapCodingRoundTripsAndIsUnique) {
  const auto [a, b] = GetParam();
  const SemigroupPair s(a, b);
  for (Value e : gaps(s)) {
    const LatticePoint p = gap_to_point(s, e);
    EXPECT_TRUE(is_strict_gap_point(s, p));
    EXPECT_EQ(point_to_value(s, p), e);
    int matches = 0;
    for (Value x = 1; x < b; ++x) {
      for (Value y = 1; y < a; ++y) matches += (a * b - x * a - y * b == e) ? 1 : 0;
    }
    EXPECT_EQ(matches, 1) << "gap " << e;
  }
}

TEST_P(AllSmallPairs, PrecedeIsAPartialOrder) {
  const auto [a, b] = GetParam();
  const SemigroupPair s(a, b);
  const auto g = gaps(s);
  auto le = [&](Value x, Value y) {
    const Order o = precede(s, x, y);
    return o == Order::Equal || o == Order::WeaklyLess || o == Order::StrictlyLess;
  };
  for (Value x : g) {
    EXPECT_EQ(precede(s, x, x), Order::Equal);
    for (Value y : g) {
      if (x != y && le(x, y)) {
        EXPECT_FALSE(le(y, x));
      }
      if (precede(s, x, y) == Order::StrictlyLess) {
        EXPECT_TRUE(le(x, y));
      }
      for (Value z : g) {
        if (le(x, y) && le(y, z)) {
          EXPECT_TRUE(le(x, z));
        }
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(CoprimeUpTo16, AllSmallPairs,
                         ::testing::ValuesIn(oracle::coprime_pairs(16)));

TEST(SemigroupPair, LargePairsAgreeWithOracleOnRandomSamples) {
  std::mt19937_64 rng(20261019);
  for (int trial = 0; trial < 200; ++trial) {
    const Value a = std::uniform_int_distribution<Value>(2, 60)(rng);
    const Value b = std::uniform_int_distribution<Value>(a + 1, 200)(rng);
    if (std::gcd(a, b) != 1) continue;
    const SemigroupPair s(a, b);
    for (int k = 0; k < 50; ++k) {
      const Value n = std::uniform_int_distribution<Value>(0, a * b)(rng);
      ASSERT_EQ(s.contains(n), oracle::in_semigroup(a, b, n)) << a << ',' << b << ": " << n;
    }
  }
}

}  // namespace
}  // namespace semimod
