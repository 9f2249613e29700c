#include <gtest/gtest.h>

#include <random>

#include "noninc/arcs.hpp"
#include "noninc/bounds.hpp"
#include "oracles.hpp"

using namespace noninc;

namespace {

// Integer search, no square roots.
std::uint64_t bound_by_search(std::uint64_t q) {
  std::uint64_t s = 0;
  while ((s + 1) * (s + 1) + 2 * q * (s + 1) <= q * q * q + q * q + q) ++s;
  return s;
}

}  // namespace

TEST(LineBound, Values) {
  EXPECT_EQ(external_line_bound(16, 52), Rational(52));
  EXPECT_EQ(external_line_bound(4, 0), Rational(21));
  EXPECT_EQ(external_line_bound(8, 10), Rational(28));
  EXPECT_EQ(external_line_bound(8, 10), Rational(504, 18));
}

TEST(LineBound, IsReduced) {
  const Rational r = external_line_bound(16, 51);
  EXPECT_EQ(boost::multiprecision::gcd(numerator(r), denominator(r)), 1);
  EXPECT_GT(denominator(r), 0);
  EXPECT_EQ(r, Rational(3552, 67));
}

TEST(StinsonBound, Values) {
  EXPECT_EQ(stinson_bound(16), 52u);
  EXPECT_EQ(stinson_bound(4), 6u);
  EXPECT_EQ(stinson_bound(8), 17u);
  EXPECT_EQ(stinson_bound(2), 2u);
  EXPECT_EQ(stinson_bound(3), 3u);
  // 17^2 + 2*8*17 = 561 <= 584 < 612 = 18^2 + 2*8*18
  EXPECT_LE(17u * 17 + 2 * 8 * 17, 584u);
  EXPECT_GT(18u * 18 + 2 * 8 * 18, 584u);
}

TEST(StinsonBound, MatchesIntegerSearch) {
  for (std::uint64_t q = 2; q <= 2000; ++q) ASSERT_EQ(stinson_bound(q), bound_by_search(q)) << q;
}

TEST(StinsonBound, Monotone) {
  for (std::uint64_t q = 2; q < 64; ++q) EXPECT_LE(stinson_bound(q), stinson_bound(q + 1));
}

TEST(StinsonBound, CrossingBracket) {
  for (std::uint64_t q = 2; q <= 300; ++q) {
    const std::uint64_t s = stinson_bound(q);
    if (is_perfect_square(q)) {
      EXPECT_EQ(external_line_bound(q, s), Rational(s)) << q;
    } else {
      EXPECT_GT(external_line_bound(q, s), Rational(s)) << q;
    }
    EXPECT_LT(external_line_bound(q, s + 1), Rational(s + 1)) << q;
  }
}

TEST(CrossingPoint, Values) {
  EXPECT_EQ(crossing_point(16), 52u);
  EXPECT_EQ(crossing_point(4), 6u);
  EXPECT_EQ(crossing_point(64), 456u);
  EXPECT_EQ(crossing_point(64), 1u + 65u * 7u);
  const std::uint64_t q = 64, s = 456;
  EXPECT_EQ(s * s + 2 * q * s, q * q * q + q * q + q);
}

TEST(CrossingPoint, AgreesWithIntegerBound) {
  for (std::uint64_t r = 2; r <= 100; ++r) {
    const std::uint64_t q = r * r;
    EXPECT_EQ(crossing_point(q), stinson_bound(q));
    EXPECT_EQ(external_line_bound(q, crossing_point(q)), Rational(crossing_point(q)));
  }
}

TEST(CrossingPoint, RejectsNonSquares) {
  for (std::uint64_t q : {2u, 3u, 8u, 32u}) {
    try {
      crossing_point(q);
      FAIL() << q;
    } catch (const error& e) {
      EXPECT_EQ(e.code(), errc::not_perfect_square);
    }
  }
}

TEST(MullinVanstone, Values) {
  EXPECT_EQ(mullin_vanstone_bound(5, 1, 6), Rational(15));
  EXPECT_EQ(mullin_vanstone_bound(17, 1, 52), Rational(221));
  for (std::uint64_t r = 1; r < 20; ++r)
    for (std::uint64_t lambda = 1; lambda < 4; ++lambda) EXPECT_EQ(mullin_vanstone_bound(r, lambda, 1), Rational(r));
}

TEST(MullinVanstone, ReducesToPlaneForm) {
  for (std::uint64_t q = 2; q < 20; ++q)
    for (std::uint64_t s = 1; s < 60; ++s)
      EXPECT_EQ(mullin_vanstone_bound(q + 1, 1, s), Rational((q + 1) * (q + 1) * s, q + s));
}

TEST(BlockProfile, FanoTwoPoints) {
  const Plane pl = build_pg2(2);
  const BlockProfile bp = block_profile(pl, {0, 1});
  EXPECT_EQ(bp.b, 5u);
  auto sizes = bp.sizes;
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  EXPECT_EQ(sizes, (std::vector<std::uint32_t>{2, 1, 1, 1, 1}));
  EXPECT_EQ(bp.sum_sizes(), 6);
  EXPECT_EQ(bp.sum_pairs(), 1);
  EXPECT_TRUE(bp.identities_hold());
}

TEST(BlockProfile, Pg4HyperovalIsEqualityCase) {
  const Plane pl = build_pg2(4);
  const MaximalArc arc = denniston_arc(pl, 2, 1);
  const BlockProfile bp = block_profile(pl, arc.points);
  EXPECT_EQ(bp.b, 15u);
  for (auto k : bp.sizes) EXPECT_EQ(k, 2u);
  EXPECT_EQ(Rational(bp.b), bp.min_blocks());
  EXPECT_EQ(bp.min_blocks(), Rational(25 * 6, 10));
  EXPECT_TRUE(bp.all_sizes_equal_mean());
}

TEST(BlockProfile, SinglePoint) {
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    const Plane pl = build_pg2(q);
    for (std::uint32_t p = 0; p < pl.num_points(); p += 3) {
      const BlockProfile bp = block_profile(pl, {p});
      EXPECT_EQ(bp.b, q + 1);
      for (auto k : bp.sizes) EXPECT_EQ(k, 1u);
    }
  }
}

TEST(BlockProfile, EmptySetRejected) {
  const Plane pl = build_pg2(2);
  EXPECT_THROW(block_profile(pl, {}), error);
}

TEST(BlockProfile, IdentitiesAndBoundsOnRandomSets) {
  std::mt19937_64 rng(2024);
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    const Plane pl = build_pg2(q);
    const auto n = static_cast<std::uint32_t>(pl.num_points());
    for (int t = 0; t < 60; ++t) {
      const auto s = static_cast<std::uint32_t>(1 + rng() % n);
      const PointSet y(oracle::random_subset(rng, n, s));
      const BlockProfile bp = block_profile(pl, y);
      EXPECT_TRUE(bp.identities_hold());
      EXPECT_GE(Rational(bp.b), mullin_vanstone_bound(q + 1, 1, s));
      EXPECT_EQ(bp.min_blocks(), mullin_vanstone_bound(q + 1, 1, s));
      EXPECT_EQ(Rational(pl.num_lines() - bp.b), Rational(pl.external_lines(y).size()));
      EXPECT_LE(Rational(pl.external_lines(y).size()), external_line_bound(q, s));
    }
  }
}
