#include <gtest/gtest.h>

#include <random>

#include "fanocert/integer.hpp"

using namespace fanocert;

TEST(FloorCeil, MatchesMathematicalDefinition) {
  for (Int n = -30; n <= 30; ++n) {
    for (Int d : {-7, -3, -1, 1, 2, 5}) {
      const Int f = floor_div(n, d);
      if (d > 0) {
        EXPECT_LE(f * d, n);
        EXPECT_GT((f + 1) * d, n);
      } else {
        EXPECT_GE(f * d, n);
        EXPECT_LT((f + 1) * d, n);
      }
      EXPECT_EQ(ceil_div(n, d), -floor_div(-n, d));
    }
  }
  EXPECT_THROW(floor_div(1, 0), std::domain_error);
}

TEST(Isqrt, BracketsArgument) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<Int> dist(0, Int{1} << 62);
  for (int i = 0; i < 2000; ++i) {
    const Int n = dist(rng);
    const Int r = isqrt(n);
    EXPECT_LE(static_cast<__int128>(r) * r, n);
    EXPECT_GT(static_cast<__int128>(r + 1) * (r + 1), n);
  }
  EXPECT_EQ(isqrt(0), 0);
  EXPECT_EQ(isqrt(15), 3);
  EXPECT_EQ(isqrt(16), 4);
  EXPECT_THROW(isqrt(-1), std::domain_error);
}

TEST(ExactSqrt, PerfectSquaresOnly) {
  EXPECT_EQ(exact_sqrt(49), 7);
  EXPECT_FALSE(exact_sqrt(10).has_value());
  EXPECT_FALSE(exact_sqrt(-4).has_value());
  EXPECT_TRUE(is_perfect_square(0));
}

TEST(Binomial, PascalRule) {
  for (Int n = 1; n <= 30; ++n)
    for (Int k = 1; k < n; ++k) EXPECT_EQ(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
  EXPECT_EQ(binomial(7, 3), 35);
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(binomial(5, -1), 0);
}

TEST(ExtendedGcd, BezoutIdentity) {
  for (Int a = -40; a <= 40; ++a) {
    for (Int b = -40; b <= 40; ++b) {
      const auto e = extended_gcd(a, b);
      EXPECT_EQ(e.g, std::gcd(a, b));
      EXPECT_EQ(a * e.x + b * e.y, e.g);
    }
  }
}

TEST(ConcaveSuperlevel, AgreesWithScan) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<Int> lead(-30, -1), coef(-200, 200), bound(-500, 200);
  for (int i = 0; i < 3000; ++i) {
    const IntQuadratic q{lead(rng), coef(rng), coef(rng)};
    const Int b = bound(rng);
    const IntRange r = concave_superlevel(q, b);
    Int lo = 1, hi = 0;
    bool any = false;
    for (Int k = -500; k <= 500; ++k) {
      if (q(k) >= b) {
        if (!any) lo = k;
        hi = k;
        any = true;
      }
    }
    if (!any) {
      EXPECT_TRUE(r.empty());
    } else {
      EXPECT_EQ(r.lo, lo);
      EXPECT_EQ(r.hi, hi);
    }
  }
  EXPECT_THROW(concave_superlevel({1, 0, 0}, 0), precondition_error);
}
