#include <gtest/gtest.h>

#include "fanocert/ruled.hpp"

using namespace fanocert;

namespace {

struct Brute {
  RuledLattice::Class h, c;
};

/// Every (x, y, u, v) in [0, 20]^4 with the stated constraints.
std::vector<Brute> brute_force(Int n, CurveModel model) {
  const RuledLattice lat{n};
  std::vector<Brute> out;
  for (Int x = 0; x <= 20; ++x)
    for (Int y = 0; y <= 20; ++y) {
      const RuledLattice::Class h{x, y};
      if (!lat.nef(h) || lat.pair(h, h) != 10) continue;
      for (Int u = 0; u <= 20; ++u)
        for (Int v = 0; v <= 20; ++v) {
          const RuledLattice::Class c{u, v};
          if (model == CurveModel::Moving ? !lat.nef(c) : !lat.effective(c)) continue;
          const RuledLattice::Class kc{c.s - 2, c.f - (n + 2)};
          if (lat.pair(c, h) == 3 && lat.pair(kc, c) == -2) out.push_back({h, c});
        }
    }
  return out;
}

}  // namespace

TEST(RuledLattice, GramData) {
  for (Int n = 0; n <= 6; ++n) {
    const RuledLattice lat{n};
    EXPECT_EQ(lat.pair({1, 0}, {1, 0}), -n);
    EXPECT_EQ(lat.pair({0, 1}, {0, 1}), 0);
    EXPECT_EQ(lat.pair({1, 0}, {0, 1}), 1);
    EXPECT_EQ(lat.canonical(), (RuledLattice::Class{-2, -(n + 2)}));
    // K^2 = 8 on every Hirzebruch surface.
    EXPECT_EQ(lat.pair(lat.canonical(), lat.canonical()), 8);
  }
}

TEST(P2SquareTen, Examples) {
  EXPECT_TRUE(p2_square_ten().passed());
  EXPECT_FALSE(p2_square_ten(9).passed());
  EXPECT_FALSE(p2_square_ten(0).passed());
}

TEST(HirzebruchSearch, EmptyForMovingCurves) {
  for (Int n = 0; n <= 10; ++n) EXPECT_TRUE(hirzebruch_search(n).empty()) << "n=" << n;
}

TEST(HirzebruchSearch, MatchesBruteForceBothModels) {
  for (Int n = 0; n <= 10; ++n) {
    for (CurveModel model : {CurveModel::Moving, CurveModel::Effective}) {
      const auto got = hirzebruch_search(n, model);
      const auto expect = brute_force(n, model);
      ASSERT_EQ(got.size(), expect.size()) << "n=" << n;
      for (const auto& e : expect) {
        const HirzebruchWitness w{e.h, e.c};
        EXPECT_NE(std::find(got.begin(), got.end(), w), got.end());
      }
    }
  }
}

TEST(HirzebruchSearch, EffectiveModelWitnessesContainTheNegativeSection) {
  const auto w = hirzebruch_search(4, CurveModel::Effective);
  ASSERT_EQ(w.size(), 1u);
  EXPECT_EQ(w[0].hyperplane, (RuledLattice::Class{1, 7}));
  EXPECT_EQ(w[0].curve, (RuledLattice::Class{1, 0}));
  for (Int n = 0; n <= 10; ++n)
    for (const auto& x : hirzebruch_search(n, CurveModel::Effective))
      EXPECT_LT(RuledLattice{n}.pair(x.curve, {1, 0}), 0);
}

TEST(HirzebruchSearch, NoNefSquareTenBeyondTen) {
  // For odd n, x(2y - n x) = 10 has no integer solution; for even n <= 10, x = 1 works.
  for (Int n = 0; n <= 10; ++n) EXPECT_EQ(hirzebruch_admits_nef_square(n), n % 2 == 0) << n;
  for (Int n = 11; n <= 60; ++n) EXPECT_FALSE(hirzebruch_admits_nef_square(n)) << n;
  EXPECT_THROW(hirzebruch_search(-1), precondition_error);
}

TEST(AdjunctionChain, ForcesSquareOne) {
  // 0 <= (K+H).C = 1 - C^2 together with C^2 >= 1 leaves only C^2 = 1.
  std::vector<Int> admissible;
  for (Int sq = 1; sq <= 20; ++sq)
    if (adjunction_defect(sq) >= 0) admissible.push_back(sq);
  EXPECT_EQ(admissible, (std::vector<Int>{1}));
  for (Int sq = -10; sq <= 10; ++sq) EXPECT_EQ(adjunction_defect(sq), 1 - sq);
}

TEST(NoetherContradiction, Examples) {
  EXPECT_TRUE(noether_contradiction(10).passed());
  EXPECT_FALSE(noether_contradiction(9).passed());
  EXPECT_FALSE(noether_contradiction(1).passed());
}
