#include <gtest/gtest.h>

#include <random>

#include "catalog_lists.hpp"
#include "fanocert/lattice.hpp"

using namespace fanocert;

namespace {

std::vector<IntersectionLattice> catalog_lattices() {
  std::vector<IntersectionLattice> out;
  for (const auto& fam : kFamilies)
    for (auto [d, g] : testdata::pairs(fam.id)) out.push_back(make_family_lattice(fam, d, g));
  return out;
}

}  // namespace

TEST(FamilySpec, Constants) {
  EXPECT_EQ(family(FamilyId::Quadric).h_square, 6);
  EXPECT_EQ(family(FamilyId::V4).cutting_bound, 16);
  EXPECT_EQ(family(FamilyId::V5).index_multiplier, 2);
  EXPECT_EQ(family(FamilyId::X14).anticanonical_cube_base, 14);
  ASSERT_NE(find_family("v5"), nullptr);
  EXPECT_EQ(find_family("v5")->id, FamilyId::V5);
  EXPECT_EQ(find_family("p3"), nullptr);
}

TEST(MakeFamilyLattice, GramExamples) {
  const auto q = make_family_lattice(family(FamilyId::Quadric), 13, 14);
  EXPECT_EQ(q.gram(), (std::array<std::array<Int, 2>, 2>{{{6, 13}, {13, 26}}}));
  const auto v5 = make_family_lattice(family(FamilyId::V5), 14, 10);
  EXPECT_EQ(v5.gram(), (std::array<std::array<Int, 2>, 2>{{{10, 14}, {14, 18}}}));
  const auto x = make_family_lattice(family(FamilyId::X14), 4, 0);
  EXPECT_EQ(x.gram(), (std::array<std::array<Int, 2>, 2>{{{14, 4}, {4, -2}}}));
  EXPECT_EQ(x.basis_names()[0], "T");
  EXPECT_EQ(q.basis_names()[0], "H_S");
}

TEST(MakeFamilyLattice, RejectsBadInput) {
  EXPECT_THROW(make_family_lattice(family(FamilyId::Quadric), 0, 1), precondition_error);
  EXPECT_THROW(make_family_lattice(family(FamilyId::Quadric), 5, -1), precondition_error);
  // 6 * 2*(g-1) - d^2 >= 0 for d = 1, g = 5
  EXPECT_THROW(make_family_lattice(family(FamilyId::Quadric), 1, 5), precondition_error);
  EXPECT_THROW(IntersectionLattice(3, 1, -2), precondition_error);
}

TEST(Pair, PaperEliminationValues) {
  const auto q = make_family_lattice(family(FamilyId::Quadric), 13, 14);
  EXPECT_EQ(pair(q, kPolarization, kPolarization), 6);
  EXPECT_EQ(pair(q, {-2, 1}, kCurve), 0);
  const auto v4 = make_family_lattice(family(FamilyId::V4), 10, 6);
  EXPECT_EQ(pair(v4, {-1, 1}, kCurve), 0);
}

TEST(Pair, SymmetricAndBilinear) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<Int> coord(-100, 100), scal(-9, 9);
  for (const auto& l : catalog_lattices()) {
    for (int i = 0; i < 200; ++i) {
      const DivisorClass x{coord(rng), coord(rng)}, y{coord(rng), coord(rng)}, z{coord(rng), coord(rng)};
      const Int k = scal(rng);
      EXPECT_EQ(l.pair(x, y), l.pair(y, x));
      EXPECT_EQ(l.pair(x + k * z, y), l.pair(x, y) + k * l.pair(z, y));
      EXPECT_EQ(l.pair(x, y + k * z), l.pair(x, y) + k * l.pair(x, z));
    }
  }
}

TEST(SquareAndGenus, Examples) {
  const auto v5 = make_family_lattice(family(FamilyId::V5), 14, 10);
  EXPECT_EQ(square_and_genus(v5, {2, -1}), (SquareAndGenus{2, 2}));
  const auto v5b = make_family_lattice(family(FamilyId::V5), 8, 3);
  EXPECT_EQ(square_and_genus(v5b, {2, -1}), (SquareAndGenus{12, 7}));
  const auto v5c = make_family_lattice(family(FamilyId::V5), 7, 0);
  EXPECT_EQ(square_and_genus(v5c, {1, -1}), (SquareAndGenus{-6, -2}));
}

TEST(CatalogLattices, EvenSquaresAndNegativeDeterminant) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<Int> coord(-100, 100);
  for (const auto& l : catalog_lattices()) {
    EXPECT_LT(l.determinant(), 0);
    for (int i = 0; i < 100; ++i) EXPECT_EQ(l.square({coord(rng), coord(rng)}) % 2, 0);
  }
}

TEST(CatalogLattices, AnticanonicalSquareMatchesCubeFormula) {
  for (const auto& fam : kFamilies) {
    for (auto [d, g] : testdata::pairs(fam.id)) {
      const auto l = make_family_lattice(fam, d, g);
      const Int s = fam.index_multiplier;
      // (-K_Y)^3 + 2 K_Y.C - 2 + 2g with K_Y.C = -s d
      EXPECT_EQ(l.square(anticanonical_class(fam)), fam.anticanonical_cube_base - 2 * s * d - 2 + 2 * g)
          << fam.name << " " << d << "," << g;
    }
  }
}
