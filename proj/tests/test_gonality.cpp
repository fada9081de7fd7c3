#include <gtest/gtest.h>

#include <set>

#include "fanocert/gonality.hpp"

using namespace fanocert;

namespace {

TetragonalReport report(Int d, Int g) {
  return tetragonal_certificate(d, g, TetragonalConfig::for_family(family(FamilyId::X14)));
}

const SpecialReport* find_special(const TetragonalReport& r, DivisorClass c) {
  for (const auto& s : r.specials)
    if (s.cls == c) return &s;
  return nullptr;
}

const CheckOutcome* find_check(const TetragonalReport& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return &c;
  return nullptr;
}

}  // namespace

TEST(TetragonalConfig, DerivedFromFamily) {
  const auto cfg = TetragonalConfig::for_family(family(FamilyId::X14));
  EXPECT_EQ(cfg.hyperplane_square, 14);
  EXPECT_EQ(cfg.window_lo, 4);
  EXPECT_EQ(cfg.window_hi, 7);
}

TEST(FixedMovingBound, Examples) {
  EXPECT_TRUE(fixed_moving_bound(-58, 4, 4).passed());
  EXPECT_FALSE(fixed_moving_bound(-32, 4, 4).passed());
  EXPECT_TRUE(fixed_moving_bound(-100, 4, 4).passed());
  EXPECT_EQ(fixed_moving_bound(-58, 4, 4).witnesses[0].values, (std::vector<Int>{-32}));
}

TEST(Tetragonal, QuarticFamiliesMatchClosedForm) {
  const auto r = report(4, 0);
  EXPECT_EQ(r.route, TetragonalRoute::Conic);
  std::set<DivisorClass> from_report, closed_form;
  for (Int k = -50; k <= 50; ++k) {
    closed_form.insert({2 * k, 1 - 7 * k});
    closed_form.insert({2 * k + 1, -2 - 7 * k});
  }
  for (const auto& f : r.families) {
    EXPECT_TRUE(f.family.value == 4 || f.family.value == 6);
    for (Int k = -200; k <= 200; ++k) {
      const DivisorClass p = f.family.at(k);
      if (p.a >= -100 && p.a <= 101) from_report.insert(p);
    }
  }
  EXPECT_EQ(from_report, closed_form);
}

TEST(Tetragonal, QuarticSquaresAndConics) {
  const auto r = report(4, 0);
  EXPECT_TRUE(r.passed);
  const auto l = make_family_lattice(family(FamilyId::X14), 4, 0);
  for (const auto& f : r.families)
    for (Int k = -50; k <= 50; ++k) EXPECT_LT(l.square(f.family.at(k)), 0);
  ASSERT_NE(find_check(r, "no-conics"), nullptr);
  EXPECT_TRUE(find_check(r, "no-conics")->passed());
  ASSERT_NE(find_check(r, "nonspecial-reducible"), nullptr);
  EXPECT_TRUE(find_check(r, "nonspecial-reducible")->passed());
  // (0,1) has square -2, (1,-2) square -10.
  ASSERT_NE(find_special(r, {0, 1}), nullptr);
  EXPECT_EQ(find_special(r, {0, 1})->square, -2);
  EXPECT_EQ(find_special(r, {0, 1})->status, SpecialStatus::Eliminated);
}

TEST(Tetragonal, QuinticSpecialsAndBound) {
  const auto r = report(5, 0);
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(r.route, TetragonalRoute::FixedMoving);
  const auto* s = find_special(r, {1, -2});
  ASSERT_NE(s, nullptr);
  EXPECT_EQ(s->square, -14);
  EXPECT_EQ(s->degree, 4);
  EXPECT_EQ(s->status, SpecialStatus::Eliminated);
  const auto* c = find_special(r, {0, 1});
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(c->square, -2);
  EXPECT_EQ(c->status, SpecialStatus::Eliminated);
  Int best = std::numeric_limits<Int>::min();
  for (const auto& f : r.families)
    if (f.max.max_square) best = std::max(best, *f.max.max_square);
  EXPECT_EQ(best, -58);
  ASSERT_NE(find_check(r, "fixed-moving-bound"), nullptr);
  EXPECT_TRUE(find_check(r, "fixed-moving-bound")->passed());
}

TEST(Tetragonal, SexticCurveIsCitedSpecial) {
  const auto r = report(6, 1);
  EXPECT_TRUE(r.passed);
  const auto* s = find_special(r, {0, 1});
  ASSERT_NE(s, nullptr);
  EXPECT_EQ(s->square, 0);
  EXPECT_EQ(s->status, SpecialStatus::Cited);
  EXPECT_FALSE(r.gaps.empty());
}

TEST(Tetragonal, ReportIsCompleteOverBox) {
  for (auto [d, g] : std::vector<std::pair<Int, Int>>{{4, 0}, {5, 0}, {6, 1}, {7, 2}}) {
    const auto r = report(d, g);
    for (Int a = -100; a <= 100; ++a) {
      for (Int b = -100; b <= 100; ++b) {
        const Int on_t = 14 * a + d * b;
        const bool solves = 14 * (1 - a) - d * b >= 0 && on_t >= 4 && on_t <= 7;
        if (solves) {
          EXPECT_TRUE(r.covers({a, b})) << d << "," << g << ": " << a << "," << b;
        }
      }
    }
  }
}

TEST(Tetragonal, EveryNonSpecialMemberIsBelowTheFloor) {
  for (auto [d, g] : std::vector<std::pair<Int, Int>>{{4, 0}, {5, 0}, {6, 1}}) {
    const auto r = report(d, g);
    const auto l = make_family_lattice(family(FamilyId::X14), d, g);
    const Int floor = r.route == TetragonalRoute::Conic ? -2 : -32;
    for (const auto& f : r.families) {
      for (Int k = -300; k <= 300; ++k) {
        const DivisorClass p = f.family.at(k);
        if (!f.family.in_range(k) || find_special(r, p)) continue;
        EXPECT_LT(l.square(p), floor);
        ASSERT_TRUE(f.max.max_square.has_value());
        EXPECT_LE(l.square(p), *f.max.max_square);
      }
    }
  }
}
