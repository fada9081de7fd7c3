#pragma once

// Non-tetragonality of the hyperplane section T of a genus-8 K3 section.
//
// A base-point-free g^1_4 on T would come from a class Delta = a*T + b*C with
//   h(1 - a) - d*b >= 0   and   lo <= h*a + d*b <= hi,
// where h = T^2 and [lo, hi] is the degree window from the pencil. Each
// solution is shown impossible: solutions whose square forces reducibility are
// handled family by family, the few that do not are eliminated one by one.

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "fanocert/check.hpp"
#include "fanocert/diophantine.hpp"
#include "fanocert/lattice.hpp"
#include "fanocert/riemannroch.hpp"

namespace fanocert {

struct TetragonalConfig {
  Int hyperplane_square = 14;  // T^2
  Int window_lo = 4;           // degree of the pencil being excluded
  Int window_hi = 7;           // genus(T) - 1
  Int min_moving_degree = 3;   // T.M for a moving part with h0 >= 2

  static TetragonalConfig for_family(const FamilySpec& fam) {
    TetragonalConfig c;
    c.hyperplane_square = fam.h_square;
    c.window_hi = fam.h_square / 2;  // genus(T) - 1 with genus(T) = T^2/2 + 1
    return c;
  }
};

enum class TetragonalRoute { Conic, FixedMoving };

inline const char* to_string(TetragonalRoute r) {
  return r == TetragonalRoute::Conic ? "conic" : "fixed-moving";
}

struct FamilyReport {
  LinearFamily family;
  FamilyMax max;  // over non-special members
};

enum class SpecialStatus { Eliminated, Cited, Open };

struct SpecialReport {
  DivisorClass cls;
  Int square;
  Int degree;  // Delta.T
  SpecialStatus status;
  std::string reason;
};

struct TetragonalReport {
  TetragonalRoute route = TetragonalRoute::Conic;
  std::vector<FamilyReport> families;
  std::vector<SpecialReport> specials;
  std::vector<CheckOutcome> checks;
  std::vector<std::string> gaps;
  bool passed = false;

  /// True if p satisfies the inequality system and is accounted for.
  bool covers(DivisorClass p) const {
    for (const auto& s : specials)
      if (s.cls == p) return true;
    return std::any_of(families.begin(), families.end(),
                       [&](const FamilyReport& f) { return f.family.index_of(p).has_value(); });
  }
};

/// Passes iff -2*multiplicity_cap^2 > square_cap: a fixed part m*R with R a
/// (-2)-curve and m <= multiplicity_cap gives (F+M)^2 >= -2m^2.
inline CheckOutcome fixed_moving_bound(Int square_cap, Int t_f_max, Int multiplicity_cap) {
  CheckOutcome out = make_check("fixed-moving-bound", "fixed-part-square-bound");
  out.input("square_cap", square_cap).input("t_f_max", t_f_max);
  out.input("multiplicity_cap", multiplicity_cap);
  const Int lower = -2 * multiplicity_cap * multiplicity_cap;
  out.witness("lower_bound", {lower});
  out.set(lower > square_cap);
  return out;
}

namespace detail {

inline CheckOutcome degree_emptiness(const IntersectionLattice& l, Int degree, std::string name) {
  CheckOutcome out = make_check(std::move(name), "picard-lattice-curve-search");
  out.input("degree", degree).input("min_square", kIrreducibleMinSquare);
  for (DivisorClass c : curve_class_search(l, degree, kIrreducibleMinSquare))
    out.witness("class", {c.a, c.b, l.square(c)});
  out.set(out.witnesses.empty());
  return out;
}

}  // namespace detail

inline TetragonalReport tetragonal_certificate(Int d, Int g,
                                               const TetragonalConfig& cfg = TetragonalConfig{}) {
  const FamilySpec fam{FamilyId::X14, "x14", cfg.hyperplane_square, 1, 0, 0, 0, 0, false};
  const IntersectionLattice l = make_family_lattice(fam, d, g);
  const LinearForm on_t{cfg.hyperplane_square, d};

  std::vector<Int> values(static_cast<std::size_t>(cfg.window_hi - cfg.window_lo + 1));
  std::iota(values.begin(), values.end(), cfg.window_lo);

  TetragonalReport rep;
  const auto families = family_solutions(on_t, values, on_t, cfg.hyperplane_square);
  const bool even_window = std::all_of(families.begin(), families.end(), [](const LinearFamily& f) {
    return f.value == 4 || f.value == 6;
  });
  rep.route = even_window ? TetragonalRoute::Conic : TetragonalRoute::FixedMoving;

  const Int multiplicity_cap = cfg.window_hi - cfg.min_moving_degree;
  const Int special_floor = rep.route == TetragonalRoute::Conic
                                ? kIrreducibleMinSquare
                                : -2 * multiplicity_cap * multiplicity_cap;

  // Members above the floor are specials.
  std::vector<DivisorClass> special_classes;
  for (const auto& f : families) {
    const IntQuadratic q{l.square(f.step), 2 * l.pair(f.base, f.step), l.square(f.base)};
    IntRange ks = concave_superlevel(q, special_floor);
    if (f.k_min) ks.lo = std::max(ks.lo, *f.k_min);
    if (f.k_max) ks.hi = std::min(ks.hi, *f.k_max);
    for (Int k = ks.lo; k <= ks.hi; ++k) special_classes.push_back(f.at(k));
  }
  std::sort(special_classes.begin(), special_classes.end());

  bool ok = true;
  Int nonspecial_max = std::numeric_limits<Int>::min();
  for (const auto& f : families) {
    FamilyReport fr{f, family_quadratic_max(l, f, special_classes)};
    if (fr.max.max_square) nonspecial_max = std::max(nonspecial_max, *fr.max.max_square);
    rep.families.push_back(fr);
  }

  const CheckOutcome lines = detail::degree_emptiness(l, 1, "no-lines");
  rep.checks.push_back(lines);

  if (rep.route == TetragonalRoute::Conic) {
    // Reducible of degree 4 or 6 with no line and no conic component.
    CheckOutcome reducible = make_check("nonspecial-reducible", "irreducible-square-at-least-minus-two");
    reducible.input("max_square", nonspecial_max);
    reducible.set(nonspecial_max < kIrreducibleMinSquare);
    rep.checks.push_back(reducible);
    const CheckOutcome conics = detail::degree_emptiness(l, 2, "no-conics");
    rep.checks.push_back(conics);
    ok = ok && reducible.passed() && lines.passed() && conics.passed();
    const bool has_six = std::any_of(families.begin(), families.end(),
                                     [](const LinearFamily& f) { return f.value == 6; });
    if (has_six) {
      const CheckOutcome cubics = detail::degree_emptiness(l, 3, "no-cubic-components");
      rep.checks.push_back(cubics);
      rep.gaps.push_back(
          std::string("degree-6 reducible members may split as 3+3 without a conic component; ") +
          (cubics.passed() ? "closed here: no class of degree 3 with square >= -2 exists"
                           : "not closed: degree-3 classes with square >= -2 exist"));
    }
  } else {
    CheckOutcome excludes_c = make_check("fixed-part-avoids-curve", "fixed-part-degree-bound");
    excludes_c.input("t_dot_c", d).input("multiplicity_cap", multiplicity_cap);
    excludes_c.set(d > multiplicity_cap);
    rep.checks.push_back(excludes_c);
    CheckOutcome bound = fixed_moving_bound(nonspecial_max, multiplicity_cap, multiplicity_cap);
    rep.checks.push_back(bound);
    ok = ok && excludes_c.passed() && bound.passed();
  }

  for (DivisorClass c : special_classes) {
    SpecialReport s{c, l.square(c), l.degree(c), SpecialStatus::Open, {}};
    if (s.square == -2) {
      const Int h0 = k3_h0(l, c, false);
      s.status = SpecialStatus::Eliminated;
      s.reason = "h0 = " + std::to_string(h0) + " < 2: not a pencil";
    } else if (s.square < -2 && s.degree - cfg.min_moving_degree == 1) {
      // Negative square: the fixed part F is nonzero, and T.F = 1 forces a line.
      s.status = lines.passed() ? SpecialStatus::Eliminated : SpecialStatus::Open;
      s.reason = "fixed part has T.F = 1, hence is a line; no line classes";
    } else if (s.square >= 0 && c == kCurve) {
      s.status = SpecialStatus::Cited;
      s.reason = "rigidity of C taken as cited: h0(O_S(C)) = 1";
      rep.gaps.push_back("special (0,1) has square " + std::to_string(s.square) +
                         "; Riemann-Roch gives h0(O_S(C)) >= " + std::to_string(s.square / 2 + 2) +
                         ", so the cited h0 = 1 elimination is not certified");
    } else {
      s.reason = "no elimination available";
    }
    ok = ok && s.status != SpecialStatus::Open;
    rep.specials.push_back(s);
  }
  rep.passed = ok;
  return rep;
}

}  // namespace fanocert
