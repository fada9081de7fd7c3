#pragma once

// Nefness of s*H - C by eliminating every secant candidate in the Picard
// lattice, and freeness through the Saint-Donat decomposition budget.

#include "fanocert/check.hpp"
#include "fanocert/diophantine.hpp"
#include "fanocert/lattice.hpp"
#include "fanocert/secant.hpp"

namespace fanocert {

/// Numbers of a hypothetical decomposition D ~ k*E + G with E^2 = 0,
/// G^2 = -2, E.G = 1 of a nef, non-free class D.
struct FreenessBudget {
  Int k;             // (D^2 + 2) / 2
  Int h_dot_d;       // H.D
  Int gamma_budget;  // H.D - 3k, the largest possible H.G
};

/// Elliptic curves on the section have degree at least 3.
inline constexpr Int kMinEllipticDegree = 3;

inline FreenessBudget freeness_budget(const IntersectionLattice& l, DivisorClass d) {
  const Int sq = l.square(d);
  if (sq < 2) throw precondition_error("free_certificate: decomposition criterion needs k >= 2");
  const Int k = (sq + 2) / 2;
  const Int hd = l.degree(d);
  return {k, hd, hd - kMinEllipticDegree * k};
}

inline CheckOutcome nef_certificate(const FamilySpec& fam, Int d, Int g) {
  const IntersectionLattice l = make_family_lattice(fam, d, g);
  CheckOutcome out = make_check("nef", "secant-elimination-in-picard-lattice",
                                fam.derived_constants ? CheckKind::DerivedExtension
                                                      : CheckKind::Verified);
  out.input("d", d).input("g", g).input("s", fam.index_multiplier);
  bool ok = true;
  for (const SecantCandidate& cand : admissible_table(fam, d, g)) {
    for (DivisorClass gamma : solve_degree_square({&l, cand.m, 2 * cand.p_a - 2})) {
      const Int meet = l.pair(gamma, kCurve);
      const bool eliminated = meet < cand.secancy;
      ok = ok && eliminated;
      out.witness(eliminated ? "eliminated" : "violating",
                  {cand.m, cand.p_a, gamma.a, gamma.b, meet});
    }
  }
  out.set(ok);
  return out;
}

/// Freeness of a nef class D of square >= 2 on the given lattice.
inline CheckOutcome free_certificate(const IntersectionLattice& l, DivisorClass d,
                                     CheckKind kind = CheckKind::Verified) {
  const FreenessBudget budget = freeness_budget(l, d);
  CheckOutcome out = make_check("free", "saint-donat-decomposition-budget", kind);
  out.input("class_a", d.a).input("class_b", d.b);
  out.input("k", budget.k).input("h_dot_d", budget.h_dot_d);
  out.input("gamma_budget", budget.gamma_budget);
  bool ok = true;
  for (Int deg = 1; deg <= budget.gamma_budget; ++deg) {
    for (DivisorClass gamma : solve_degree_square({&l, deg, -2})) {
      ok = false;
      out.witness("minus-two-class", {deg, gamma.a, gamma.b});
    }
  }
  out.set(ok);
  return out;
}

inline CheckOutcome free_certificate(const FamilySpec& fam, Int d, Int g) {
  return free_certificate(make_family_lattice(fam, d, g), anticanonical_class(fam),
                          fam.derived_constants ? CheckKind::DerivedExtension
                                                : CheckKind::Verified);
}

}  // namespace fanocert
