#pragma once

// Numerical candidates for curves that could make s*H - C fail to be nef.
//
// A curve G of degree m meeting C in at least s*m+1 points lies in every
// hypersurface of the cutting degree through C, so deg(G u C) is at most the
// family's cutting bound. Hodge index applied to C + G then caps p_a(G).

#include <algorithm>
#include <vector>

#include "fanocert/integer.hpp"
#include "fanocert/lattice.hpp"
#include "fanocert/riemannroch.hpp"

namespace fanocert {

struct SecantCandidate {
  Int m;         // degree
  Int p_a;       // arithmetic genus
  Int secancy;   // s*m + 1

  friend bool operator==(const SecantCandidate&, const SecantCandidate&) = default;
};

inline Int max_secant_degree(const FamilySpec& fam, Int d) {
  if (d >= fam.cutting_bound) throw precondition_error("max_secant_degree: d >= cutting bound");
  return fam.cutting_bound - d;
}

/// floor((d+m)^2 / (2 h^2)) + 1 - g - s*m. Negative means degree m is impossible.
inline Int genus_cap(const FamilySpec& fam, Int d, Int g, Int m) {
  if (m < 1) throw precondition_error("genus_cap: need m >= 1");
  return floor_div((d + m) * (d + m), 2 * fam.h_square) + 1 - g - fam.index_multiplier * m;
}

/// Whether a plane cubic (m = 3, p_a = 1) is ruled out: it lies in a plane,
/// which meets C in at most d points.
inline bool plane_cubic_excluded(const FamilySpec& fam, Int d) {
  return 3 * fam.index_multiplier + 1 > d;
}

/// All (m, p_a) left after the cutting bound, the Hodge-index cap, the
/// irreducible-curve genus bound and the plane-cubic elimination.
inline std::vector<SecantCandidate> admissible_table(const FamilySpec& fam, Int d, Int g) {
  std::vector<SecantCandidate> out;
  const Int top = max_secant_degree(fam, d);
  for (Int m = 1; m <= top; ++m) {
    const Int cap = std::min(genus_cap(fam, d, g, m), plane_curve_genus(m));
    for (Int p = 0; p <= cap; ++p) {
      if (m == 3 && p == 1 && plane_cubic_excluded(fam, d)) continue;
      out.push_back({m, p, fam.index_multiplier * m + 1});
    }
  }
  return out;
}

}  // namespace fanocert
