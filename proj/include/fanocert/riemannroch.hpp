#pragma once

// Section counts: forms on projective space, Riemann-Roch on K3 surfaces and
// on curves, residual linear series and Brill-Noether numbers.

#include <ostream>

#include "fanocert/integer.hpp"
#include "fanocert/lattice.hpp"

namespace fanocert {

/// A g^r_d: a linear series of projective dimension r and degree d.
struct LinearSeries {
  Int r = 0;
  Int d = 0;

  LinearSeries() = default;
  LinearSeries(Int dim, Int deg) : r(dim), d(deg) {
    if (r < 0 || d < 0) throw precondition_error("linear series: need r >= 0 and d >= 0");
  }

  friend bool operator==(const LinearSeries&, const LinearSeries&) = default;
  friend std::ostream& operator<<(std::ostream& os, const LinearSeries& s) {
    return os << "g^" << s.r << "_" << s.d;
  }
};

/// h^0(O_{P^n}(s)) = C(n+s, s).
inline Int monomial_count(Int n, Int s) {
  if (n < 1 || s < 0) throw precondition_error("monomial_count: need n >= 1, s >= 0");
  return binomial(n + s, s);
}

/// Lower bound for h^0(I_C(s)) of a curve of degree d, genus g in P^n,
/// assuming O_C(s) nonspecial.
inline Int ideal_curve_bound(Int n, Int s, Int d, Int g) {
  const Int curve_sections = s * d + 1 - g;
  if (curve_sections < 0) throw precondition_error("ideal_curve_bound: s*d + 1 - g < 0");
  return monomial_count(n, s) - curve_sections;
}

/// h^0(O_S(D)) in the two regimes this engine decides: a (-2)-class of an
/// effective rigid curve (1) and a nef class of positive square (D^2/2 + 2).
/// Anything else is refused rather than guessed.
inline Int k3_h0(const IntersectionLattice& lattice, DivisorClass d, bool nef_hint) {
  const Int sq = lattice.square(d);
  if (sq == -2) return 1;
  if (nef_hint && sq > 0) return sq / 2 + 2;
  throw precondition_error("h0-undetermined");
}

/// |K - D| for a series D on a curve of genus g.
inline LinearSeries residual_series(Int g, const LinearSeries& s) {
  if (s.d < 0 || s.d > 2 * g - 2) throw precondition_error("residual_series: need 0 <= d <= 2g-2");
  const Int r = s.r + g - 1 - s.d;
  if (r < 0) throw precondition_error("residual_series: negative residual dimension");
  return LinearSeries(r, 2 * g - 2 - s.d);
}

inline Int brill_noether(Int g, Int r, Int d) { return g - (r + 1) * (g - d + r); }

/// Genus of a smooth plane curve of degree d; also the largest arithmetic
/// genus of an irreducible curve of degree d.
inline Int plane_curve_genus(Int d) {
  if (d < 1) throw precondition_error("plane_curve_genus: need d >= 1");
  return (d - 1) * (d - 2) / 2;
}

/// Dimension of the linear span of a nonspecial embedded curve.
inline Int span_dimension_bound(Int deg, Int g) {
  if (deg <= 2 * g - 2) throw precondition_error("span_dimension_bound: need deg > 2g-2");
  return deg - g;
}

}  // namespace fanocert
