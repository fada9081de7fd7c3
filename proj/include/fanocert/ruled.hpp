#pragma once

// Numerical endgame for surfaces of Picard rank at most two carrying a
// two-parameter family of rational cubics with hyperplane square 10.
//
// On F_n with section s (s^2 = -n), fiber f (f^2 = 0, s.f = 1) and
// K = -2s - (n+2)f, write H = x*s + y*f and C = u*s + v*f.

#include <algorithm>
#include <vector>

#include "fanocert/check.hpp"
#include "fanocert/integer.hpp"

namespace fanocert {

struct RuledLattice {
  Int n;

  struct Class {
    Int s;  // coefficient of the negative section
    Int f;  // coefficient of the fiber
    friend bool operator==(const Class&, const Class&) = default;
  };

  Int pair(Class x, Class y) const { return -n * x.s * y.s + x.s * y.f + x.f * y.s; }
  Class canonical() const { return {-2, -(n + 2)}; }
  bool nef(Class x) const { return x.s >= 0 && x.f >= n * x.s; }
  bool effective(Class x) const { return x.s >= 0 && x.f >= 0; }
};

/// The plane has divisors of square k^2 only.
inline CheckOutcome p2_square_ten(Int target = 10) {
  CheckOutcome out = make_check("p2-no-square-ten", "plane-divisor-squares");
  out.input("target", target);
  if (auto r = exact_sqrt(target)) out.witness("degree", {*r});
  out.set(!is_perfect_square(target));
  return out;
}

/// Which curve classes are admitted for C.
enum class CurveModel {
  Moving,     // member of a covering family: nef
  Effective,  // any effective class u, v >= 0
};

struct HirzebruchWitness {
  RuledLattice::Class hyperplane;
  RuledLattice::Class curve;
  friend bool operator==(const HirzebruchWitness&, const HirzebruchWitness&) = default;
};

/// Every nef H with H^2 = h_square paired with an admissible C satisfying
/// C.H = c_degree and (K + C).C = -2. H^2 = x(2y - n x) = h_square forces
/// x | h_square, which makes the enumeration exhaustive.
inline std::vector<HirzebruchWitness> hirzebruch_search(Int n, CurveModel model = CurveModel::Moving,
                                                        Int h_square = 10, Int c_degree = 3) {
  if (n < 0) throw precondition_error("hirzebruch_search: need n >= 0");
  const RuledLattice lat{n};
  std::vector<HirzebruchWitness> out;
  for (Int x = 1; x <= h_square; ++x) {
    if (h_square % x != 0) continue;
    // 2y - n x = h_square / x
    const Int twice_y = h_square / x + n * x;
    if (twice_y % 2 != 0) continue;
    const RuledLattice::Class h{x, twice_y / 2};
    if (!lat.nef(h)) continue;
    // C.H = u(y - n x) + v x = c_degree with u, v >= 0: v <= c_degree / x, and
    // u <= c_degree / (y - n x) unless y = n x, where u is fixed by the genus.
    const Int slack = h.f - n * h.s;
    for (Int v = 0; v * x <= c_degree; ++v) {
      const Int rest = c_degree - v * x;
      std::vector<Int> us;
      if (slack > 0) {
        if (rest % slack == 0) us.push_back(rest / slack);
      } else if (rest == 0) {
        // (K+C).C = -n u^2 + 2uv + 2nu - 2v - (n+2)u = -2 is quadratic in u.
        const Int qa = -n, qb = 2 * v + 2 * n - (n + 2), qc = -2 * v + 2;
        if (qa == 0) {
          if (qb != 0 && qc % qb == 0) us.push_back(-qc / qb);
        } else {
          const Int disc = qb * qb - 4 * qa * qc;
          if (auto r = exact_sqrt(disc)) {
            for (Int num : {-qb + *r, -qb - *r})
              if (num % (2 * qa) == 0) us.push_back(num / (2 * qa));
          }
        }
      }
      for (Int u : us) {
        const RuledLattice::Class c{u, v};
        if (u < 0) continue;
        const bool admitted = model == CurveModel::Moving ? lat.nef(c) : lat.effective(c);
        if (!admitted) continue;
        if (lat.pair(c, h) != c_degree) continue;
        const RuledLattice::Class kc{lat.canonical().s + c.s, lat.canonical().f + c.f};
        if (lat.pair(kc, c) != -2) continue;
        const HirzebruchWitness w{h, c};
        if (std::find(out.begin(), out.end(), w) == out.end()) out.push_back(w);
      }
    }
  }
  return out;
}

/// Nef H with H^2 = h_square exists on F_n only for n <= h_square (x = 1).
inline bool hirzebruch_admits_nef_square(Int n, Int h_square = 10) {
  for (Int x = 1; x <= h_square; ++x) {
    if (h_square % x != 0) continue;
    const Int twice_y = h_square / x + n * x;
    if (twice_y % 2 == 0 && RuledLattice{n}.nef({x, twice_y / 2})) return true;
  }
  return false;
}

/// (K + H).C = 1 - C^2 when H.C = 3 and (K + C).C = -2.
inline Int adjunction_defect(Int c_square, Int c_degree = 3) { return (-2 - c_square) + c_degree; }

/// Smooth weak del Pezzo surfaces have K^2 <= 9.
inline CheckOutcome noether_contradiction(Int k_square) {
  CheckOutcome out = make_check("noether-bound", "weak-del-pezzo-degree-bound");
  out.input("k_square", k_square).input("bound", 9);
  out.set(k_square > 9);
  return out;
}

}  // namespace fanocert
