#pragma once

// Exact bounded integer searches on rank-2 lattices: classes of fixed degree
// and square, integer points of bounded bands, arithmetic progressions cut out
// by one linear equation, and maxima of the square along such progressions.

#include <algorithm>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "fanocert/check.hpp"
#include "fanocert/integer.hpp"
#include "fanocert/lattice.hpp"

namespace fanocert {

/// Standing effectivity rule on a K3 surface: an irreducible curve has square >= -2.
inline constexpr Int kIrreducibleMinSquare = -2;

struct DegreeSquareProblem {
  const IntersectionLattice* lattice;
  Int degree;  // D . polarization
  Int square;  // D^2
};

namespace detail {

inline void push_if_integral(std::vector<DivisorClass>& out, const IntersectionLattice& l,
                             Int m, Int q, Int a_num, Int a_den) {
  if (a_den == 0 || a_num % a_den != 0) return;
  const Int a = a_num / a_den;
  const Int rest = m - l.h_square() * a;
  if (rest % l.h_dot_c() != 0) return;
  const DivisorClass c{a, rest / l.h_dot_c()};
  if (l.square(c) == q && l.degree(c) == m) out.push_back(c);
}

}  // namespace detail

/// Every integer class with the given degree and square. The degree equation
/// eliminates b, leaving one quadratic in a with at most two rational roots.
inline std::vector<DivisorClass> solve_degree_square(const DegreeSquareProblem& p) {
  const IntersectionLattice& l = *p.lattice;
  const Int h = l.h_square(), r = l.h_dot_c(), t = l.c_square();
  const Int m = p.degree, q = p.square;
  std::vector<DivisorClass> out;

  if (r == 0) {
    // a*h = m, b^2 * t = q - h*a^2
    if (m % h != 0) return out;
    const Int a = m / h;
    const Int rest = q - h * a * a;
    if (rest % t != 0) return out;
    if (auto b = exact_sqrt(rest / t)) {
      out.push_back({a, *b});
      if (*b != 0) out.push_back({a, -*b});
    }
    std::sort(out.begin(), out.end());
    return out;
  }
  if (h == 0) {
    if (m % r != 0) return out;
    const Int b = m / r;
    if (b == 0) throw precondition_error("solve_degree_square: infinite solution set");
    const Int rest = q - t * b * b;
    if (rest % (2 * r * b) == 0) out.push_back({rest / (2 * r * b), b});
    return out;
  }

  const Int det = l.determinant();
  const __int128 qa = static_cast<__int128>(h) * det;
  const __int128 qb = -2 * static_cast<__int128>(m) * det;
  const __int128 qc = static_cast<__int128>(t) * m * m - static_cast<__int128>(q) * r * r;
  const __int128 disc = qb * qb - 4 * qa * qc;
  if (disc < 0) return out;
  if (disc > static_cast<__int128>(std::numeric_limits<Int>::max()))
    throw precondition_error("solve_degree_square: discriminant out of range");
  const auto root = exact_sqrt(static_cast<Int>(disc));
  if (!root) return out;
  const Int den = static_cast<Int>(2 * qa);
  detail::push_if_integral(out, l, m, q, static_cast<Int>(-qb) + *root, den);
  if (*root != 0) detail::push_if_integral(out, l, m, q, static_cast<Int>(-qb) - *root, den);
  std::sort(out.begin(), out.end());
  return out;
}

/// All classes of polarization degree `degree` with square >= min_square.
/// Finite because the degree-zero direction has negative square.
inline std::vector<DivisorClass> curve_class_search(const IntersectionLattice& l, Int degree,
                                                    Int min_square) {
  const Int h = l.h_square(), r = l.h_dot_c();
  if (h <= 0) throw precondition_error("curve_class_search: polarization must have positive square");
  std::vector<DivisorClass> out;
  const auto eg = extended_gcd(h, r);
  if (degree % eg.g != 0) return out;
  const DivisorClass base{eg.x * (degree / eg.g), eg.y * (degree / eg.g)};
  const DivisorClass dir{r / eg.g, -h / eg.g};
  const IntQuadratic along{l.square(dir), 2 * l.pair(base, dir), l.square(base)};
  const IntRange ks = concave_superlevel(along, min_square);
  for (Int k = ks.lo; k <= ks.hi; ++k) out.push_back(base + k * dir);
  std::sort(out.begin(), out.end());
  return out;
}

/// An interval of integers with optionally open endpoints.
struct Interval {
  Int lo;
  Int hi;
  bool lo_open = false;
  bool hi_open = false;

  static Interval open(Int lo, Int hi) { return {lo, hi, true, true}; }
  static Interval closed(Int lo, Int hi) { return {lo, hi, false, false}; }

  Int first() const { return lo_open ? lo + 1 : lo; }
  Int last() const { return hi_open ? hi - 1 : hi; }
  bool contains(Int x) const { return x >= first() && x <= last(); }
};

struct LinearForm {
  Int a;
  Int b;
  Int operator()(DivisorClass c) const { return a * c.a + b * c.b; }
};

/// Integer points (a,b) with form1(a,b) in range1 and form2(a,b) in range2.
/// Passes when there are none; otherwise every point is listed as a witness.
inline CheckOutcome band_empty(LinearForm form1, Interval range1, LinearForm form2,
                               Interval range2) {
  const Int det = form1.a * form2.b - form1.b * form2.a;
  if (det == 0) throw precondition_error("band_empty: forms are dependent (unbounded region)");
  CheckOutcome out = make_check("band-empty", "integer-band-enumeration");
  out.input("form1_a", form1.a).input("form1_b", form1.b);
  out.input("range1_first", range1.first()).input("range1_last", range1.last());
  out.input("form2_a", form2.a).input("form2_b", form2.b);
  out.input("range2_first", range2.first()).input("range2_last", range2.last());
  for (Int x = range1.first(); x <= range1.last(); ++x) {
    for (Int y = range2.first(); y <= range2.last(); ++y) {
      const Int a_num = x * form2.b - y * form1.b;
      const Int b_num = form1.a * y - form2.a * x;
      if (a_num % det != 0 || b_num % det != 0) continue;
      out.witness("point", {a_num / det, b_num / det});
    }
  }
  std::sort(out.witnesses.begin(), out.witnesses.end(),
            [](const Witness& l, const Witness& r) { return l.values < r.values; });
  out.set(out.witnesses.empty());
  return out;
}

/// The integer points base + k*step, optionally restricted to k_min <= k <= k_max.
struct LinearFamily {
  DivisorClass base;
  DivisorClass step;
  Int value = 0;  // common value of the defining linear form
  std::optional<Int> k_min;
  std::optional<Int> k_max;

  DivisorClass at(Int k) const { return base + k * step; }
  bool in_range(Int k) const {
    return (!k_min || k >= *k_min) && (!k_max || k <= *k_max);
  }
  /// Parameter of a point on this family, if it lies on it.
  std::optional<Int> index_of(DivisorClass p) const {
    const DivisorClass diff = p - base;
    Int k = 0;
    if (step.a != 0) {
      if (diff.a % step.a != 0) return std::nullopt;
      k = diff.a / step.a;
    } else {
      if (diff.a != 0 || diff.b % step.b != 0) return std::nullopt;
      k = diff.b / step.b;
    }
    if (at(k) != p || !in_range(k)) return std::nullopt;
    return k;
  }
};

/// For each target value v, the progression of (a,b) with lhs(a,b) = v,
/// cut by side(a,b) <= side_bound to a half-line (or segment) in k.
/// The step is normalized to have positive first coordinate and the base to
/// 0 <= base.a < step.a.
inline std::vector<LinearFamily> family_solutions(LinearForm lhs, std::span<const Int> values,
                                                  LinearForm side, Int side_bound) {
  if (lhs.a == 0 && lhs.b == 0) throw precondition_error("family_solutions: zero form");
  std::vector<LinearFamily> out;
  const auto eg = extended_gcd(lhs.a, lhs.b);
  DivisorClass step{lhs.b / eg.g, -lhs.a / eg.g};
  if (step.a < 0 || (step.a == 0 && step.b < 0)) step = Int{-1} * step;
  for (Int v : values) {
    if (v % eg.g != 0) continue;
    LinearFamily fam;
    fam.value = v;
    fam.step = step;
    DivisorClass base{eg.x * (v / eg.g), eg.y * (v / eg.g)};
    if (step.a != 0) {
      base = base - floor_div(base.a, step.a) * step;
    } else {
      base = base - floor_div(base.b, step.b) * step;
    }
    fam.base = base;
    const Int at0 = side(base);
    const Int slope = side(step);
    if (slope > 0) {
      fam.k_max = floor_div(side_bound - at0, slope);
    } else if (slope < 0) {
      fam.k_min = ceil_div(side_bound - at0, slope);
    } else if (at0 > side_bound) {
      continue;
    }
    out.push_back(fam);
  }
  return out;
}

struct FamilyMax {
  std::optional<Int> max_square;  // nullopt: no admissible member (-infinity)
  std::optional<Int> attained_at;
};

/// Exact maximum of D^2 over the members of `fam`, skipping `excluded` points.
/// Requires the square to be concave along the family.
inline FamilyMax family_quadratic_max(const IntersectionLattice& l, const LinearFamily& fam,
                                      std::span<const DivisorClass> excluded = {}) {
  const IntQuadratic q{l.square(fam.step), 2 * l.pair(fam.base, fam.step), l.square(fam.base)};
  if (q.c2 >= 0)
    throw precondition_error("family_quadratic_max: square is not concave along the family");
  auto allowed = [&](Int k) {
    if (!fam.in_range(k)) return false;
    const DivisorClass p = fam.at(k);
    return std::find(excluded.begin(), excluded.end(), p) == excluded.end();
  };
  Int left = floor_div(-q.c1, 2 * q.c2);
  Int right = ceil_div(-q.c1, 2 * q.c2);
  if (fam.k_min) left = std::max(left, *fam.k_min), right = std::max(right, *fam.k_min);
  if (fam.k_max) left = std::min(left, *fam.k_max), right = std::min(right, *fam.k_max);

  FamilyMax best;
  auto consider = [&](Int k) {
    const Int v = q(k);
    if (!best.max_square || v > *best.max_square ||
        (v == *best.max_square && k < *best.attained_at)) {
      best.max_square = v;
      best.attained_at = k;
    }
  };
  const std::size_t budget = excluded.size() + 1;
  for (std::size_t i = 0; i <= budget && (!fam.k_min || left >= *fam.k_min); ++i, --left) {
    if (allowed(left)) {
      consider(left);
      break;
    }
  }
  for (std::size_t i = 0; i <= budget && (!fam.k_max || right <= *fam.k_max); ++i, ++right) {
    if (allowed(right)) {
      consider(right);
      break;
    }
  }
  return best;
}

}  // namespace fanocert
