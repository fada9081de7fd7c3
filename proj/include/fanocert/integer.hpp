#pragma once

// Exact integer helpers shared by every module. No floating point anywhere.

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>

namespace fanocert {

using Int = std::int64_t;

/// Raised when an operation is called outside its domain.
class precondition_error : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

constexpr Int floor_div(Int num, Int den) {
  if (den == 0) throw std::domain_error("floor_div: zero denominator");
  Int q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

constexpr Int ceil_div(Int num, Int den) { return -floor_div(-num, den); }

/// Largest r with r*r <= n, for n >= 0.
constexpr Int isqrt(Int n) {
  if (n < 0) throw std::domain_error("isqrt: negative argument");
  if (n < 2) return n;
  // Newton iteration on unsigned 128-bit to stay exact for the full range.
  unsigned __int128 x = static_cast<unsigned __int128>(n);
  unsigned __int128 r = x;
  unsigned __int128 y = (r + x / r) / 2;
  while (y < r) {
    r = y;
    y = (r + x / r) / 2;
  }
  return static_cast<Int>(r);
}

constexpr std::optional<Int> exact_sqrt(Int n) {
  if (n < 0) return std::nullopt;
  Int r = isqrt(n);
  if (r * r == n) return r;
  return std::nullopt;
}

constexpr bool is_perfect_square(Int n) { return exact_sqrt(n).has_value(); }

/// C(n, k); zero when k < 0 or k > n.
constexpr Int binomial(Int n, Int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int result = 1;
  for (Int i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

struct ExtendedGcd {
  Int g;
  Int x;
  Int y;
};

/// g = gcd(a,b) >= 0 with a*x + b*y = g.
constexpr ExtendedGcd extended_gcd(Int a, Int b) {
  Int old_r = a, r = b;
  Int old_s = 1, s = 0;
  Int old_t = 0, t = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

/// A univariate integer quadratic c2*k^2 + c1*k + c0.
struct IntQuadratic {
  Int c2 = 0;
  Int c1 = 0;
  Int c0 = 0;

  constexpr Int operator()(Int k) const { return (c2 * k + c1) * k + c0; }
};

struct IntRange {
  Int lo;
  Int hi;
  constexpr bool empty() const { return lo > hi; }
};

/// All integers k with q(k) >= bound, for q with negative leading coefficient.
/// The bracketing uses isqrt on the exact discriminant; the endpoints are then
/// tightened by exact evaluation.
inline IntRange concave_superlevel(const IntQuadratic& q, Int bound) {
  if (q.c2 >= 0) throw precondition_error("concave_superlevel: leading coefficient must be negative");
  // -c2*k^2 - c1*k - (c0 - bound) <= 0
  const Int a = -q.c2;
  const Int b = -q.c1;
  const Int c = -(q.c0 - bound);
  const Int disc = b * b - 4 * a * c;
  if (disc < 0) return {1, 0};
  const Int s = isqrt(disc);
  Int lo = floor_div(-b - s - 1, 2 * a);
  Int hi = ceil_div(-b + s + 1, 2 * a);
  while (lo <= hi && q(lo) < bound) ++lo;
  while (hi >= lo && q(hi) < bound) --hi;
  return {lo, hi};
}

}  // namespace fanocert
