#pragma once

// Rank-2 even intersection lattices of K3 Picard groups.
//
// A lattice has ordered basis (polarization, curve class); a DivisorClass
// (a, b) stands for a*polarization + b*curve. The polarization degree of a
// class is its pairing with (1, 0).

#include <array>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "fanocert/integer.hpp"

namespace fanocert {

enum class FamilyId { Quadric, V4, V5, X14 };

/// One ambient Fano threefold family and the constants the checks need.
struct FamilySpec {
  FamilyId id;
  std::string_view name;      // lowercase CLI/JSON spelling
  Int h_square;               // polarization square on the K3 section
  Int index_multiplier;       // s with -K_Y = s*H
  Int cutting_bound;          // max degree of S cut by a hypersurface through C
  Int anticanonical_cube_base;// (-K_Y)^3
  Int ambient_dimension;      // n with S in P^n
  Int cutting_degree;         // degree of hypersurfaces through C used for the cut
  bool derived_constants;     // cutting/secancy constants extended beyond the original argument
};

inline constexpr std::array<FamilySpec, 4> kFamilies{{
    {FamilyId::Quadric, "quadric", 6, 3, 18, 54, 4, 3, false},
    {FamilyId::V4, "v4", 8, 2, 16, 32, 5, 2, false},
    {FamilyId::V5, "v5", 10, 2, 20, 40, 6, 2, true},
    {FamilyId::X14, "x14", 14, 1, 28, 14, 8, 2, true},
}};

inline constexpr const FamilySpec& family(FamilyId id) {
  return kFamilies[static_cast<std::size_t>(id)];
}

inline const FamilySpec* find_family(std::string_view name) {
  for (const auto& f : kFamilies)
    if (f.name == name) return &f;
  return nullptr;
}

struct DivisorClass {
  Int a = 0;
  Int b = 0;

  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
  friend auto operator<=>(const DivisorClass&, const DivisorClass&) = default;

  friend DivisorClass operator+(DivisorClass x, DivisorClass y) { return {x.a + y.a, x.b + y.b}; }
  friend DivisorClass operator-(DivisorClass x, DivisorClass y) { return {x.a - y.a, x.b - y.b}; }
  friend DivisorClass operator*(Int k, DivisorClass x) { return {k * x.a, k * x.b}; }

  friend std::ostream& operator<<(std::ostream& os, const DivisorClass& c) {
    return os << '(' << c.a << ',' << c.b << ')';
  }
};

inline constexpr DivisorClass kPolarization{1, 0};
inline constexpr DivisorClass kCurve{0, 1};

class IntersectionLattice {
public:
  /// Throws precondition_error unless the Gram matrix is even with negative determinant.
  IntersectionLattice(Int h_square, Int h_dot_c, Int c_square,
                      std::array<std::string, 2> basis_names = {"H_S", "C"})
      : gram_{{{h_square, h_dot_c}, {h_dot_c, c_square}}}, names_(std::move(basis_names)) {
    if (h_square % 2 != 0 || c_square % 2 != 0)
      throw precondition_error("lattice: diagonal Gram entries must be even");
    if (determinant() >= 0)
      throw precondition_error("lattice: determinant must be negative (signature (1,1))");
  }

  Int h_square() const { return gram_[0][0]; }
  Int h_dot_c() const { return gram_[0][1]; }
  Int c_square() const { return gram_[1][1]; }
  Int determinant() const { return gram_[0][0] * gram_[1][1] - gram_[0][1] * gram_[1][0]; }
  const std::array<std::array<Int, 2>, 2>& gram() const { return gram_; }
  const std::array<std::string, 2>& basis_names() const { return names_; }

  Int pair(DivisorClass x, DivisorClass y) const {
    return x.a * (gram_[0][0] * y.a + gram_[0][1] * y.b) +
           x.b * (gram_[1][0] * y.a + gram_[1][1] * y.b);
  }
  Int square(DivisorClass x) const { return pair(x, x); }
  /// Degree with respect to the polarization.
  Int degree(DivisorClass x) const { return pair(x, kPolarization); }

  friend bool operator==(const IntersectionLattice& l, const IntersectionLattice& r) {
    return l.gram_ == r.gram_;
  }

private:
  std::array<std::array<Int, 2>, 2> gram_;
  std::array<std::string, 2> names_;
};

/// Gram [[h^2, d], [d, 2g-2]] for a smooth curve of degree d and genus g on the K3 section.
inline IntersectionLattice make_family_lattice(const FamilySpec& fam, Int d, Int g) {
  if (d < 1 || g < 0) throw precondition_error("make_family_lattice: need d >= 1 and g >= 0");
  std::array<std::string, 2> names = fam.id == FamilyId::V5 || fam.id == FamilyId::X14
                                         ? std::array<std::string, 2>{"T", "C"}
                                         : std::array<std::string, 2>{"H_S", "C"};
  return IntersectionLattice(fam.h_square, d, 2 * g - 2, std::move(names));
}

inline Int pair(const IntersectionLattice& lattice, DivisorClass x, DivisorClass y) {
  return lattice.pair(x, y);
}

struct SquareAndGenus {
  Int square;
  Int arithmetic_genus;
  friend bool operator==(const SquareAndGenus&, const SquareAndGenus&) = default;
};

/// Adjunction on a K3 surface: p_a = D^2/2 + 1.
inline SquareAndGenus square_and_genus(const IntersectionLattice& lattice, DivisorClass d) {
  const Int sq = lattice.square(d);
  return {sq, sq / 2 + 1};
}

/// The class s*H - C restricting -K_X to the K3 section.
inline DivisorClass anticanonical_class(const FamilySpec& fam) {
  return {fam.index_multiplier, -1};
}

}  // namespace fanocert
