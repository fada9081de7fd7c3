#pragma once

// Class of the image surface a*W(0,3) + b*W(1,2) in G(1,n) under a finite map
// of degree deg_alpha. Both Schubert classes have degree one against the
// Pluecker hyperplane class, so deg_alpha*(a+b) = c1^2, and the dual
// codimension-two class pairs to b, so deg_alpha*b = c2.

#include <vector>

#include "fanocert/integer.hpp"

namespace fanocert {

struct SchubertProblem {
  Int c2_value;   // degree of c2 of the rank-two bundle
  Int t_square;   // c1^2
};

struct SchubertSplit {
  Int deg_alpha;
  Int a;
  Int b;
  friend bool operator==(const SchubertSplit&, const SchubertSplit&) = default;
};

inline std::vector<SchubertSplit> surface_class_split(const SchubertProblem& p) {
  if (p.c2_value < 1 || p.t_square < 1)
    throw precondition_error("surface_class_split: need c2 >= 1 and c1^2 >= 1");
  std::vector<SchubertSplit> out;
  for (Int deg = 1; deg <= p.t_square; ++deg) {
    if (p.t_square % deg != 0 || p.c2_value % deg != 0) continue;
    const Int b = p.c2_value / deg;
    const Int a = p.t_square / deg - b;
    if (a < 0) continue;
    out.push_back({deg, a, b});
  }
  return out;
}

}  // namespace fanocert
