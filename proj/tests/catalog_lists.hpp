#pragma once

// The (d, g) lists of each family, typed in independently of the embedded table.

#include <utility>
#include <vector>

#include "fanocert/lattice.hpp"

namespace testdata {

using Pair = std::pair<fanocert::Int, fanocert::Int>;

inline const std::vector<Pair> kQuadric{{9, 2},  {10, 5}, {11, 8}, {12, 11}, {13, 14}, {9, 3}, {8, 0},
                                        {10, 6}, {8, 1},  {9, 4},  {8, 2},   {8, 3},   {7, 1}};
inline const std::vector<Pair> kV4{{7, 0}, {8, 2}, {9, 4}, {10, 6}, {11, 8}, {7, 1}, {8, 3}, {7, 2}};
inline const std::vector<Pair> kV5{{9, 0},  {10, 2}, {11, 4}, {12, 6}, {13, 8}, {14, 10}, {9, 1},
                                   {10, 3}, {12, 7}, {9, 2},  {8, 0},  {9, 3},  {8, 1},   {7, 0}};
inline const std::vector<Pair> kX14{{5, 0}, {6, 1}, {7, 2}, {4, 0}};

inline const std::vector<Pair>& pairs(fanocert::FamilyId id) {
  switch (id) {
    case fanocert::FamilyId::Quadric: return kQuadric;
    case fanocert::FamilyId::V4: return kV4;
    case fanocert::FamilyId::V5: return kV5;
    case fanocert::FamilyId::X14: return kX14;
  }
  return kQuadric;
}

}  // namespace testdata
