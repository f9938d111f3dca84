#pragma once

#include <array>
#include <vector>

#include "gendouble/ring.hpp"

namespace gd {

/// One top-wedge bracket [f_first ^ c^(k) ^ u_rows]: `first` is 0 when no
/// basis vector of F leads, `pf_half` is k, `urows` are 1-based rows of U.
struct WedgeRecipe {
  bool leading_f;
  int pf_half;
  std::vector<int> urows;
  int sign;
};

/// The fixed sign ledger shared by the exterior and aci constructions.
struct SignLedger {
  std::array<WedgeRecipe, 4> generators;  // x1..x4
  std::array<WedgeRecipe, 4> phi_rows;    // w-row, then the three v-rows of d2
};

inline SignLedger sign_ledger(int n) {
  if (n % 2) {
    const int m = (n - 1) / 2;
    return {{{{false, m - 1, {1, 2, 3}, 1}, {false, m, {1}, 1}, {false, m, {2}, 1}, {false, m, {3}, 1}}},
            {{{true, m, {}, 1}, {true, m - 1, {2, 3}, -1}, {true, m - 1, {1, 3}, 1}, {true, m - 1, {1, 2}, -1}}}};
  }
  const int m = n / 2;
  return {{{{false, m, {}, 1}, {false, m - 1, {1, 2}, 1}, {false, m - 1, {1, 3}, -1}, {false, m - 1, {2, 3}, 1}}},
          {{{true, m - 2, {1, 2, 3}, -1}, {true, m - 1, {3}, 1}, {true, m - 1, {2}, 1}, {true, m - 1, {1}, 1}}}};
}

}  // namespace gd
