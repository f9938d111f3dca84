#pragma once

#include <vector>

#include "gendouble/multilinear.hpp"

namespace gd {

/// Permutation of {1..r+s} increasing on its first r and last s places.
struct Shuffle {
  std::vector<int> perm;
  int sign;
};

/// All C(r+s, r) shuffles, lexicographic in the first block. Guard r + s <= 12.
std::vector<Shuffle> shuffles(int r, int s);

/// Coefficient of e_1 ^ ... ^ e_n in f_first ^ c^(k) ^ u_rows, obtained by
/// comultiplying the top wedge with shuffles. `first` = 0 omits the f factor;
/// c^(k) contributes Pfaffians of the retained 2k indices, u_rows the
/// minors of U on the remaining ones.
Poly top_wedge_coefficient(PfaffianTable& pf, const PolyMatrix& u, int first, int k, const std::vector<int>& urows);

/// The 4 x n matrix whose transpose is H_n: row 1 holds the w's, rows 2-4 the
/// v's, each entry a shuffle sum. Signs follow the shared ledger and the
/// (1,1) entry is normalised to a positive leading coefficient.
PolyMatrix equivariant_phi(const RingPtr& ring);

}  // namespace gd
