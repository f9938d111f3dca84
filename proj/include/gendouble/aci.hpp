#pragma once

#include <array>

#include "gendouble/multilinear.hpp"

namespace gd {

/// Generic almost complete intersection J_n = (x1..x4) with its resolution
///   0 -> R^n --d3--> R^(n+3) --d2--> R^4 --d1--> R.
struct AciResolution {
  RingPtr ring;
  std::array<Poly, 4> x;
  PolyMatrix d1;
  PolyMatrix d2;
  PolyMatrix d3;
  /// Sign applied to d2 so that its (1,1) entry has a positive leading coefficient.
  int normalization = 1;

  int n() const noexcept { return ring->n(); }
  Parity parity() const noexcept { return ring->parity(); }
};

/// x1..x4 from the sign ledger, each a sum of Pfaffians times minors of U.
std::array<Poly, 4> build_generators(const RingPtr& ring);

/// Throws ConsistencyFailure if d1*d2 or d2*d3 is nonzero.
AciResolution build_resolution(const RingPtr& ring);

/// Left 4 x n block of d2 (the matrix phi_n).
PolyMatrix theta0(const AciResolution& res);

/// w * x1 = a * x2 + b * x3 + c * x4 read from column j (1-based) of d2,
/// where w is the (1, j) entry.
struct ColonWitness {
  Poly w;
  std::array<Poly, 3> coeffs;
};
ColonWitness colon_relation(const AciResolution& res, int j);

}  // namespace gd
