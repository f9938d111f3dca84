#pragma once

#include <array>
#include <vector>

#include "gendouble/aci.hpp"

namespace gd {

/// Mapping cone of the generic doubling
///   0 -> R~ --d4--> R~^(n+4) --d3--> R~^(2n+6) --d2--> R~^(n+4) --d1--> R~.
struct DoublingCone {
  RingPtr ring;
  AciResolution base;  // promoted to the extended ring
  PolyMatrix psi0;     // 1 x n, entries g_j
  PolyMatrix psi1;     // 4 x (n+3)
  std::array<PolyMatrix, 4> delta;
  std::vector<Poly> ideal;  // x1..x4, g1..gn

  int n() const noexcept { return ring->n(); }
};

/// Row (g_1 .. g_n), g_j = sum_r alpha_r * theta0(r, j).
PolyMatrix build_psi0(const RingPtr& ring, const AciResolution& base);
/// The lifting psi1 with d1*psi1 = psi0*d3^t and d2*psi1^t + psi1*d2^t = 0.
PolyMatrix build_psi1(const RingPtr& ring, const AciResolution& base);

/// `base` may live over the base ring or already over `ring`. Every identity
/// is checked exactly unless `check` is false; a failure names the identity.
DoublingCone build_cone(const RingPtr& ring, const AciResolution& base, bool check = true);
DoublingCone build_cone(int n, bool check = true);

}  // namespace gd
