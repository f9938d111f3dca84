#include "gendouble/doubling.hpp"

#include "gendouble/error.hpp"

namespace gd {

namespace {

AciResolution promoted(const RingPtr& ring, const AciResolution& base) {
  if (!ring->extended()) throw AlgebraError(ErrorKind::InvalidArgument, "doubling needs the extended ring");
  if (!ring->compatible(*base.ring)) throw AlgebraError(ErrorKind::RingMismatch, "base built for another n");
  if (base.ring->extended()) return base;
  AciResolution out{ring,
                    {base.x[0].promote(ring), base.x[1].promote(ring), base.x[2].promote(ring),
                     base.x[3].promote(ring)},
                    base.d1.promote(ring),
                    base.d2.promote(ring),
                    base.d3.promote(ring),
                    base.normalization};
  return out;
}

void require_zero(const PolyMatrix& m, const char* what) {
  if (!m.is_zero()) throw AlgebraError(ErrorKind::ConsistencyFailure, std::string(what) + " is not zero");
}

}  // namespace

PolyMatrix build_psi0(const RingPtr& ring, const AciResolution& base_in) {
  const AciResolution base = promoted(ring, base_in);
  const int n = ring->n();
  PolyMatrix psi0(ring, 1, n);
  for (int j = 0; j < n; ++j) {
    Poly g(ring);
    for (int r = 0; r < 4; ++r) g += Poly::variable(ring, ring->alpha(r)) * base.d2(r, j);
    psi0(0, j) = std::move(g);
  }
  psi0.name = "psi0";
  psi0.source = "R~^n";
  psi0.target = "R~";
  return psi0;
}

PolyMatrix build_psi1(const RingPtr& ring, const AciResolution& base_in) {
  const AciResolution base = promoted(ring, base_in);
  const int n = ring->n();
  auto a = [&](int i) { return Poly::variable(ring, ring->alpha(i)); };
  auto u = [&](int k, int l) { return Poly::variable(ring, ring->u(k, l)); };
  PolyMatrix psi1(ring, 4, n + 3);
  if (ring->parity() == Parity::Odd) {
    // A = (-a1, -a2, -a3)^t appended to U; rows 2-4 are 2x2 minors of [U | A].
    const std::array<Poly, 3> col_a{-a(1), -a(2), -a(3)};
    const std::array<std::pair<int, int>, 3> pairs{{{2, 3}, {1, 3}, {1, 2}}};
    const std::array<int, 3> sign{1, -1, 1};
    for (int c = 0; c < 3; ++c) psi1(0, n + c) = col_a[c];
    for (int r = 0; r < 3; ++r) {
      const auto [p, q] = pairs[r];
      for (int j = 1; j <= n; ++j) {
        Poly m = u(p, j) * col_a[q - 1] - u(q, j) * col_a[p - 1];
        psi1(r + 1, j - 1) = sign[r] > 0 ? std::move(m) : -m;
      }
      psi1(r + 1, n + r) = a(0);
    }
  } else {
    for (int i = 1; i <= n; ++i) {
      psi1(0, i - 1) = -(u(3, i) * a(1) + u(2, i) * a(2) + u(1, i) * a(3));
      psi1(1, i - 1) = u(3, i) * a(0);
      psi1(2, i - 1) = u(2, i) * a(0);
      psi1(3, i - 1) = u(1, i) * a(0);
    }
    psi1(1, n) = a(2);
    psi1(2, n) = -a(1);
    psi1(1, n + 1) = -a(3);
    psi1(3, n + 1) = a(1);
    psi1(2, n + 2) = a(3);
    psi1(3, n + 2) = -a(2);
  }
  if (base.normalization < 0) psi1 = -psi1;
  psi1.name = "psi1";
  psi1.source = "F~+G~";
  psi1.target = "R~^4";
  return psi1;
}

DoublingCone build_cone(const RingPtr& ring, const AciResolution& base_in, bool check) {
  AciResolution base = promoted(ring, base_in);
  const int n = ring->n();
  PolyMatrix psi0 = build_psi0(ring, base);
  PolyMatrix psi1 = build_psi1(ring, base);
  const PolyMatrix d3t = base.d3.transpose();
  const PolyMatrix d2t = base.d2.transpose();

  PolyMatrix delta1 = PolyMatrix::hstack(base.d1, psi0);
  PolyMatrix delta2 = PolyMatrix::blocks({{base.d2, psi1}, {PolyMatrix(ring, n, n + 3), -d3t}});
  PolyMatrix delta3 = PolyMatrix::blocks({{base.d3, -psi1.transpose()}, {PolyMatrix(ring, n + 3, n), -d2t}});
  PolyMatrix delta4 = PolyMatrix::vstack(-psi0.transpose(), -base.d1.transpose());
  delta1.name = "delta1";
  delta2.name = "delta2";
  delta3.name = "delta3";
  delta4.name = "delta4";

  if (check) {
    require_zero(base.d1 * base.d2, "d1*d2");
    require_zero(base.d2 * base.d3, "d2*d3");
    require_zero(base.d1 * psi1 - psi0 * d3t, "d1*psi1 - psi0*d3^t");
    require_zero(base.d2 * psi1.transpose() + psi1 * d2t, "d2*psi1^t + psi1*d2^t");
    require_zero(delta1 * delta2, "delta1*delta2");
    require_zero(delta2 * delta3, "delta2*delta3");
    require_zero(delta3 * delta4, "delta3*delta4");
  }

  std::vector<Poly> ideal(base.x.begin(), base.x.end());
  for (int j = 0; j < n; ++j) ideal.push_back(psi0(0, j));
  return DoublingCone{ring,
                      std::move(base),
                      std::move(psi0),
                      std::move(psi1),
                      {std::move(delta1), std::move(delta2), std::move(delta3), std::move(delta4)},
                      std::move(ideal)};
}

DoublingCone build_cone(int n, bool check) {
  return build_cone(make_ring(n, true), build_resolution(make_ring(n, false)), check);
}

}  // namespace gd
