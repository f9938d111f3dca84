#include "gendouble/aci.hpp"

#include <algorithm>

#include "gendouble/error.hpp"
#include "gendouble/ledger.hpp"

namespace gd {

namespace {

int inversion_sign(const std::vector<int>& seq) {
  int inv = 0;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      if (seq[i] > seq[j]) ++inv;
  return inv % 2 ? -1 : 1;
}

void subsets(const std::vector<int>& from, std::size_t r, std::size_t start, std::vector<int>& cur,
             std::vector<std::vector<int>>& out) {
  if (cur.size() == r) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i + (r - cur.size()) <= from.size(); ++i) {
    cur.push_back(from[i]);
    subsets(from, r, i + 1, cur, out);
    cur.pop_back();
  }
}

// Entry formula: sum over index sets L of +-minor(U; rows, L) * Pf(first^, L^),
// the sign being the parity of (first, retained, L).
Poly entry(PfaffianTable& pf, const PolyMatrix& u, int first, const WedgeRecipe& rec) {
  const int n = static_cast<int>(u.cols());
  std::vector<int> rest;
  for (int i = 1; i <= n; ++i)
    if (i != first) rest.push_back(i);
  std::vector<std::vector<int>> ls;
  std::vector<int> cur;
  subsets(rest, rec.urows.size(), 0, cur, ls);
  Poly acc(u.ring_ptr());
  for (const auto& l : ls) {
    std::vector<int> omit = l;
    if (first) omit.push_back(first);
    std::sort(omit.begin(), omit.end());
    const Poly& pff = pf(IndexSet(omit));
    if (pff.is_zero()) continue;
    std::vector<int> seq;
    if (first) seq.push_back(first);
    for (int i : rest)
      if (!std::binary_search(l.begin(), l.end(), i)) seq.push_back(i);
    seq.insert(seq.end(), l.begin(), l.end());
    Poly term = l.empty() ? pff : minor(u, IndexSet(rec.urows), IndexSet(l)) * pff;
    if (inversion_sign(seq) * rec.sign > 0) {
      acc += term;
    } else {
      acc -= term;
    }
  }
  return acc;
}

void check_ring(const RingPtr& ring) {
  if (ring->extended()) throw AlgebraError(ErrorKind::InvalidArgument, "resolution is built over the base ring");
  if (ring->n() < 3) throw AlgebraError(ErrorKind::InvalidArgument, "n must be at least 3");
  if (ring->n() > kMaxN) throw AlgebraError(ErrorKind::GuardExceeded, "n above the construction guard");
}

}  // namespace

std::array<Poly, 4> build_generators(const RingPtr& ring) {
  check_ring(ring);
  PfaffianTable pf(generic_skew(ring));
  const PolyMatrix u = generic_U(ring);
  const SignLedger ledger = sign_ledger(ring->n());
  std::array<Poly, 4> x{Poly(ring), Poly(ring), Poly(ring), Poly(ring)};
  for (int i = 0; i < 4; ++i) x[i] = entry(pf, u, 0, ledger.generators[i]);
  return x;
}

AciResolution build_resolution(const RingPtr& ring) {
  check_ring(ring);
  const int n = ring->n();
  const PolyMatrix c = generic_skew(ring);
  const PolyMatrix u = generic_U(ring);
  PfaffianTable pf(c);
  const SignLedger ledger = sign_ledger(n);

  AciResolution res{ring, build_generators(ring), PolyMatrix(ring, 1, 4), PolyMatrix(ring, 4, n + 3),
                    PolyMatrix::vstack(c, u), 1};
  const auto& x = res.x;
  for (int i = 0; i < 4; ++i) res.d1(0, i) = x[i];
  for (int row = 0; row < 4; ++row)
    for (int j = 1; j <= n; ++j) res.d2(row, j - 1) = entry(pf, u, j, ledger.phi_rows[row]);

  // Right block: the x-columns of d2.
  auto put = [&](int r, int col, const Poly& p) { res.d2(r, n + col) = p; };
  if (ring->parity() == Parity::Odd) {
    put(1, 1, x[3]);
    put(1, 2, -x[2]);
    put(2, 0, -x[3]);
    put(2, 2, x[1]);
    put(3, 0, x[2]);
    put(3, 1, -x[1]);
  } else {
    put(0, 0, x[3]);
    put(0, 1, x[2]);
    put(0, 2, x[1]);
    put(1, 2, -x[0]);
    put(2, 1, -x[0]);
    put(3, 0, -x[0]);
  }
  if (res.d2(0, 0).leading().coeff < 0) {
    res.d2 = -res.d2;
    res.normalization = -1;
  }

  res.d1.name = "d1";
  res.d1.source = "R^4";
  res.d1.target = "R";
  res.d2.name = "d2";
  res.d2.source = "F*+G*";
  res.d2.target = "R^4";
  res.d3.name = "d3";
  res.d3.source = "F";
  res.d3.target = "F*+G*";

  if (!(res.d1 * res.d2).is_zero()) throw AlgebraError(ErrorKind::ConsistencyFailure, "d1*d2 != 0");
  if (!(res.d2 * res.d3).is_zero()) throw AlgebraError(ErrorKind::ConsistencyFailure, "d2*d3 != 0");
  return res;
}

PolyMatrix theta0(const AciResolution& res) {
  PolyMatrix t = res.d2.submatrix(0, 0, 4, res.n());
  t.name = "theta0";
  t.source = "R^n";
  t.target = "R^4";
  return t;
}

ColonWitness colon_relation(const AciResolution& res, int j) {
  if (j < 1 || j > res.n()) throw AlgebraError(ErrorKind::IndexOutOfRange, "colon relation column");
  const auto& d2 = res.d2;
  ColonWitness w{d2(0, j - 1), {-d2(1, j - 1), -d2(2, j - 1), -d2(3, j - 1)}};
  Poly lhs = w.w * res.x[0];
  Poly rhs = w.coeffs[0] * res.x[1] + w.coeffs[1] * res.x[2] + w.coeffs[2] * res.x[3];
  if (!(lhs == rhs)) {
    throw AlgebraError(ErrorKind::ConsistencyFailure, "colon relation fails in column " + std::to_string(j));
  }
  return w;
}

}  // namespace gd
