#include "gendouble/exterior.hpp"

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

void choose(int lo, int hi, int r, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == r) {
    out.push_back(cur);
    return;
  }
  for (int i = lo; i <= hi - (r - static_cast<int>(cur.size())) + 1; ++i) {
    cur.push_back(i);
    choose(i + 1, hi, r, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Shuffle> shuffles(int r, int s) {
  if (r < 0 || s < 0) throw AlgebraError(ErrorKind::InvalidArgument, "negative shuffle block");
  if (r + s > 12) throw AlgebraError(ErrorKind::GuardExceeded, "shuffles limited to r + s <= 12");
  std::vector<std::vector<int>> firsts;
  std::vector<int> cur;
  choose(1, r + s, r, cur, firsts);
  std::vector<Shuffle> out;
  out.reserve(firsts.size());
  for (const auto& f : firsts) {
    Shuffle sh;
    sh.perm = f;
    for (int i = 1; i <= r + s; ++i)
      if (!std::binary_search(f.begin(), f.end(), i)) sh.perm.push_back(i);
    sh.sign = inversion_sign(sh.perm);
    out.push_back(std::move(sh));
  }
  return out;
}

Poly top_wedge_coefficient(PfaffianTable& pf, const PolyMatrix& u, int first, int k, const std::vector<int>& urows) {
  const int n = static_cast<int>(pf.matrix().rows());
  const int r = static_cast<int>(urows.size());
  if ((first ? 1 : 0) + 2 * k + r != n || k < 0) {
    throw AlgebraError(ErrorKind::ShapeMismatch, "wedge degrees do not add up to the top degree");
  }
  Poly acc(pf.matrix().ring_ptr());
  // First comultiplication step splits off f_first.
  std::vector<int> rest;
  int outer = 1;
  if (first) {
    for (const auto& sh : shuffles(1, n - 1)) {
      if (sh.perm.front() != first) continue;
      outer = sh.sign;
      rest.assign(sh.perm.begin() + 1, sh.perm.end());
    }
  } else {
    for (int i = 1; i <= n; ++i) rest.push_back(i);
  }
  const IndexSet urow_set(urows);
  for (const auto& sh : shuffles(2 * k, r)) {
    std::vector<int> keep, cols;
    for (int p = 0; p < 2 * k; ++p) keep.push_back(rest[sh.perm[p] - 1]);
    for (int p = 2 * k; p < 2 * k + r; ++p) cols.push_back(rest[sh.perm[p] - 1]);
    const Poly& pfaff = pf(IndexSet(keep).complement(n));
    if (pfaff.is_zero()) continue;
    Poly term = r ? minor(u, urow_set, IndexSet(cols)) * pfaff : pfaff;
    if (outer * sh.sign > 0) {
      acc += term;
    } else {
      acc -= term;
    }
  }
  return acc;
}

PolyMatrix equivariant_phi(const RingPtr& ring) {
  if (ring->extended()) throw AlgebraError(ErrorKind::InvalidArgument, "equivariant_phi expects the base ring");
  const int n = ring->n();
  if (n < 3) throw AlgebraError(ErrorKind::InvalidArgument, "n must be at least 3");
  PfaffianTable pf(generic_skew(ring));
  const PolyMatrix u = generic_U(ring);
  const SignLedger ledger = sign_ledger(n);
  PolyMatrix phi(ring, 4, n);
  for (int row = 0; row < 4; ++row) {
    const auto& rec = ledger.phi_rows[row];
    for (int j = 1; j <= n; ++j) {
      Poly e = top_wedge_coefficient(pf, u, j, rec.pf_half, rec.urows);
      phi(row, j - 1) = rec.sign > 0 ? std::move(e) : -e;
    }
  }
  if (phi(0, 0).leading().coeff < 0) phi = -phi;
  phi.name = "H^t";
  phi.source = "F*";
  phi.target = "R^4";
  return phi;
}

}  // namespace gd
