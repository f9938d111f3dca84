#include "gendouble/multilinear.hpp"

#include <algorithm>
#include <bit>

#include "gendouble/error.hpp"

namespace gd {

IndexSet::IndexSet(std::vector<int> idx) : idx_(std::move(idx)) {
  for (std::size_t k = 0; k < idx_.size(); ++k) {
    if (idx_[k] < 1) throw AlgebraError(ErrorKind::IndexOutOfRange, "indices are 1-based");
    if (k > 0 && idx_[k] <= idx_[k - 1]) {
      throw AlgebraError(ErrorKind::InvalidArgument, "index set must be strictly increasing");
    }
  }
}

IndexSet IndexSet::range(int lo, int hi) {
  std::vector<int> v;
  for (int i = lo; i <= hi; ++i) v.push_back(i);
  return IndexSet(std::move(v));
}

bool IndexSet::contains(int i) const noexcept { return std::binary_search(idx_.begin(), idx_.end(), i); }

void IndexSet::check_bound(std::size_t bound) const {
  if (!idx_.empty() && static_cast<std::size_t>(idx_.back()) > bound) {
    throw AlgebraError(ErrorKind::IndexOutOfRange,
                       "index " + std::to_string(idx_.back()) + " exceeds " + std::to_string(bound));
  }
}

IndexSet IndexSet::complement(std::size_t bound) const {
  std::vector<int> v;
  for (int i = 1; i <= static_cast<int>(bound); ++i)
    if (!contains(i)) v.push_back(i);
  return IndexSet(std::move(v));
}

PolyMatrix generic_skew(const RingPtr& ring) {
  const int n = ring->n();
  PolyMatrix m(ring, n, n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      auto c = Poly::variable(ring, ring->c(i, j));
      m(j - 1, i - 1) = -c;
      m(i - 1, j - 1) = std::move(c);
    }
  m.name = "C";
  m.source = "F";
  m.target = "F*";
  return m;
}

PolyMatrix generic_U(const RingPtr& ring) {
  const int n = ring->n();
  PolyMatrix m(ring, 3, n);
  for (int k = 1; k <= 3; ++k)
    for (int l = 1; l <= n; ++l) m(k - 1, l - 1) = Poly::variable(ring, ring->u(k, l));
  m.name = "U";
  m.source = "F";
  m.target = "G*";
  return m;
}

void require_skew(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw AlgebraError(ErrorKind::NotSkewSymmetric, "matrix is not square");
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (!m(i, i).is_zero()) throw AlgebraError(ErrorKind::NotSkewSymmetric, "nonzero diagonal entry");
    for (std::size_t j = i + 1; j < m.cols(); ++j) {
      if (!(m(j, i) == -m(i, j))) throw AlgebraError(ErrorKind::NotSkewSymmetric, "entries are not antisymmetric");
    }
  }
}

PfaffianTable::PfaffianTable(PolyMatrix m) : m_(std::move(m)), zero_(m_.ring_ptr(), m_.domain(), m_.modulus()) {
  require_skew(m_);
  if (m_.rows() > 63) throw AlgebraError(ErrorKind::GuardExceeded, "Pfaffian table limited to 63 rows");
}

const Poly& PfaffianTable::operator()(const IndexSet& omit) {
  omit.check_bound(m_.rows());
  std::uint64_t mask = m_.rows() == 64 ? ~0ULL : (1ULL << m_.rows()) - 1;
  for (int i : omit.indices()) mask &= ~(1ULL << (i - 1));
  return retained(mask);
}

const Poly& PfaffianTable::retained(std::uint64_t mask) {
  if (std::popcount(mask) % 2) return zero_;
  if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
  Poly acc(m_.ring_ptr(), m_.domain(), m_.modulus());
  if (mask == 0) {
    acc = Poly::constant(m_.ring_ptr(), 1);
    if (m_.domain() == CoeffDomain::PrimeField) acc = acc.reduce_mod(m_.modulus());
  } else {
    const int first = std::countr_zero(mask);
    const std::uint64_t rest = mask & ~(1ULL << first);
    // Sign (-1)^(k) for the partner at retained position k+1, k = 1, 2, ...
    int position = 0;
    for (std::uint64_t r = rest; r; r &= r - 1) {
      const int j = std::countr_zero(r);
      ++position;
      const Poly& a = m_(first, j);
      if (a.is_zero()) continue;
      const Poly& sub = retained(rest & ~(1ULL << j));
      if (sub.is_zero()) continue;
      if (position % 2) {
        acc += a * sub;
      } else {
        acc -= a * sub;
      }
    }
  }
  return memo_.emplace(mask, std::move(acc)).first->second;
}

Poly pfaffian(const PolyMatrix& m, const IndexSet& omit) {
  PfaffianTable t(m);
  return t(omit);
}

namespace {

Poly cofactor(const std::vector<const Poly*>& a, std::size_t n, std::vector<std::size_t>& cols, std::size_t row) {
  const Poly& any = *a.front();
  if (row == n) return Poly::constant(any.ring_ptr(), 1);
  Poly acc(any.ring_ptr(), any.domain(), any.modulus());
  int sign = 1;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const std::size_t c = cols[k];
    const Poly& e = *a[row * n + c];
    if (!e.is_zero()) {
      cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(k));
      Poly sub = cofactor(a, n, cols, row + 1);
      cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(k), c);
      if (!sub.is_zero()) {
        if (sign > 0) {
          acc += e * sub;
        } else {
          acc -= e * sub;
        }
      }
    }
    sign = -sign;
  }
  return acc;
}

Poly bareiss(std::vector<Poly> a, std::size_t n) {
  const Poly one_template = a.front();
  Poly prev = Poly::constant(one_template.ring_ptr(), 1);
  if (one_template.domain() == CoeffDomain::PrimeField) prev = prev.reduce_mod(one_template.modulus());
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k].is_zero()) {
      std::size_t piv = k + 1;
      while (piv < n && a[piv * n + k].is_zero()) ++piv;
      if (piv == n) return Poly(one_template.ring_ptr(), one_template.domain(), one_template.modulus());
      for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[piv * n + j]);
      negate = !negate;
    }
    const Poly& p = a[k * n + k];
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Poly v = p * a[i * n + j];
        if (!a[i * n + k].is_zero() && !a[k * n + j].is_zero()) v -= a[i * n + k] * a[k * n + j];
        a[i * n + j] = exact_divide(v, prev);
      }
    prev = a[k * n + k];
  }
  Poly det = a[n * n - 1];
  return negate ? -det : det;
}

void check_selection(const PolyMatrix& m, const IndexSet& rows, const IndexSet& cols) {
  if (rows.size() != cols.size() || rows.empty()) {
    throw AlgebraError(ErrorKind::ShapeMismatch, "minor needs equally many rows and columns");
  }
  rows.check_bound(m.rows());
  cols.check_bound(m.cols());
}

}  // namespace

Poly minor(const PolyMatrix& m, const IndexSet& rows, const IndexSet& cols) {
  check_selection(m, rows, cols);
  const std::size_t n = rows.size();
  if (n <= 4) {
    std::vector<const Poly*> a;
    for (int r : rows.indices())
      for (int c : cols.indices()) a.push_back(&m(r - 1, c - 1));
    std::vector<std::size_t> idx(n);
    for (std::size_t k = 0; k < n; ++k) idx[k] = k;
    return cofactor(a, n, idx, 0);
  }
  std::vector<Poly> a;
  for (int r : rows.indices())
    for (int c : cols.indices()) a.push_back(m(r - 1, c - 1));
  return bareiss(std::move(a), n);
}

std::vector<u64> minor_at_points(const PolyMatrix& m, const IndexSet& rows, const IndexSet& cols,
                                 const std::vector<std::vector<u64>>& points, const PrimeField& field) {
  check_selection(m, rows, cols);
  std::vector<u64> out;
  out.reserve(points.size());
  for (const auto& pt : points) {
    ModMatrix a(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j) a(i, j) = evaluate(m(rows[i] - 1, cols[j] - 1), pt, field);
    out.push_back(det_mod(std::move(a), field));
  }
  return out;
}

}  // namespace gd
