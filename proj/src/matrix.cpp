#include "gendouble/matrix.hpp"

#include "gendouble/error.hpp"

namespace gd {

PolyMatrix::PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols, CoeffDomain domain, u64 modulus)
    : ring_(std::move(ring)),
      rows_(rows),
      cols_(cols),
      domain_(domain),
      modulus_(domain == CoeffDomain::Integer ? 0 : modulus) {
  entries_.assign(rows * cols, Poly(ring_, domain_, modulus_));
}

std::size_t PolyMatrix::index(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) {
    throw AlgebraError(ErrorKind::IndexOutOfRange,
                       "entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ") outside " +
                           std::to_string(rows_) + "x" + std::to_string(cols_));
  }
  return r * cols_ + c;
}

void PolyMatrix::set(std::size_t r, std::size_t c, Poly value) {
  if (!(value.ring() == *ring_)) throw AlgebraError(ErrorKind::RingMismatch, "matrix entry from another ring");
  if (value.domain() != domain_ || value.modulus() != modulus_) {
    throw AlgebraError(ErrorKind::DomainMismatch, "matrix entry from another coefficient domain");
  }
  entries_[index(r, c)] = std::move(value);
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(ring_, cols_, rows_, domain_, modulus_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.entries_[c * rows_ + r] = entries_[r * cols_ + c];
  t.source = target;
  t.target = source;
  if (!name.empty()) t.name = name + "^t";
  return t;
}

PolyMatrix PolyMatrix::operator-() const {
  PolyMatrix out = *this;
  for (auto& e : out.entries_) e = -e;
  return out;
}

PolyMatrix PolyMatrix::promote(RingPtr ring) const {
  PolyMatrix out(ring, rows_, cols_, domain_, modulus_);
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i].promote(ring);
  out.name = name;
  out.source = source;
  out.target = target;
  return out;
}

PolyMatrix PolyMatrix::reduce_mod(u64 p) const {
  PolyMatrix out(ring_, rows_, cols_, CoeffDomain::PrimeField, p);
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i].reduce_mod(p);
  out.name = name;
  out.source = source;
  out.target = target;
  return out;
}

PolyMatrix PolyMatrix::submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw AlgebraError(ErrorKind::IndexOutOfRange, "submatrix outside matrix");
  PolyMatrix out(ring_, nr, nc, domain_, modulus_);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) out.entries_[r * nc + c] = entries_[(r0 + r) * cols_ + c0 + c];
  return out;
}

bool PolyMatrix::is_zero() const noexcept {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

bool PolyMatrix::is_homogeneous() const {
  for (const auto& e : entries_)
    if (!e.is_homogeneous()) return false;
  return true;
}

int PolyMatrix::max_degree() const noexcept {
  int d = kZeroDegree;
  for (const auto& e : entries_) d = std::max(d, e.degree());
  return d;
}

PolyMatrix PolyMatrix::blocks(const std::vector<std::vector<PolyMatrix>>& grid) {
  if (grid.empty() || grid.front().empty()) throw AlgebraError(ErrorKind::ShapeMismatch, "empty block grid");
  const auto& first = grid.front().front();
  std::vector<std::size_t> widths;
  for (const auto& b : grid.front()) widths.push_back(b.cols());
  std::size_t total_rows = 0, total_cols = 0;
  for (auto w : widths) total_cols += w;
  for (const auto& row : grid) {
    if (row.size() != widths.size()) throw AlgebraError(ErrorKind::ShapeMismatch, "ragged block grid");
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j].cols() != widths[j] || row[j].rows() != row.front().rows()) {
        throw AlgebraError(ErrorKind::ShapeMismatch, "block sizes do not line up");
      }
      if (!(row[j].ring() == first.ring())) throw AlgebraError(ErrorKind::RingMismatch, "blocks from different rings");
    }
    total_rows += row.front().rows();
  }
  PolyMatrix out(first.ring_ptr(), total_rows, total_cols, first.domain(), first.modulus());
  std::size_t r0 = 0;
  for (const auto& row : grid) {
    std::size_t c0 = 0;
    for (const auto& b : row) {
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) out.set(r0 + r, c0 + c, b(r, c));
      c0 += b.cols();
    }
    r0 += row.front().rows();
  }
  return out;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.ring() == b.ring() && a.entries_ == b.entries_;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols() != b.rows()) {
    throw AlgebraError(ErrorKind::ShapeMismatch, "cannot multiply " + std::to_string(a.rows()) + "x" +
                                                     std::to_string(a.cols()) + " by " + std::to_string(b.rows()) +
                                                     "x" + std::to_string(b.cols()));
  }
  PolyMatrix out(a.ring_ptr(), a.rows(), b.cols(), a.domain(), a.modulus());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Poly acc(a.ring_ptr(), a.domain(), a.modulus());
      for (std::size_t k = 0; k < a.cols(); ++k) {
        if (a(i, k).is_zero() || b(k, j).is_zero()) continue;
        acc += a(i, k) * b(k, j);
      }
      out(i, j) = std::move(acc);
    }
  return out;
}

namespace {

PolyMatrix combine(const PolyMatrix& a, const PolyMatrix& b, bool subtract) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw AlgebraError(ErrorKind::ShapeMismatch, "matrix sum shapes");
  PolyMatrix out = a;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (subtract) {
        out(r, c) -= b(r, c);
      } else {
        out(r, c) += b(r, c);
      }
    }
  return out;
}

}  // namespace

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) { return combine(a, b, false); }
PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) { return combine(a, b, true); }

ModMatrix evaluate_matrix(const PolyMatrix& m, std::span<const u64> point, const PrimeField& field) {
  ModMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = evaluate(m(r, c), point, field);
  return out;
}

ModMatrix multiply(const ModMatrix& a, const ModMatrix& b, const PrimeField& field) {
  if (a.cols != b.rows) throw AlgebraError(ErrorKind::ShapeMismatch, "numeric product shapes");
  ModMatrix out(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      const u64 x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols; ++j) out(i, j) = field.add(out(i, j), field.mul(x, b(k, j)));
    }
  return out;
}

namespace {

// Row echelon in place; returns rank and accumulates the determinant factor.
std::size_t eliminate(ModMatrix& m, const PrimeField& field, u64* det) {
  std::size_t rank = 0;
  u64 d = 1;
  for (std::size_t c = 0; c < m.cols && rank < m.rows; ++c) {
    std::size_t piv = rank;
    while (piv < m.rows && m(piv, c) == 0) ++piv;
    if (piv == m.rows) {
      d = 0;
      continue;
    }
    if (piv != rank) {
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(piv, j), m(rank, j));
      d = field.neg(d);
    }
    const u64 pv = m(rank, c);
    d = field.mul(d, pv);
    const u64 inv = field.inv(pv);
    for (std::size_t r = rank + 1; r < m.rows; ++r) {
      if (m(r, c) == 0) continue;
      const u64 f = field.mul(m(r, c), inv);
      for (std::size_t j = c; j < m.cols; ++j) m(r, j) = field.sub(m(r, j), field.mul(f, m(rank, j)));
    }
    ++rank;
  }
  if (det) *det = rank == m.rows ? d : 0;
  return rank;
}

}  // namespace

std::size_t rank_mod(ModMatrix m, const PrimeField& field) { return eliminate(m, field, nullptr); }

u64 det_mod(ModMatrix m, const PrimeField& field) {
  if (m.rows != m.cols) throw AlgebraError(ErrorKind::ShapeMismatch, "determinant of a non-square matrix");
  if (m.rows == 0) return 1;
  u64 d = 0;
  eliminate(m, field, &d);
  return d;
}

}  // namespace gd
