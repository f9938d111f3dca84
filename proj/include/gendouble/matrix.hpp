#pragma once

#include <span>
#include <string>
#include <vector>

#include "gendouble/poly.hpp"

namespace gd {

/// Dense matrix of polynomials over one ring and coefficient domain.
/// Indices are 0-based; an empty label means "unnamed free module".
class PolyMatrix {
 public:
  PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols, CoeffDomain domain = CoeffDomain::Integer,
             u64 modulus = 0);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const RingPtr& ring_ptr() const noexcept { return ring_; }
  const GenericRing& ring() const noexcept { return *ring_; }
  CoeffDomain domain() const noexcept { return domain_; }
  u64 modulus() const noexcept { return modulus_; }

  const Poly& operator()(std::size_t r, std::size_t c) const { return entries_[index(r, c)]; }
  Poly& operator()(std::size_t r, std::size_t c) { return entries_[index(r, c)]; }
  /// Replaces an entry after checking its ring and domain.
  void set(std::size_t r, std::size_t c, Poly value);
  const std::vector<Poly>& entries() const noexcept { return entries_; }

  std::string name;
  std::string source;
  std::string target;

  PolyMatrix transpose() const;
  PolyMatrix operator-() const;
  PolyMatrix promote(RingPtr ring) const;
  PolyMatrix reduce_mod(u64 p) const;
  PolyMatrix submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  bool is_zero() const noexcept;
  bool is_homogeneous() const;
  /// Largest total degree among entries, kZeroDegree for the zero matrix.
  int max_degree() const noexcept;

  /// Block assembly; every row of blocks must agree on heights, every column on widths.
  static PolyMatrix blocks(const std::vector<std::vector<PolyMatrix>>& grid);
  static PolyMatrix hstack(const PolyMatrix& a, const PolyMatrix& b) { return blocks({{a, b}}); }
  static PolyMatrix vstack(const PolyMatrix& a, const PolyMatrix& b) { return blocks({{a}, {b}}); }

  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

 private:
  std::size_t index(std::size_t r, std::size_t c) const;

  RingPtr ring_;
  std::size_t rows_;
  std::size_t cols_;
  CoeffDomain domain_;
  u64 modulus_;
  std::vector<Poly> entries_;
};

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);

/// Dense matrix over Z/pZ.
struct ModMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<u64> a;

  ModMatrix() = default;
  ModMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}
  u64& operator()(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  u64 operator()(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
};

ModMatrix evaluate_matrix(const PolyMatrix& m, std::span<const u64> point, const PrimeField& field);
ModMatrix multiply(const ModMatrix& a, const ModMatrix& b, const PrimeField& field);
/// Gaussian elimination; the input is taken by value.
std::size_t rank_mod(ModMatrix m, const PrimeField& field);
u64 det_mod(ModMatrix m, const PrimeField& field);

}  // namespace gd
