#pragma once

#include <cstdint>
#include <initializer_list>
#include <unordered_map>
#include <vector>

#include "gendouble/matrix.hpp"

namespace gd {

/// Strictly increasing list of distinct 1-based indices.
class IndexSet {
 public:
  IndexSet() = default;
  IndexSet(std::initializer_list<int> idx) : IndexSet(std::vector<int>(idx)) {}
  explicit IndexSet(std::vector<int> idx);
  /// {lo, lo+1, ..., hi}; empty when hi < lo.
  static IndexSet range(int lo, int hi);

  const std::vector<int>& indices() const& noexcept { return idx_; }
  std::vector<int> indices() && { return std::move(idx_); }
  std::size_t size() const noexcept { return idx_.size(); }
  bool empty() const noexcept { return idx_.empty(); }
  bool contains(int i) const noexcept;
  int operator[](std::size_t k) const { return idx_.at(k); }
  /// Throws IndexOutOfRange unless every index lies in [1, bound].
  void check_bound(std::size_t bound) const;
  /// {1..bound} minus this set.
  IndexSet complement(std::size_t bound) const;

  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  std::vector<int> idx_;
};

/// n x n matrix C with c_ij above the diagonal and -c_ij below it.
PolyMatrix generic_skew(const RingPtr& ring);
/// 3 x n matrix U = (u_kl).
PolyMatrix generic_U(const RingPtr& ring);

/// Throws NotSkewSymmetric unless M = -M^t with zero diagonal.
void require_skew(const PolyMatrix& m);

/// Pfaffian of M with the indices in `omit` deleted; odd remaining size gives 0
/// and the empty Pfaffian is 1. Recursive expansion along the first retained row.
Poly pfaffian(const PolyMatrix& m, const IndexSet& omit = {});

/// Memoized Pfaffians of all principal submatrices of one skew matrix.
/// Subsets are keyed by bitmask, so the matrix may have at most 63 rows.
class PfaffianTable {
 public:
  explicit PfaffianTable(PolyMatrix m);
  const Poly& operator()(const IndexSet& omit);
  const PolyMatrix& matrix() const noexcept { return m_; }

 private:
  const Poly& retained(std::uint64_t mask);

  PolyMatrix m_;
  Poly zero_;
  std::unordered_map<std::uint64_t, Poly> memo_;
};

/// Determinant of the square submatrix on `rows` x `cols`. Sizes up to 4 use
/// cofactor expansion, larger ones fraction-free (Bareiss) elimination.
Poly minor(const PolyMatrix& m, const IndexSet& rows, const IndexSet& cols);
/// Numeric minors of the evaluated submatrix at each point.
std::vector<u64> minor_at_points(const PolyMatrix& m, const IndexSet& rows, const IndexSet& cols,
                                 const std::vector<std::vector<u64>>& points, const PrimeField& field);

}  // namespace gd
