#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <cstring>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gd {

enum class Parity { Odd, Even };

const char* to_string(Parity p);

/// Largest supported n for constructions; 9 keeps every ring under kMaxVars.
inline constexpr int kMaxN = 9;
/// n(n-1)/2 + 3n + 4 for n = 9 is 67.
inline constexpr std::size_t kMaxVars = 68;

/// Descriptor of R = K[c_ij, u_kl] (or R~ = R[a0..a3] when extended).
///
/// Variable order, smallest first: c12 < c13 < ... < c(n-1)n < u11 < ... < u3n
/// < a0 < a1 < a2 < a3. Entries of C and U have weight 1; the alpha weights
/// depend on the parity so that the doubling ideal is homogeneous:
/// odd n gives deg a0 = 2, deg ai = 1, even n gives deg a0 = 1, deg ai = 2.
class GenericRing {
 public:
  GenericRing(int n, bool extended);

  int n() const noexcept { return n_; }
  Parity parity() const noexcept { return n_ % 2 ? Parity::Odd : Parity::Even; }
  bool extended() const noexcept { return extended_; }
  std::size_t num_vars() const noexcept { return names_.size(); }

  /// 1-based indices; c(i, j) == c(j, i) and i != j.
  std::size_t c(int i, int j) const;
  std::size_t u(int k, int l) const;
  std::size_t alpha(int i) const;

  const std::string& name(std::size_t var) const { return names_.at(var); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  int weight(std::size_t var) const { return weights_.at(var); }
  std::optional<std::size_t> find(std::string_view name) const;

  /// Same n; same variables as far as they exist in both.
  bool compatible(const GenericRing& other) const noexcept { return n_ == other.n_; }
  bool operator==(const GenericRing& other) const noexcept {
    return n_ == other.n_ && extended_ == other.extended_;
  }

 private:
  int n_;
  bool extended_;
  std::vector<std::string> names_;
  std::vector<int> weights_;
};

using RingPtr = std::shared_ptr<const GenericRing>;

RingPtr make_ring(int n, bool extended = false);

/// Exponent vector stored in reverse variable order so that a bytewise
/// comparison is lexicographic with the largest variable most significant.
class Monomial {
 public:
  Monomial() { rev_.fill(0); }

  std::uint8_t exponent(std::size_t var) const { return rev_[kMaxVars - 1 - var]; }
  void set_exponent(std::size_t var, unsigned e);
  int degree() const noexcept { return degree_; }
  int weighted_degree(const GenericRing& ring) const;
  bool is_one() const noexcept { return degree_ == 0; }

  /// Throws GuardExceeded when an exponent would exceed 255.
  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const noexcept;
  /// Caller guarantees divides(other).
  Monomial quotient_of(const Monomial& other) const;
  bool all_even() const noexcept;
  Monomial halved() const;

  /// Graded lexicographic comparison: total degree, then the largest
  /// variable's exponent, and so on downwards.
  friend int compare(const Monomial& a, const Monomial& b) noexcept {
    if (a.degree_ != b.degree_) return a.degree_ < b.degree_ ? -1 : 1;
    return std::memcmp(a.rev_.data(), b.rev_.data(), kMaxVars);
  }
  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.degree_ == b.degree_ && a.rev_ == b.rev_;
  }
  friend bool operator<(const Monomial& a, const Monomial& b) noexcept { return compare(a, b) < 0; }

  std::size_t hash() const noexcept {
    return std::hash<std::string_view>{}(
        std::string_view(reinterpret_cast<const char*>(rev_.data()), kMaxVars));
  }

 private:
  std::array<std::uint8_t, kMaxVars> rev_;
  std::uint16_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

}  // namespace gd
