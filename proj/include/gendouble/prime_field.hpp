#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace gd {

using u64 = std::uint64_t;

/// Largest prime below 2^62.
inline constexpr u64 kDefaultModulus = 4611686018427387847ULL;
inline constexpr u64 kDefaultSeed = 20240601ULL;

bool is_prime_u64(u64 n);

/// Arithmetic in Z/pZ for a 64-bit prime p. Products go through __int128.
class PrimeField {
 public:
  explicit PrimeField(u64 modulus = kDefaultModulus);

  u64 modulus() const noexcept { return p_; }

  u64 add(u64 a, u64 b) const noexcept {
    u64 s = a + b;
    return (s >= p_ || s < a) ? s - p_ : s;
  }
  u64 sub(u64 a, u64 b) const noexcept { return a >= b ? a - b : a + (p_ - b); }
  u64 neg(u64 a) const noexcept { return a == 0 ? 0 : p_ - a; }
  u64 mul(u64 a, u64 b) const noexcept {
    return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p_);
  }
  u64 pow(u64 base, u64 exp) const noexcept;
  u64 inv(u64 a) const;  // throws on a == 0
  u64 from_signed(long long v) const noexcept;

 private:
  u64 p_;
};

/// Modulus plus seed; the pair fully determines every sampled point.
struct PrimeFieldConfig {
  u64 modulus = kDefaultModulus;
  u64 seed = kDefaultSeed;

  /// Throws AlgebraError(InvalidArgument) unless p is prime with 2^60 < p < 2^62.
  void validate() const;
};

/// Deterministic uniform sampler over [0, p). Uses mt19937_64 with plain
/// rejection so the stream is identical on every standard library.
class PointSampler {
 public:
  explicit PointSampler(const PrimeFieldConfig& cfg);

  u64 next();
  std::vector<u64> point(std::size_t num_vars);

 private:
  u64 p_;
  u64 limit_;
  std::mt19937_64 engine_;
};

}  // namespace gd
