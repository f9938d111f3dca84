#include "gendouble/prime_field.hpp"

#include "gendouble/error.hpp"

namespace gd {

namespace {

u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % m);
}

u64 powmod(u64 b, u64 e, u64 m) {
  u64 r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::RingMismatch: return "ring mismatch";
    case ErrorKind::DomainMismatch: return "coefficient-domain mismatch";
    case ErrorKind::DivisionNotExact: return "division-not-exact";
    case ErrorKind::NotAPerfectSquare: return "not-a-perfect-square";
    case ErrorKind::MissingAssignment: return "missing variable assignment";
    case ErrorKind::NotSkewSymmetric: return "matrix not skew-symmetric";
    case ErrorKind::ShapeMismatch: return "shape mismatch";
    case ErrorKind::IndexOutOfRange: return "index out of range";
    case ErrorKind::GuardExceeded: return "guard exceeded";
    case ErrorKind::ConsistencyFailure: return "internal consistency failure";
    case ErrorKind::InhomogeneousInput: return "inhomogeneous input";
    case ErrorKind::MissingDegreeBound: return "missing degree bound";
    case ErrorKind::InvalidArgument: return "invalid argument";
  }
  return "unknown error";
}

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic witness set for all 64-bit integers.
  for (u64 a : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL, 1795265022ULL}) {
    u64 x = powmod(a, d, n);
    if (x == 0 || x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(u64 modulus) : p_(modulus) {
  if (modulus < 3 || !is_prime_u64(modulus)) {
    throw AlgebraError(ErrorKind::InvalidArgument, "modulus " + std::to_string(modulus) + " is not an odd prime");
  }
}

u64 PrimeField::pow(u64 base, u64 exp) const noexcept { return powmod(base, exp, p_); }

u64 PrimeField::inv(u64 a) const {
  if (a % p_ == 0) throw AlgebraError(ErrorKind::InvalidArgument, "inverse of zero");
  return powmod(a, p_ - 2, p_);
}

u64 PrimeField::from_signed(long long v) const noexcept {
  if (v >= 0) return static_cast<u64>(v) % p_;
  u64 m = static_cast<u64>(-(v + 1)) + 1;
  return neg(m % p_);
}

void PrimeFieldConfig::validate() const {
  constexpr u64 lo = 1ULL << 60;
  constexpr u64 hi = 1ULL << 62;
  if (modulus <= lo || modulus >= hi) {
    throw AlgebraError(ErrorKind::InvalidArgument, "modulus must satisfy 2^60 < p < 2^62, got " + std::to_string(modulus));
  }
  if (!is_prime_u64(modulus)) {
    throw AlgebraError(ErrorKind::InvalidArgument, "modulus " + std::to_string(modulus) + " is not prime");
  }
}

PointSampler::PointSampler(const PrimeFieldConfig& cfg)
    : p_(cfg.modulus), limit_(~0ULL - (~0ULL % cfg.modulus) - 1), engine_(cfg.seed) {}

u64 PointSampler::next() {
  // limit_ + 1 is the largest multiple of p representable; values above it are rejected.
  for (;;) {
    u64 r = engine_();
    if (r <= limit_) return r % p_;
  }
}

std::vector<u64> PointSampler::point(std::size_t num_vars) {
  std::vector<u64> pt(num_vars);
  for (auto& v : pt) v = next();
  return pt;
}

}  // namespace gd
