#include "gendouble/ring.hpp"

#include <utility>

#include "gendouble/error.hpp"

namespace gd {

const char* to_string(Parity p) { return p == Parity::Odd ? "odd" : "even"; }

GenericRing::GenericRing(int n, bool extended) : n_(n), extended_(extended) {
  if (n < 2 || n > kMaxN) {
    throw AlgebraError(ErrorKind::InvalidArgument, "n must lie in [2, " + std::to_string(kMaxN) + "], got " + std::to_string(n));
  }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) names_.push_back("c" + std::to_string(i) + std::to_string(j));
  for (int k = 1; k <= 3; ++k)
    for (int l = 1; l <= n; ++l) names_.push_back("u" + std::to_string(k) + std::to_string(l));
  weights_.assign(names_.size(), 1);
  if (extended) {
    const bool odd = n % 2 == 1;
    for (int i = 0; i < 4; ++i) {
      names_.push_back("a" + std::to_string(i));
      weights_.push_back(i == 0 ? (odd ? 2 : 1) : (odd ? 1 : 2));
    }
  }
}

std::size_t GenericRing::c(int i, int j) const {
  if (i > j) std::swap(i, j);
  if (i < 1 || j > n_ || i == j) {
    throw AlgebraError(ErrorKind::IndexOutOfRange, "c(" + std::to_string(i) + "," + std::to_string(j) + ")");
  }
  // Row-major over the strict upper triangle.
  std::size_t before = 0;
  for (int r = 1; r < i; ++r) before += static_cast<std::size_t>(n_ - r);
  return before + static_cast<std::size_t>(j - i - 1);
}

std::size_t GenericRing::u(int k, int l) const {
  if (k < 1 || k > 3 || l < 1 || l > n_) {
    throw AlgebraError(ErrorKind::IndexOutOfRange, "u(" + std::to_string(k) + "," + std::to_string(l) + ")");
  }
  const std::size_t nc = static_cast<std::size_t>(n_ * (n_ - 1) / 2);
  return nc + static_cast<std::size_t>((k - 1) * n_ + (l - 1));
}

std::size_t GenericRing::alpha(int i) const {
  if (!extended_ || i < 0 || i > 3) {
    throw AlgebraError(ErrorKind::IndexOutOfRange, "alpha(" + std::to_string(i) + ") in a ring without it");
  }
  const std::size_t nc = static_cast<std::size_t>(n_ * (n_ - 1) / 2);
  return nc + static_cast<std::size_t>(3 * n_ + i);
}

std::optional<std::size_t> GenericRing::find(std::string_view name) const {
  for (std::size_t v = 0; v < names_.size(); ++v)
    if (names_[v] == name) return v;
  return std::nullopt;
}

RingPtr make_ring(int n, bool extended) { return std::make_shared<const GenericRing>(n, extended); }

void Monomial::set_exponent(std::size_t var, unsigned e) {
  if (var >= kMaxVars) throw AlgebraError(ErrorKind::IndexOutOfRange, "variable index");
  if (e > 255) throw AlgebraError(ErrorKind::GuardExceeded, "exponent above 255");
  auto& slot = rev_[kMaxVars - 1 - var];
  degree_ = static_cast<std::uint16_t>(degree_ - slot + e);
  slot = static_cast<std::uint8_t>(e);
}

int Monomial::weighted_degree(const GenericRing& ring) const {
  int d = 0;
  for (std::size_t v = 0; v < ring.num_vars(); ++v) d += ring.weight(v) * exponent(v);
  return d;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    unsigned e = unsigned(rev_[i]) + other.rev_[i];
    if (e > 255) throw AlgebraError(ErrorKind::GuardExceeded, "exponent above 255");
    r.rev_[i] = static_cast<std::uint8_t>(e);
  }
  r.degree_ = static_cast<std::uint16_t>(degree_ + other.degree_);
  return r;
}

bool Monomial::divides(const Monomial& other) const noexcept {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (rev_[i] > other.rev_[i]) return false;
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.rev_[i] = static_cast<std::uint8_t>(other.rev_[i] - rev_[i]);
  r.degree_ = static_cast<std::uint16_t>(other.degree_ - degree_);
  return r;
}

bool Monomial::all_even() const noexcept {
  for (auto e : rev_)
    if (e & 1) return false;
  return true;
}

Monomial Monomial::halved() const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.rev_[i] = static_cast<std::uint8_t>(rev_[i] / 2);
  r.degree_ = static_cast<std::uint16_t>(degree_ / 2);
  return r;
}

}  // namespace gd
