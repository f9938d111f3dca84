#pragma once

#include <gmpxx.h>

#include <climits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gendouble/prime_field.hpp"
#include "gendouble/ring.hpp"

namespace gd {

enum class CoeffDomain { Integer, PrimeField };

struct Term {
  Monomial mono;
  mpz_class coeff;
};

/// Degree of the zero polynomial.
inline constexpr int kZeroDegree = INT_MIN;

/// Sparse polynomial over a GenericRing. Terms are kept strictly decreasing
/// in graded lex order with no zero coefficients; the empty list is zero.
/// PrimeField polynomials keep residues in [0, p).
class Poly {
 public:
  explicit Poly(RingPtr ring, CoeffDomain domain = CoeffDomain::Integer, u64 modulus = 0);

  static Poly constant(RingPtr ring, const mpz_class& c);
  static Poly variable(RingPtr ring, std::size_t var);
  /// Sorts, merges equal monomials and drops zeros.
  static Poly from_terms(RingPtr ring, std::vector<Term> terms,
                         CoeffDomain domain = CoeffDomain::Integer, u64 modulus = 0);
  /// Reads the canonical text form, e.g. "c12^2 - 3*u11*a0 + 1".
  static Poly parse(RingPtr ring, std::string_view text);

  const RingPtr& ring_ptr() const noexcept { return ring_; }
  const GenericRing& ring() const noexcept { return *ring_; }
  CoeffDomain domain() const noexcept { return domain_; }
  u64 modulus() const noexcept { return modulus_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  const Term& leading() const;

  /// Total (unweighted) degree, kZeroDegree for zero.
  int degree() const noexcept { return terms_.empty() ? kZeroDegree : terms_.front().mono.degree(); }
  int min_degree() const noexcept;
  /// Weighted degree range under the ring's grading.
  int max_weighted_degree() const;
  int min_weighted_degree() const;
  /// Zero counts as homogeneous.
  bool is_homogeneous() const;
  bool is_canonical() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly scaled(const mpz_class& c) const;
  Poly times_term(const Monomial& m, const mpz_class& c) const;

  /// Re-tags a polynomial of the same n into `ring` (normally the extended one).
  Poly promote(RingPtr ring) const;
  /// Image in Z/pZ[vars].
  Poly reduce_mod(u64 p) const;
  /// Divides out the gcd of the coefficients and makes the leading one positive.
  Poly primitive() const;

  std::string to_string() const;

  friend bool operator==(const Poly& a, const Poly& b);

 private:
  void normalize_coeff(mpz_class& c) const;

  RingPtr ring_;
  CoeffDomain domain_;
  u64 modulus_;
  std::vector<Term> terms_;
};

Poly operator+(Poly a, const Poly& b);
Poly operator-(Poly a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);

enum class ArithKind { Add, Sub, Mul, Neg };

/// Neg ignores b.
Poly arith(const Poly& a, const Poly& b, ArithKind kind);

/// q with q*b == a; throws DivisionNotExact otherwise.
Poly exact_divide(const Poly& a, const Poly& b);

/// `point` is indexed by variable and must cover the whole ring.
u64 evaluate(const Poly& a, std::span<const u64> point, const PrimeField& field);

/// s with s*s == q and positive leading coefficient; throws NotAPerfectSquare.
Poly poly_sqrt(const Poly& q);

}  // namespace gd
