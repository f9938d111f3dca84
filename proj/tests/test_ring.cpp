#include <random>

#include "doctest.h"
#include "gendouble/error.hpp"
#include "gendouble/poly.hpp"
#include "test_support.hpp"

using namespace gd;
using gd::testing::random_poly;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const AlgebraError& e) {
    return e.kind();
  }
  FAIL("expected AlgebraError");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("generic ring census and order") {
  for (int n = 3; n <= 9; ++n) {
    auto r = make_ring(n, false);
    auto rx = make_ring(n, true);
    CHECK(r->num_vars() == static_cast<std::size_t>(n * (n - 1) / 2 + 3 * n));
    CHECK(rx->num_vars() == r->num_vars() + 4);
    CHECK((r->parity() == Parity::Odd) == (n % 2 == 1));
    for (std::size_t v = 0; v < r->num_vars(); ++v) CHECK(r->weight(v) == 1);
  }
  auto r5 = make_ring(5, true);
  CHECK(r5->name(0) == "c12");
  CHECK(r5->name(r5->c(4, 5)) == "c45");
  CHECK(r5->c(1, 2) < r5->c(1, 3));
  CHECK(r5->c(4, 5) < r5->u(1, 1));
  CHECK(r5->u(3, 5) < r5->alpha(0));
  CHECK(r5->name(r5->alpha(3)) == "a3");
  // Odd doubling: a0 carries weight 2, even doubling: a1..a3 carry weight 2.
  CHECK(r5->weight(r5->alpha(0)) == 2);
  CHECK(r5->weight(r5->alpha(1)) == 1);
  auto r4 = make_ring(4, true);
  CHECK(r4->weight(r4->alpha(0)) == 1);
  CHECK(r4->weight(r4->alpha(2)) == 2);
  CHECK(kind_of([] { make_ring(10, false); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("arith examples") {
  auto R = make_ring(3, false);
  auto c12 = Poly::variable(R, R->c(1, 2));
  auto u11 = Poly::variable(R, R->u(1, 1));
  auto p = Poly::parse(R, "3*c12*u23 - u11^2 + 7");
  CHECK(arith(p, Poly(R), ArithKind::Add) == p);
  CHECK((c12 * c12).to_string() == "c12^2");
  // Expected value from the schoolbook oracle.
  auto lhs = c12 + u11;
  auto rhs = c12 - u11;
  auto oracle = gd::testing::schoolbook_mul(gd::testing::to_map(lhs), gd::testing::to_map(rhs));
  CHECK(gd::testing::to_map(lhs * rhs) == oracle);
  CHECK((lhs * rhs) == Poly::parse(R, "c12^2 - u11^2"));
  CHECK(arith(p, p, ArithKind::Neg) == Poly::parse(R, "-3*c12*u23 + u11^2 - 7"));
  CHECK(arith(p, p, ArithKind::Sub).is_zero());
}

TEST_CASE("arith rejects mixed rings and domains") {
  auto R3 = make_ring(3, false);
  auto R4 = make_ring(4, false);
  auto a = Poly::variable(R3, 0);
  auto b = Poly::variable(R4, 0);
  CHECK(kind_of([&] { (void)(a + b); }) == ErrorKind::RingMismatch);
  CHECK(kind_of([&] { (void)(a * a.reduce_mod(kDefaultModulus)); }) == ErrorKind::DomainMismatch);
  auto R3x = make_ring(3, true);
  CHECK(kind_of([&] { (void)(a - Poly::variable(R3x, 0)); }) == ErrorKind::RingMismatch);
  CHECK(a.promote(R3x) == Poly::variable(R3x, 0));
}

TEST_CASE("canonical text round-trip") {
  auto R = make_ring(5, true);
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    auto p = random_poly(rng, R, 6, R->num_vars(), 3, 40);
    CHECK(p.is_canonical());
    CHECK(Poly::parse(R, p.to_string()) == p);
  }
  CHECK(Poly(R).to_string() == "0");
  CHECK(Poly::parse(R, "-u11 + 2*a0*c12^2").to_string() == "2*c12^2*a0 - u11");
}

TEST_CASE("ring laws on random instances") {
  auto R = make_ring(4, true);
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 100; ++i) {
    auto a = random_poly(rng, R, 5, 10);
    auto b = random_poly(rng, R, 4, 10);
    auto c = random_poly(rng, R, 3, 10);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    CHECK(a * Poly::constant(R, 1) == a);
    CHECK((a * b).is_canonical());
    CHECK((a - b).is_canonical());
    CHECK(gd::testing::to_map(a * b) == gd::testing::schoolbook_mul(gd::testing::to_map(a), gd::testing::to_map(b)));
  }
}

TEST_CASE("homogeneity is graded by multiplication") {
  auto R = make_ring(5, false);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 40; ++i) {
    auto a = gd::testing::random_homogeneous(rng, R, 4, R->num_vars(), 2);
    auto b = gd::testing::random_homogeneous(rng, R, 3, R->num_vars(), 3);
    auto c = gd::testing::random_homogeneous(rng, R, 3, R->num_vars(), 2);
    auto ab = a * b;
    CHECK(ab.is_homogeneous());
    if (!ab.is_zero()) CHECK(ab.max_weighted_degree() == 5);
    CHECK((a + c).is_homogeneous());
  }
}

TEST_CASE("exact_divide examples") {
  auto R = make_ring(3, false);
  auto q = exact_divide(Poly::parse(R, "c12^2 - u11^2"), Poly::parse(R, "c12 + u11"));
  CHECK(q == Poly::parse(R, "c12 - u11"));
  CHECK(kind_of([&] { exact_divide(Poly::parse(R, "c12"), Poly::parse(R, "u11")); }) == ErrorKind::DivisionNotExact);
  CHECK(kind_of([&] { exact_divide(Poly::parse(R, "c12 + 1"), Poly::parse(R, "2*c12")); }) ==
        ErrorKind::DivisionNotExact);
  CHECK(exact_divide(Poly(R), Poly::parse(R, "c13")).is_zero());
}

TEST_CASE("exact_divide inverts multiplication (200 random pairs)") {
  auto R = make_ring(5, true);
  std::mt19937_64 rng(77);
  for (int i = 0; i < 200; ++i) {
    auto a = random_poly(rng, R, 6, 12);
    auto b = random_poly(rng, R, 4, 12);
    if (b.is_zero()) continue;
    CHECK(exact_divide(a * b, b) == a);
  }
  // Same over the prime field.
  auto a = random_poly(rng, R, 6, 12).reduce_mod(kDefaultModulus);
  auto b = random_poly(rng, R, 5, 12).reduce_mod(kDefaultModulus);
  CHECK(exact_divide(a * b, b) == a);
}

TEST_CASE("evaluate examples and homomorphism") {
  auto R = make_ring(3, false);
  PrimeField F;
  std::vector<u64> pt(R->num_vars(), 0);
  pt[R->c(1, 2)] = 3;
  CHECK(evaluate(Poly(R), pt, F) == 0);
  CHECK(evaluate(Poly::parse(R, "c12 + c12"), pt, F) == 6);
  CHECK(evaluate(Poly::parse(R, "-c12"), pt, F) == F.modulus() - 3);
  std::vector<u64> short_pt(R->num_vars() - 1, 1);
  CHECK(kind_of([&] { evaluate(Poly::parse(R, "c12"), short_pt, F); }) == ErrorKind::MissingAssignment);

  auto Rx = make_ring(5, true);
  std::mt19937_64 rng(99);
  for (int i = 0; i < 100; ++i) {
    auto f = random_poly(rng, Rx, 5, Rx->num_vars(), 3, 1000);
    auto g = random_poly(rng, Rx, 5, Rx->num_vars(), 3, 1000);
    auto x = gd::testing::random_point(rng, Rx->num_vars(), F.modulus());
    CHECK(evaluate(f * g, x, F) == F.mul(evaluate(f, x, F), evaluate(g, x, F)));
    CHECK(evaluate(f + g, x, F) == F.add(evaluate(f, x, F), evaluate(g, x, F)));
  }
}

TEST_CASE("poly_sqrt examples") {
  auto R = make_ring(3, false);
  CHECK(poly_sqrt(Poly::parse(R, "c12^2")) == Poly::parse(R, "c12"));
  auto s = Poly::parse(R, "c12 + u11");
  CHECK(poly_sqrt(s * s) == s);
  CHECK(poly_sqrt(Poly::parse(R, "4*u11^2*c13^2 - 4*u11*c13 + 1")) == Poly::parse(R, "2*c13*u11 - 1"));
  CHECK(kind_of([&] { poly_sqrt(Poly::parse(R, "c12")); }) == ErrorKind::NotAPerfectSquare);
  CHECK(kind_of([&] { poly_sqrt(Poly::parse(R, "c12^2 + u11^2")); }) == ErrorKind::NotAPerfectSquare);
  CHECK(kind_of([&] { poly_sqrt(Poly::parse(R, "-c12^2")); }) == ErrorKind::NotAPerfectSquare);
  CHECK(kind_of([&] { poly_sqrt(Poly(R)); }) == ErrorKind::NotAPerfectSquare);
}

TEST_CASE("poly_sqrt recovers +-p from p*p (100 random)") {
  auto R = make_ring(4, true);
  std::mt19937_64 rng(314);
  for (int i = 0; i < 100; ++i) {
    auto p = random_poly(rng, R, 5, R->num_vars(), 2, 9);
    if (p.is_zero()) continue;
    auto r = poly_sqrt(p * p);
    CHECK((r == p || r == -p));
    CHECK(r.leading().coeff > 0);
  }
}

TEST_CASE("prime field configuration") {
  PrimeFieldConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  CHECK(is_prime_u64(kDefaultModulus));
  CHECK(kDefaultModulus > (1ULL << 60));
  CHECK(!is_prime_u64(kDefaultModulus + 2));
  PrimeFieldConfig bad{1000003ULL, 1};
  CHECK(kind_of([&] { bad.validate(); }) == ErrorKind::InvalidArgument);
  PrimeFieldConfig composite{(1ULL << 61) + 1, 1};
  CHECK(kind_of([&] { composite.validate(); }) == ErrorKind::InvalidArgument);
  PointSampler a(cfg), b(cfg);
  for (int i = 0; i < 10; ++i) CHECK(a.next() == b.next());
  PrimeField F;
  CHECK(F.mul(F.inv(12345), 12345) == 1);
}
