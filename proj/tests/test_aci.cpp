#include <chrono>

#include "doctest.h"
#include "gendouble/aci.hpp"
#include "gendouble/error.hpp"
#include "gendouble/exterior.hpp"
#include "test_support.hpp"

using namespace gd;

TEST_CASE("generator examples") {
  auto R4 = make_ring(4);
  auto x4 = build_generators(R4);
  CHECK(x4[0] == Poly::parse(R4, "c12*c34 - c13*c24 + c14*c23"));
  CHECK(x4[0] == gd::testing::matching_pfaffian(generic_skew(R4), {0, 1, 2, 3}));

  auto R3 = make_ring(3);
  auto x3 = build_generators(R3);
  auto U = generic_U(R3);
  CHECK(x3[0] == gd::testing::leibniz_det(U, {0, 1, 2}, {0, 1, 2}));
  auto expected = Poly::parse(R3, "u11*c23 - u12*c13 + u13*c12");
  CHECK((x3[1] == expected || x3[1] == -expected));
}

TEST_CASE("resolution shapes") {
  auto r3 = build_resolution(make_ring(3));
  CHECK(r3.d1.rows() == 1);
  CHECK(r3.d1.cols() == 4);
  CHECK(r3.d2.rows() == 4);
  CHECK(r3.d2.cols() == 6);
  CHECK(r3.d3.rows() == 6);
  CHECK(r3.d3.cols() == 3);
  auto r4 = build_resolution(make_ring(4));
  CHECK(r4.d2.cols() == 7);
  CHECK(r4.d3 == PolyMatrix::vstack(generic_skew(r4.ring), generic_U(r4.ring)));
  CHECK_THROWS_AS(build_resolution(make_ring(2)), AlgebraError);
  CHECK_THROWS_AS(build_resolution(make_ring(4, true)), AlgebraError);
}

TEST_CASE("complex conditions hold exactly for n = 3..7") {
  for (int n = 3; n <= 7; ++n) {
    CAPTURE(n);
    const auto t0 = std::chrono::steady_clock::now();
    auto res = build_resolution(make_ring(n));
    CHECK((res.d1 * res.d2).is_zero());
    CHECK((res.d2 * res.d3).is_zero());
    CHECK(res.d2(0, 0).leading().coeff > 0);
    for (int i = 0; i < 4; ++i) CHECK(res.d1(0, i) == res.x[i]);
    CHECK(res.d1.is_homogeneous());
    CHECK(res.d2.is_homogeneous());
    // Column sums in d1*d2 are graded: each product x_i * d2(i, j) has one degree per column.
    for (std::size_t j = 0; j < res.d2.cols(); ++j) {
      int deg = kZeroDegree;
      for (int i = 0; i < 4; ++i) {
        Poly prod = res.x[i] * res.d2(i, j);
        CHECK(prod.is_homogeneous());
        if (prod.is_zero()) continue;
        if (deg == kZeroDegree) deg = prod.degree();
        CHECK(prod.degree() == deg);
      }
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    CHECK(secs < 10.0);
  }
}

TEST_CASE("colon relations") {
  auto r3 = build_resolution(make_ring(3));
  auto w = colon_relation(r3, 1);
  CHECK(w.w * r3.x[0] == w.coeffs[0] * r3.x[1] + w.coeffs[1] * r3.x[2] + w.coeffs[2] * r3.x[3]);
  auto r4 = build_resolution(make_ring(4));
  auto w4 = colon_relation(r4, 2);
  for (int k = 0; k < 3; ++k) CHECK(w4.coeffs[k] == -r4.d2(k + 1, 1));
  for (int n = 5; n <= 6; ++n) {
    auto r = build_resolution(make_ring(n));
    for (int j = 1; j <= n; ++j) CHECK_NOTHROW(colon_relation(r, j));
  }
  CHECK_THROWS_AS(colon_relation(r3, 4), AlgebraError);
}

TEST_CASE("theta0 is the left block of d2") {
  auto r5 = build_resolution(make_ring(5));
  auto t = theta0(r5);
  CHECK(t.rows() == 4);
  CHECK(t.cols() == 5);
  for (int j = 0; j < 5; ++j) CHECK(t(2, j) == r5.d2(2, j));
}

TEST_CASE("entry degrees") {
  // Odd n = 2m+1: deg x1 = m+2, deg x2..x4 = m+1, deg w = m, deg v = m+1.
  auto r5 = build_resolution(make_ring(5));
  CHECK(r5.x[0].degree() == 4);
  CHECK(r5.x[1].degree() == 3);
  CHECK(r5.d2(0, 0).degree() == 2);
  CHECK(r5.d2(1, 0).degree() == 3);
  // Even n = 2m: deg x1 = m, deg x2..x4 = m+1, deg w = m+1, deg v = m.
  auto r4 = build_resolution(make_ring(4));
  CHECK(r4.x[0].degree() == 2);
  CHECK(r4.x[1].degree() == 3);
  CHECK(r4.d2(0, 0).degree() == 3);
  CHECK(r4.d2(1, 0).degree() == 2);
}
