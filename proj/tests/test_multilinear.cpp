#include <random>

#include "doctest.h"
#include "gendouble/error.hpp"
#include "gendouble/multilinear.hpp"
#include "test_support.hpp"

using namespace gd;
namespace t = gd::testing;

namespace {

std::vector<int> iota0(std::size_t k) {
  std::vector<int> v(k);
  for (std::size_t i = 0; i < k; ++i) v[i] = static_cast<int>(i);
  return v;
}

}  // namespace

TEST_CASE("generic skew and U") {
  auto R2 = make_ring(2);
  auto C2 = generic_skew(R2);
  CHECK(C2(0, 1) == Poly::parse(R2, "c12"));
  CHECK(C2(1, 0) == Poly::parse(R2, "-c12"));
  auto R5 = make_ring(5);
  auto C5 = generic_skew(R5);
  for (int i = 0; i < 5; ++i) CHECK(C5(i, i).is_zero());
  auto C4 = generic_skew(make_ring(4));
  CHECK(C4(2, 0) == -C4(0, 2));
  auto U = generic_U(R5);
  CHECK(U.rows() == 3);
  CHECK(U.cols() == 5);
  CHECK(U(2, 4).to_string() == "u35");
}

TEST_CASE("pfaffian examples") {
  auto R2 = make_ring(2);
  CHECK(pfaffian(generic_skew(R2)) == Poly::parse(R2, "c12"));
  auto R4 = make_ring(4);
  auto C4 = generic_skew(R4);
  CHECK(pfaffian(C4) == Poly::parse(R4, "c12*c34 - c13*c24 + c14*c23"));
  CHECK(pfaffian(C4, {1, 2, 3, 4}) == Poly::constant(R4, 1));
  CHECK(pfaffian(C4, {2}).is_zero());
  CHECK(pfaffian(C4, {1, 3}) == Poly::parse(R4, "c24"));
  auto bad = C4;
  bad(0, 1) = Poly::parse(R4, "c12 + 1");
  CHECK_THROWS_AS(pfaffian(bad), AlgebraError);
  bad = C4;
  bad(1, 1) = Poly::parse(R4, "u11");
  CHECK_THROWS_AS(pfaffian(bad), AlgebraError);
}

TEST_CASE("pfaffian equals matching-sum oracle (sizes up to 8, 100 instances)") {
  auto R = make_ring(4);
  std::mt19937_64 rng(8080);
  for (int inst = 0; inst < 100; ++inst) {
    const std::size_t k = 1 + inst % 8;
    auto M = t::random_skew(rng, R, k);
    CHECK(pfaffian(M) == t::matching_pfaffian(M, iota0(k)));
  }
  auto C7 = generic_skew(make_ring(7));
  PfaffianTable table(C7);
  for (int i = 1; i <= 7; ++i) {
    std::vector<int> keep;
    for (int j = 0; j < 7; ++j)
      if (j != i - 1) keep.push_back(j);
    CHECK(table({i}) == t::matching_pfaffian(C7, keep));
  }
}

TEST_CASE("Pf^2 = det for generic skew matrices") {
  for (int n : {2, 4, 6}) {
    auto R = make_ring(n);
    auto C = generic_skew(R);
    auto pf = pfaffian(C);
    CHECK(pf * pf == minor(C, IndexSet::range(1, n), IndexSet::range(1, n)));
  }
}

TEST_CASE("minor examples and errors") {
  auto R = make_ring(3);
  auto U = generic_U(R);
  CHECK(minor(U, {2}, {3}) == Poly::parse(R, "u23"));
  CHECK(minor(U, {1, 2}, {1, 2}) == Poly::parse(R, "u11*u22 - u12*u21"));
  CHECK(minor(U, {1, 2, 3}, {1, 2, 3}) == t::leibniz_det(U, {0, 1, 2}, {0, 1, 2}));
  CHECK_THROWS_AS(minor(U, {1, 2}, {1}), AlgebraError);
  CHECK_THROWS_AS(minor(U, {1, 4}, {1, 2}), AlgebraError);
  CHECK_THROWS_AS(IndexSet({2, 1}), AlgebraError);
}

TEST_CASE("minor equals permutation-sum oracle (100 instances up to 4x4)") {
  auto R = make_ring(4);
  std::mt19937_64 rng(4242);
  for (int inst = 0; inst < 100; ++inst) {
    const std::size_t k = 1 + inst % 4;
    auto M = t::random_matrix(rng, R, k + 1, k + 1);
    auto rows = IndexSet::range(1, static_cast<int>(k));
    auto cols = IndexSet::range(2, static_cast<int>(k) + 1);
    std::vector<int> r0, c0;
    for (int r : rows.indices()) r0.push_back(r - 1);
    for (int c : cols.indices()) c0.push_back(c - 1);
    CHECK(minor(M, rows, cols) == t::leibniz_det(M, r0, c0));
  }
}

TEST_CASE("fraction-free elimination agrees with the oracle on 5x5 and 6x6") {
  auto R = make_ring(4);
  std::mt19937_64 rng(55);
  for (int inst = 0; inst < 12; ++inst) {
    const std::size_t k = inst % 2 ? 6 : 5;
    auto M = t::random_matrix(rng, R, k, k, 1);
    if (inst % 3 == 0) M(0, 0) = Poly(R);  // forces a pivot swap
    auto all = IndexSet::range(1, static_cast<int>(k));
    CHECK(minor(M, all, all) == t::leibniz_det(M, iota0(k), iota0(k)));
  }
}

TEST_CASE("minor is multilinear in rows") {
  auto R = make_ring(4);
  std::mt19937_64 rng(9);
  for (int inst = 0; inst < 20; ++inst) {
    auto M = t::random_matrix(rng, R, 3, 3);
    auto f = t::random_poly(rng, R, 2, R->num_vars());
    auto scaled = M;
    const std::size_t r = inst % 3;
    for (std::size_t c = 0; c < 3; ++c) scaled(r, c) = M(r, c) * f;
    auto all = IndexSet::range(1, 3);
    CHECK(minor(scaled, all, all) == f * minor(M, all, all));
  }
}

TEST_CASE("minor_at_points agrees with evaluate of the symbolic minor") {
  auto R = make_ring(4);
  PrimeField F;
  std::mt19937_64 rng(17);
  std::vector<std::vector<u64>> pts;
  for (int i = 0; i < 20; ++i) pts.push_back(t::random_point(rng, R->num_vars(), F.modulus()));
  auto M = t::random_matrix(rng, R, 4, 4);
  IndexSet rows{1, 2, 4}, cols{2, 3, 4};
  auto sym = minor(M, rows, cols);
  auto vals = minor_at_points(M, rows, cols, pts, F);
  for (std::size_t i = 0; i < pts.size(); ++i) CHECK(vals[i] == evaluate(sym, pts[i], F));
  PolyMatrix Z(R, 3, 3);
  for (u64 v : minor_at_points(Z, {1, 2, 3}, {1, 2, 3}, pts, F)) CHECK(v == 0);
  PolyMatrix I(R, 3, 3);
  for (int i = 0; i < 3; ++i) I(i, i) = Poly::constant(R, 1);
  CHECK(minor_at_points(I, {1, 2, 3}, {1, 2, 3}, pts, F).front() == 1);
}

TEST_CASE("numeric rank and determinant") {
  PrimeField F;
  ModMatrix z(3, 4);
  CHECK(rank_mod(z, F) == 0);
  ModMatrix a(3, 3);
  a(0, 1) = 1;
  a(1, 0) = 1;
  a(2, 2) = 5;
  CHECK(det_mod(a, F) == F.neg(5));
  CHECK(rank_mod(a, F) == 3);
  a(2, 2) = 0;
  CHECK(det_mod(a, F) == 0);
  CHECK(rank_mod(a, F) == 2);
}

TEST_CASE("matrix blocks and products") {
  auto R = make_ring(3);
  auto C = generic_skew(R);
  auto U = generic_U(R);
  auto d3 = PolyMatrix::vstack(C, U);
  CHECK(d3.rows() == 6);
  CHECK(d3(4, 2) == U(1, 2));
  CHECK(d3.transpose().transpose() == d3);
  CHECK((C * C.transpose()) == -(C * C));
  CHECK_THROWS_AS(C * d3, AlgebraError);
  CHECK_THROWS_AS(PolyMatrix::hstack(C, d3), AlgebraError);
}
