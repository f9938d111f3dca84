// Acceptance run: one PASS/FAIL line per criterion; exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "gendouble/exterior.hpp"
#include "gendouble/spinor.hpp"
#include "test_support.hpp"

using namespace gd;
namespace t = gd::testing;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, const std::function<Outcome()>& body) {
  const auto t0 = Clock::now();
  Outcome o{false, ""};
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  if (!o.pass) ++failures;
  std::printf("[%s] %d. %s -- %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", id, title, o.detail.c_str(), since(t0));
  std::fflush(stdout);
}

std::vector<int> iota0(std::size_t k) {
  std::vector<int> v(k);
  for (std::size_t i = 0; i < k; ++i) v[i] = static_cast<int>(i);
  return v;
}

}  // namespace

int main() {
  criterion(1, "complex conditions d1d2 = 0, d2d3 = 0 exactly, n = 3..7", [] {
    std::string detail;
    bool ok = true;
    for (int n = 3; n <= 7; ++n) {
      const auto t0 = Clock::now();
      auto res = build_resolution(make_ring(n));
      const bool zero = (res.d1 * res.d2).is_zero() && (res.d2 * res.d3).is_zero();
      const double s = since(t0);
      ok = ok && zero && s < 10.0;
      char buf[64];
      std::snprintf(buf, sizeof buf, "%sn=%d %s %.2fs", n > 3 ? ", " : "", n, zero ? "ok" : "NONZERO", s);
      detail += buf;
    }
    return Outcome{ok, detail};
  });

  criterion(2, "cone conditions delta_i delta_{i+1} = 0, n = 3, 4, 5", [] {
    const auto t0 = Clock::now();
    bool ok = true;
    std::string detail;
    for (int n = 3; n <= 5; ++n) {
      auto c = build_cone(n, false);
      auto cx = ChainComplex::from(c);
      const bool exact = check_complex(cx, Mode::Exact).pass;
      ok = ok && exact;
      detail += "n=" + std::to_string(n) + " exact " + (exact ? "ok" : "FAIL") + "; ";
      if (n == 5) {
        auto p = check_complex(cx, Mode::Probabilistic, 50);
        ok = ok && p.pass && p.log2_failure_bound < -40.0;
        char buf[96];
        std::snprintf(buf, sizeof buf, "n=5 probabilistic %s at 50 points, per-point bound 2^%.1f", p.pass ? "ok" : "FAIL",
                      std::log2(p.per_point_bound));
        detail += buf;
      }
    }
    ok = ok && since(t0) < 60.0;
    return Outcome{ok, detail};
  });

  criterion(3, "n = 5: five quoted 8x8 minors of delta2 equal +-g_i^2 x1 (50 points)", [] {
    const auto t0 = Clock::now();
    auto c = build_cone(5);
    const auto ks = quoted_spinor_indices(5);
    int verified = 0;
    std::string signs;
    for (int j = 0; j < 5; ++j) {
      auto rep = verify_spinor(c, default_spinor_rows(5), ks[j], c.psi0(0, j), Mode::Probabilistic, 50);
      if (rep.verdict == SpinorVerdict::VerifiedSquare && rep.certificate.log2_failure_bound < -40.0) ++verified;
      signs += rep.sign > 0 ? '+' : rep.sign < 0 ? '-' : '0';
    }
    const bool ok = verified == 5 && since(t0) < 60.0;
    return Outcome{ok, std::to_string(verified) + "/5 verified, signs " + signs};
  });

  criterion(4, "n = 4: four quoted 7x7 minors equal +-g_i^2 x1 exactly; extraction recovers g_i", [] {
    const auto t0 = Clock::now();
    auto c = build_cone(4);
    const auto ks = quoted_spinor_indices(4);
    int verified = 0;
    for (int j = 0; j < 4; ++j) {
      auto rep = verify_spinor(c, default_spinor_rows(4), ks[j], c.psi0(0, j), Mode::Exact);
      const Poly& g = c.psi0(0, j);
      const Poly s = extract_spinor(rep.minor_value.value(), c.base.x[0]);
      if (rep.verdict == SpinorVerdict::VerifiedSquare && (s == g || s == -g)) ++verified;
    }
    return Outcome{verified == 4 && since(t0) < 300.0, std::to_string(verified) + "/4 exact identities and extractions"};
  });

  criterion(5, "g1 not in J5 R~ in degree 4 (exact); each x_i in I5", [] {
    auto c = build_cone(5);
    std::vector<Poly> J(c.base.x.begin(), c.base.x.end());
    auto g1 = graded_membership(c.psi0(0, 0), J, true);
    int members = 0;
    for (const auto& x : c.base.x) members += graded_membership(x, c.ideal, true).member;
    const bool ok = !g1.member && g1.certificate.mode == Mode::Exact && c.psi0(0, 0).max_weighted_degree() == 4 &&
                    members == 4;
    return Outcome{ok, g1.certificate.detail + "; " + std::to_string(members) + "/4 x_i members"};
  });

  criterion(6, "equivariant phi = w/v block of d2 and d3*h in J_n, n = 3..7", [] {
    bool ok = true;
    std::size_t entries = 0;
    for (int n = 3; n <= 7; ++n) {
      auto R = make_ring(n);
      auto res = build_resolution(R);
      auto phi = equivariant_phi(R);
      ok = ok && phi == theta0(res);
      std::vector<Poly> J(res.x.begin(), res.x.end());
      for (int r = 0; r < 4; ++r) {
        PolyMatrix h(R, n, 1);
        for (int j = 0; j < n; ++j) h(j, 0) = phi(r, j);
        const PolyMatrix v = res.d3 * h;
        for (std::size_t i = 0; i < v.rows(); ++i, ++entries) ok = ok && graded_membership(v(i, 0), J, true).member;
      }
    }
    return Outcome{ok, "blocks equal, " + std::to_string(entries) + " membership certificates"};
  });

  criterion(7, "rank profiles (1,3,n) and (1,n+3,n+3,1), n = 3, 4, 5, 5 points", [] {
    bool ok = true;
    std::string detail;
    for (int n = 3; n <= 5; ++n) {
      auto c = build_cone(n, false);
      auto b = rank_profile(ChainComplex::from(c.base), 5).ranks;
      auto d = rank_profile(ChainComplex::from(c), 5).ranks;
      const auto N = static_cast<std::size_t>(n);
      ok = ok && b == std::vector<std::size_t>{1, 3, N} && d == std::vector<std::size_t>{1, N + 3, N + 3, 1};
      detail += (n > 3 ? "; " : "") + std::string("n=") + std::to_string(n) + " (" + std::to_string(b[0]) + "," +
                std::to_string(b[1]) + "," + std::to_string(b[2]) + ") (" + std::to_string(d[0]) + "," +
                std::to_string(d[1]) + "," + std::to_string(d[2]) + "," + std::to_string(d[3]) + ")";
    }
    return Outcome{ok, detail};
  });

  criterion(8, "pfaffian vs perfect-matching oracle (sizes <= 8), minor vs cofactor oracle (<= 4x4)", [] {
    auto R = make_ring(4);
    std::mt19937_64 rng(8);
    int pf_ok = 0, det_ok = 0;
    for (int i = 0; i < 100; ++i) {
      const std::size_t k = 1 + i % 8;
      auto M = t::random_skew(rng, R, k);
      pf_ok += pfaffian(M) == t::matching_pfaffian(M, iota0(k));
    }
    for (int i = 0; i < 100; ++i) {
      const std::size_t k = 1 + i % 4;
      auto M = t::random_matrix(rng, R, k, k);
      auto all = IndexSet::range(1, static_cast<int>(k));
      det_ok += minor(M, all, all) == t::cofactor_det(M, iota0(k), iota0(k));
    }
    return Outcome{pf_ok == 100 && det_ok == 100,
                   std::to_string(pf_ok) + "/100 Pfaffians, " + std::to_string(det_ok) + "/100 minors"};
  });

  criterion(9, "property suites: ring laws, exact_divide, poly_sqrt, evaluate (100 each)", [] {
    auto R = make_ring(5, true);
    std::mt19937_64 rng(9);
    PrimeField F;
    int laws = 0, div = 0, sqrt_ok = 0, hom = 0;
    for (int i = 0; i < 100; ++i) {
      auto a = t::random_poly(rng, R, 5, 12);
      auto b = t::random_poly(rng, R, 4, 12);
      auto c = t::random_poly(rng, R, 3, 12);
      laws += a + b == b + a && a * b == b * a && (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c &&
              (a - a).is_zero() && (a * b).is_canonical();
      div += b.is_zero() || exact_divide(a * b, b) == a;
      if (a.is_zero()) {
        ++sqrt_ok;
      } else {
        auto s = poly_sqrt(a * a);
        sqrt_ok += s == a || s == -a;
      }
      auto x = t::random_point(rng, R->num_vars(), F.modulus());
      hom += evaluate(a * b, x, F) == F.mul(evaluate(a, x, F), evaluate(b, x, F)) &&
             evaluate(a + b, x, F) == F.add(evaluate(a, x, F), evaluate(b, x, F));
    }
    return Outcome{laws == 100 && div == 100 && sqrt_ok == 100 && hom == 100,
                   "laws " + std::to_string(laws) + ", divide " + std::to_string(div) + ", sqrt " +
                       std::to_string(sqrt_ok) + ", evaluate " + std::to_string(hom) + " of 100"};
  });

  std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
