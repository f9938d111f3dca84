#include "gendouble/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>

#include "gendouble/error.hpp"

namespace gd {

const char* to_string(Mode m) { return m == Mode::Exact ? "exact" : "probabilistic"; }

const char* to_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::Complex:
      return "complex";
    case CertificateKind::Rank:
      return "rank";
    case CertificateKind::Identity:
      return "identity";
    case CertificateKind::Membership:
      return "membership";
    case CertificateKind::Spinor:
      return "spinor";
  }
  return "?";
}

ChainComplex ChainComplex::from(const AciResolution& res) {
  return {"aci n=" + std::to_string(res.n()), res.ring, {res.d1, res.d2, res.d3}};
}

ChainComplex ChainComplex::from(const DoublingCone& cone) {
  return {"cone n=" + std::to_string(cone.n()),
          cone.ring,
          {cone.delta[0], cone.delta[1], cone.delta[2], cone.delta[3]}};
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

void check_shapes(const ChainComplex& cx) {
  for (std::size_t i = 0; i + 1 < cx.maps.size(); ++i) {
    if (cx.maps[i].cols() != cx.maps[i + 1].rows()) {
      throw AlgebraError(ErrorKind::ShapeMismatch, "maps " + std::to_string(i + 1) + " and " + std::to_string(i + 2) +
                                                       " of " + cx.name + " do not compose");
    }
  }
}

}  // namespace

double log2_failure(int degree, u64 modulus, std::size_t trials) {
  if (degree <= 0) return -INFINITY;
  return static_cast<double>(trials) * (std::log2(static_cast<double>(degree)) - std::log2(static_cast<double>(modulus)));
}

Certificate pit_zero(const PitExpression& expr, std::size_t trials, const PrimeFieldConfig& cfg) {
  if (!expr.degree_bound) {
    throw AlgebraError(ErrorKind::MissingDegreeBound, "no degree bound for " + expr.description);
  }
  if (trials < 1) throw AlgebraError(ErrorKind::InvalidArgument, "trials must be positive");
  cfg.validate();
  const auto t0 = Clock::now();
  PrimeField field(cfg.modulus);
  PointSampler sampler(cfg);
  Certificate cert;
  cert.kind = CertificateKind::Identity;
  cert.target = expr.description;
  cert.mode = Mode::Probabilistic;
  cert.trials = trials;
  cert.modulus = cfg.modulus;
  cert.seed = cfg.seed;
  cert.degree_bound = *expr.degree_bound;
  cert.per_point_bound = std::max(0, cert.degree_bound) / static_cast<double>(cfg.modulus);
  cert.pass = true;
  std::size_t failures = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    auto pt = sampler.point(expr.num_vars);
    const auto vals = expr.eval(pt, field);
    const bool zero = std::all_of(vals.begin(), vals.end(), [](u64 v) { return v == 0; });
    if (!zero) ++failures;
    cert.points.push_back(std::move(pt));
  }
  cert.pass = failures == 0;
  cert.log2_failure_bound = log2_failure(cert.degree_bound, cfg.modulus, trials);
  cert.detail = cert.pass ? "vanishes at all sampled points"
                          : "nonzero at " + std::to_string(failures) + " of " + std::to_string(trials) + " points";
  cert.wall_time_s = seconds_since(t0);
  return cert;
}

Certificate check_complex(const ChainComplex& cx, Mode mode, std::size_t trials, const PrimeFieldConfig& cfg) {
  check_shapes(cx);
  const auto t0 = Clock::now();
  Certificate cert;
  cert.kind = CertificateKind::Complex;
  cert.target = cx.name;
  cert.mode = mode;
  if (mode == Mode::Exact) {
    cert.pass = true;
    for (std::size_t i = 0; i + 1 < cx.maps.size(); ++i) {
      if (!(cx.maps[i] * cx.maps[i + 1]).is_zero()) {
        cert.pass = false;
        cert.detail = "product of maps " + std::to_string(i + 1) + " and " + std::to_string(i + 2) + " is nonzero";
        break;
      }
    }
    if (cert.pass) cert.detail = "all consecutive products are zero";
    cert.wall_time_s = seconds_since(t0);
    return cert;
  }
  int degree = 0;
  for (std::size_t i = 0; i + 1 < cx.maps.size(); ++i) {
    degree = std::max(degree, std::max(0, cx.maps[i].max_degree()) + std::max(0, cx.maps[i + 1].max_degree()));
  }
  PitExpression expr;
  expr.description = cx.name;
  expr.num_vars = cx.ring->num_vars();
  expr.degree_bound = degree;
  expr.eval = [&cx](std::span<const u64> pt, const PrimeField& f) {
    std::vector<u64> out;
    ModMatrix prev = evaluate_matrix(cx.maps.front(), pt, f);
    for (std::size_t i = 1; i < cx.maps.size(); ++i) {
      ModMatrix next = evaluate_matrix(cx.maps[i], pt, f);
      const ModMatrix prod = multiply(prev, next, f);
      out.insert(out.end(), prod.a.begin(), prod.a.end());
      prev = std::move(next);
    }
    return out;
  };
  Certificate pit = pit_zero(expr, trials, cfg);
  pit.kind = CertificateKind::Complex;
  pit.detail = pit.pass ? "all consecutive products vanish at sampled points" : pit.detail;
  pit.wall_time_s = seconds_since(t0);
  return pit;
}

RankProfile rank_profile(const ChainComplex& cx, std::size_t points, const PrimeFieldConfig& cfg) {
  check_shapes(cx);
  if (points < 1) throw AlgebraError(ErrorKind::InvalidArgument, "rank profile needs at least one point");
  cfg.validate();
  const auto t0 = Clock::now();
  PrimeField field(cfg.modulus);
  PointSampler sampler(cfg);
  RankProfile out;
  out.ranks.assign(cx.maps.size(), 0);
  for (std::size_t t = 0; t < points; ++t) {
    auto pt = sampler.point(cx.ring->num_vars());
    for (std::size_t i = 0; i < cx.maps.size(); ++i) {
      out.ranks[i] = std::max(out.ranks[i], rank_mod(evaluate_matrix(cx.maps[i], pt, field), field));
    }
    out.history.push_back(out.ranks);
    out.certificate.points.push_back(std::move(pt));
  }
  auto& cert = out.certificate;
  cert.kind = CertificateKind::Rank;
  cert.target = cx.name;
  cert.mode = Mode::Probabilistic;
  cert.trials = points;
  cert.modulus = cfg.modulus;
  cert.seed = cfg.seed;
  const auto& r = out.ranks;
  const auto& m = cx.maps;
  bool ok = !m.empty() && r.front() == m.front().rows() && r.back() == m.back().cols();
  for (std::size_t i = 0; ok && i + 1 < m.size(); ++i) ok = r[i] + r[i + 1] == m[i].cols();
  cert.pass = ok;
  std::string s = "(";
  for (std::size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + std::to_string(r[i]);
  cert.detail = "ranks " + s + ")" + (ok ? " meet the exactness count" : " violate the exactness count");
  cert.wall_time_s = seconds_since(t0);
  return out;
}

std::vector<Monomial> monomials_of_weight(const GenericRing& ring, int weight) {
  std::vector<Monomial> out;
  if (weight < 0) return out;
  Monomial cur;
  auto rec = [&](auto&& self, std::size_t var, int left) -> void {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    if (var == ring.num_vars()) return;
    const int w = ring.weight(var);
    const unsigned e0 = cur.exponent(var);
    for (int e = 0; e * w <= left; ++e) {
      cur.set_exponent(var, e0 + static_cast<unsigned>(e));
      self(self, var + 1, left - e * w);
    }
    cur.set_exponent(var, e0);
  };
  rec(rec, 0, weight);
  return out;
}

namespace {

// Echelon basis keyed by leading monomial. Over Z every row is kept primitive
// and reductions are fraction-free; over F_p rows are monic.
class Echelon {
 public:
  explicit Echelon(bool exact) : exact_(exact) {}

  Poly reduce(Poly p) const {
    while (!p.is_zero()) {
      auto it = rows_.find(p.leading().mono);
      if (it == rows_.end()) break;
      const Poly& b = it->second;
      if (exact_) {
        const mpz_class lb = b.leading().coeff;
        const mpz_class lp = p.leading().coeff;
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), lb.get_mpz_t(), lp.get_mpz_t());
        p = p.scaled(lb / g) - b.scaled(lp / g);
        p = p.primitive();
      } else {
        p -= b.scaled(p.leading().coeff);
      }
    }
    return p;
  }

  void insert(Poly p) {
    p = reduce(std::move(p));
    if (p.is_zero()) return;
    if (exact_) {
      p = p.primitive();
    } else {
      PrimeField f(p.modulus());
      const u64 lc = p.leading().coeff.get_ui();
      p = p.scaled(mpz_class(std::to_string(f.inv(lc))));
    }
    Monomial lead = p.leading().mono;
    rows_.emplace(lead, std::move(p));
  }

  std::size_t size() const noexcept { return rows_.size(); }

 private:
  bool exact_;
  std::map<Monomial, Poly> rows_;
};

}  // namespace

MembershipResult graded_membership(const Poly& g, const std::vector<Poly>& gens, bool exact, u64 modulus) {
  const auto t0 = Clock::now();
  if (!g.is_homogeneous()) throw AlgebraError(ErrorKind::InhomogeneousInput, "target is not homogeneous");
  for (const auto& f : gens) {
    if (!f.is_homogeneous()) throw AlgebraError(ErrorKind::InhomogeneousInput, "generator is not homogeneous");
    if (!(f.ring() == g.ring())) throw AlgebraError(ErrorKind::RingMismatch, "generator from another ring");
  }
  MembershipResult res;
  auto& cert = res.certificate;
  cert.kind = CertificateKind::Membership;
  cert.mode = exact ? Mode::Exact : Mode::Probabilistic;
  cert.modulus = exact ? 0 : modulus;
  if (g.is_zero()) {
    res.member = true;
    cert.pass = true;
    cert.detail = "zero lies in every ideal";
    return res;
  }
  const int deg = g.max_weighted_degree();
  auto prep = [&](const Poly& p) { return exact ? p : p.reduce_mod(modulus); };
  Echelon basis(exact);
  std::size_t spanning = 0;
  for (const auto& f : gens) {
    if (f.is_zero()) continue;
    const int e = f.max_weighted_degree();
    if (e > deg) continue;
    const Poly fp = prep(f);
    for (const auto& m : monomials_of_weight(g.ring(), deg - e)) {
      basis.insert(fp.times_term(m, 1));
      ++spanning;
    }
  }
  res.member = basis.reduce(prep(g)).is_zero();
  cert.pass = res.member;
  cert.detail = std::string(res.member ? "member" : "non-member") + " in weighted degree " + std::to_string(deg) +
                " (" + std::to_string(spanning) + " products, rank " + std::to_string(basis.size()) + ")" +
                (exact ? "" : ", mod p evidence");
  cert.wall_time_s = seconds_since(t0);
  return res;
}

}  // namespace gd
