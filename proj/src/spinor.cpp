#include "gendouble/spinor.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <sstream>

#include "gendouble/error.hpp"

namespace gd {

SpinorIndex::SpinorIndex(int n, std::vector<bool> barred) : n_(n), barred_(std::move(barred)) {
  if (n < 3 || n > kMaxN) throw AlgebraError(ErrorKind::InvalidArgument, "spinor index needs 3 <= n <= 9");
  if (static_cast<int>(barred_.size()) != n + 3) {
    throw AlgebraError(ErrorKind::ShapeMismatch, "spinor index needs exactly one choice per pair");
  }
  const bool want_odd = n % 2 == 1;
  if ((bar_count() % 2 == 1) != want_odd) {
    throw AlgebraError(ErrorKind::InvalidArgument,
                       std::string("spinor index needs an ") + (want_odd ? "odd" : "even") + " number of bars");
  }
}

SpinorIndex SpinorIndex::parse(int n, std::string_view text) {
  const int pairs = n + 3;
  std::vector<int> seen(pairs, 0);
  std::vector<bool> barred(pairs, false);
  std::stringstream ss{std::string(text)};
  std::string item;
  while (std::getline(ss, item, ',')) {
    while (!item.empty() && item.front() == ' ') item.erase(item.begin());
    while (!item.empty() && item.back() == ' ') item.pop_back();
    bool bar = false;
    if (!item.empty() && item.back() == '\'') {
      bar = true;
      item.pop_back();
    }
    int label = 0;
    try {
      std::size_t used = 0;
      label = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw AlgebraError(ErrorKind::InvalidArgument, "bad spinor label '" + item + "'");
    }
    if (label < 1 || label > pairs) throw AlgebraError(ErrorKind::IndexOutOfRange, "spinor label out of range");
    if (seen[label - 1]++) {
      throw AlgebraError(ErrorKind::InvalidArgument, "pair " + std::to_string(label) + " chosen twice");
    }
    barred[label - 1] = bar;
  }
  for (int i = 0; i < pairs; ++i)
    if (!seen[i]) throw AlgebraError(ErrorKind::ShapeMismatch, "pair " + std::to_string(i + 1) + " not chosen");
  return SpinorIndex(n, std::move(barred));
}

int SpinorIndex::bar_count() const noexcept {
  return static_cast<int>(std::count(barred_.begin(), barred_.end(), true));
}

std::string SpinorIndex::to_string() const {
  std::string s;
  for (int i = 1; i <= pairs(); ++i) {
    if (i > 1) s += ',';
    s += std::to_string(i);
    if (barred(i)) s += '\'';
  }
  return s;
}

IndexSet SpinorIndex::columns() const {
  const int N = pairs();
  std::vector<int> cols;
  for (int i = 1; i <= N; ++i) {
    if (n_ % 2) {
      cols.push_back(barred(i) ? i : N + i);
    } else {
      const int pair = N + 1 - i;
      cols.push_back(barred(i) ? N + pair : pair);
    }
  }
  std::sort(cols.begin(), cols.end());
  return IndexSet(std::move(cols));
}

IndexSet default_spinor_rows(int n) { return IndexSet::range(2, n + 4); }

std::vector<SpinorIndex> quoted_spinor_indices(int n) {
  if (n != 4 && n != 5) throw AlgebraError(ErrorKind::InvalidArgument, "quoted index sets exist for n = 4, 5 only");
  const int N = n + 3;
  std::vector<SpinorIndex> out;
  for (int j = 1; j <= n; ++j) {
    std::vector<bool> barred(N, n == 4);
    if (n == 5) {
      barred[j - 1] = true;
    } else {
      barred[N - j] = false;
    }
    out.emplace_back(n, std::move(barred));
  }
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;

void check_request(const DoublingCone& cone, const IndexSet& rows, const SpinorIndex& k) {
  if (k.n() != cone.n()) throw AlgebraError(ErrorKind::ShapeMismatch, "spinor index built for another n");
  if (static_cast<int>(rows.size()) != k.pairs()) {
    throw AlgebraError(ErrorKind::ShapeMismatch, "row set must have N = n+3 elements");
  }
  rows.check_bound(cone.delta[1].rows());
}

std::vector<std::vector<u64>> sample(const DoublingCone& cone, std::size_t trials, const PrimeFieldConfig& cfg) {
  cfg.validate();
  PointSampler sampler(cfg);
  std::vector<std::vector<u64>> pts;
  for (std::size_t t = 0; t < trials; ++t) pts.push_back(sampler.point(cone.ring->num_vars()));
  return pts;
}

// Sum over selected rows of the largest entry degree in that row.
int det_degree_bound(const PolyMatrix& m, const IndexSet& rows, const IndexSet& cols) {
  int total = 0;
  for (int r : rows.indices()) {
    int best = 0;
    for (int c : cols.indices()) best = std::max(best, m(r - 1, c - 1).degree());
    total += best;
  }
  return total;
}

Poly eval_sign(const Poly& p, int sign) { return sign > 0 ? p : -p; }

}  // namespace

const char* to_string(SpinorVerdict v) {
  switch (v) {
    case SpinorVerdict::VerifiedSquare:
      return "verified-square";
    case SpinorVerdict::Zero:
      return "zero";
    case SpinorVerdict::NonzeroUnclassified:
      return "nonzero-unclassified";
  }
  return "?";
}

SpinorMinor spinor_minor(const DoublingCone& cone, const IndexSet& rows, const SpinorIndex& k, Mode mode,
                         std::size_t trials, const PrimeFieldConfig& cfg, bool allow_large) {
  check_request(cone, rows, k);
  SpinorMinor out;
  if (mode == Mode::Exact) {
    if (k.pairs() >= 8 && !allow_large) {
      throw AlgebraError(ErrorKind::GuardExceeded, "symbolic minors of size 8 need an explicit override");
    }
    out.symbolic = minor(cone.delta[1], rows, k.columns());
    return out;
  }
  PrimeField field(cfg.modulus);
  out.values = minor_at_points(cone.delta[1], rows, k.columns(), sample(cone, trials, cfg), field);
  return out;
}

Poly extract_spinor(const Poly& minor_value, const Poly& x1) {
  const Poly q = exact_divide(minor_value, x1);
  Poly s(q.ring_ptr());
  try {
    s = poly_sqrt(q);
  } catch (const AlgebraError& e) {
    if (e.kind() != ErrorKind::NotAPerfectSquare) throw;
    s = poly_sqrt(-q);
  }
  const Poly back = s * s * x1;
  if (!(back == minor_value || back == -minor_value)) {
    throw AlgebraError(ErrorKind::ConsistencyFailure, "spinor round-trip failed");
  }
  return s;
}

SpinorReport verify_spinor(const DoublingCone& cone, const IndexSet& rows, const SpinorIndex& k, const Poly& candidate,
                           Mode mode, std::size_t trials, const PrimeFieldConfig& cfg, bool allow_large) {
  check_request(cone, rows, k);
  const auto t0 = Clock::now();
  const Poly x1 = cone.base.x[0];
  const IndexSet cols = k.columns();
  SpinorReport rep{k, "", SpinorVerdict::NonzeroUnclassified, 0, std::nullopt, std::nullopt, {}};
  auto& cert = rep.certificate;
  cert.kind = CertificateKind::Spinor;
  cert.target = "minor " + k.to_string() + " = +-(" + candidate.to_string() + ")^2*x1";
  cert.mode = mode;
  cert.degree_bound = std::max(det_degree_bound(cone.delta[1], rows, cols),
                               candidate.is_zero() ? 0 : 2 * candidate.degree() + x1.degree());

  if (mode == Mode::Exact) {
    const Poly m = spinor_minor(cone, rows, k, Mode::Exact, 0, cfg, allow_large).symbolic.value();
    const Poly sq = candidate * candidate * x1;
    rep.minor_value = m;
    if (!m.is_zero() && !sq.is_zero()) {
      for (int s : {1, -1})
        if (m == eval_sign(sq, s)) rep.sign = s;
    }
    if (rep.sign != 0) {
      rep.verdict = SpinorVerdict::VerifiedSquare;
      rep.coordinate = extract_spinor(m, x1);
    } else if (m.is_zero()) {
      rep.verdict = SpinorVerdict::Zero;
    }
    cert.pass = rep.verdict == SpinorVerdict::VerifiedSquare;
    cert.detail = to_string(rep.verdict);
    cert.wall_time_s = std::chrono::duration<double>(Clock::now() - t0).count();
    return rep;
  }

  PrimeField field(cfg.modulus);
  const auto pts = sample(cone, trials, cfg);
  const auto vals = minor_at_points(cone.delta[1], rows, cols, pts, field);
  bool plus = true, minus = true, witness = false, all_zero = true;
  for (std::size_t t = 0; t < pts.size(); ++t) {
    const u64 c = evaluate(candidate, pts[t], field);
    const u64 sq = field.mul(field.mul(c, c), evaluate(x1, pts[t], field));
    plus = plus && vals[t] == sq;
    minus = minus && vals[t] == field.neg(sq);
    witness = witness || c != 0;
    all_zero = all_zero && vals[t] == 0;
  }
  if ((plus || minus) && witness && !all_zero) {
    rep.verdict = SpinorVerdict::VerifiedSquare;
    rep.sign = plus ? 1 : -1;
  } else if (all_zero) {
    rep.verdict = SpinorVerdict::Zero;
  }
  cert.pass = rep.verdict == SpinorVerdict::VerifiedSquare;
  cert.detail = to_string(rep.verdict);
  cert.trials = trials;
  cert.modulus = cfg.modulus;
  cert.seed = cfg.seed;
  cert.per_point_bound = cert.degree_bound / static_cast<double>(cfg.modulus);
  cert.log2_failure_bound = log2_failure(cert.degree_bound, cfg.modulus, trials);
  cert.points = pts;
  cert.wall_time_s = std::chrono::duration<double>(Clock::now() - t0).count();
  return rep;
}

std::vector<NamedPoly> default_spinor_candidates(const DoublingCone& cone) {
  const RingPtr& R = cone.ring;
  std::vector<NamedPoly> out;
  for (int j = 0; j < cone.n(); ++j) out.push_back({"g" + std::to_string(j + 1), "g", cone.psi0(0, j)});
  std::vector<std::pair<std::string, Poly>> ax;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      ax.emplace_back("a" + std::to_string(i) + "*x" + std::to_string(j + 1),
                      Poly::variable(R, R->alpha(i)) * cone.base.x[j]);
    }
  for (const auto& [name, p] : ax) out.push_back({name, "alpha-x", p});
  for (std::size_t a = 0; a < ax.size(); ++a)
    for (std::size_t b = a + 1; b < ax.size(); ++b) {
      out.push_back({ax[a].first + "+" + ax[b].first, "alpha-x", ax[a].second + ax[b].second});
      out.push_back({ax[a].first + "-" + ax[b].first, "alpha-x", ax[a].second - ax[b].second});
    }
  if (cone.n() % 2) {
    PfaffianTable pf(generic_skew(R));
    for (int i = 1; i <= cone.n(); ++i)
      for (int j = 0; j < 4; ++j) {
        out.push_back({"Pf(" + std::to_string(i) + "^)*x" + std::to_string(j + 1), "pf-x", pf({i}) * cone.base.x[j]});
      }
  }
  return out;
}

SpinorEnumeration enumerate_spinors(const DoublingCone& cone, const IndexSet& rows,
                                    const std::vector<NamedPoly>& candidates, std::size_t trials,
                                    const PrimeFieldConfig& cfg) {
  const int n = cone.n();
  const int N = n + 3;
  if (static_cast<int>(rows.size()) != N) throw AlgebraError(ErrorKind::ShapeMismatch, "row set must have N rows");
  rows.check_bound(cone.delta[1].rows());
  PrimeField field(cfg.modulus);
  const auto pts = sample(cone, trials, cfg);

  // Evaluate delta2 and every candidate square once per point.
  std::vector<ModMatrix> d2;
  std::vector<u64> x1;
  for (const auto& pt : pts) {
    d2.push_back(evaluate_matrix(cone.delta[1], pt, field));
    x1.push_back(evaluate(cone.base.x[0], pt, field));
  }
  std::vector<std::vector<u64>> cand_val(candidates.size()), cand_sq(candidates.size());
  for (std::size_t c = 0; c < candidates.size(); ++c)
    for (std::size_t t = 0; t < pts.size(); ++t) {
      const u64 v = evaluate(candidates[c].value, pts[t], field);
      cand_val[c].push_back(v);
      cand_sq[c].push_back(field.mul(field.mul(v, v), x1[t]));
    }

  SpinorEnumeration out;
  for (std::uint32_t mask = 0; mask < (1u << N); ++mask) {
    const int bars = std::popcount(mask);
    if ((bars % 2 == 1) != (n % 2 == 1)) continue;
    std::vector<bool> barred(N);
    for (int i = 0; i < N; ++i) barred[i] = (mask >> i) & 1u;
    SpinorIndex k(n, std::move(barred));
    const IndexSet cols = k.columns();
    std::vector<u64> vals;
    for (const auto& m : d2) {
      ModMatrix sub(N, N);
      for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) sub(i, j) = m(rows[i] - 1, cols[j] - 1);
      vals.push_back(det_mod(std::move(sub), field));
    }
    SpinorReport rep{k, "", SpinorVerdict::NonzeroUnclassified, 0, std::nullopt, std::nullopt, {}};
    rep.certificate.kind = CertificateKind::Spinor;
    rep.certificate.mode = Mode::Probabilistic;
    rep.certificate.trials = trials;
    rep.certificate.modulus = cfg.modulus;
    rep.certificate.seed = cfg.seed;
    rep.certificate.target = "minor " + k.to_string();
    if (std::all_of(vals.begin(), vals.end(), [](u64 v) { return v == 0; })) {
      rep.verdict = SpinorVerdict::Zero;
      ++out.zero;
    } else {
      ++out.nonzero;
      for (std::size_t c = 0; c < candidates.size() && rep.sign == 0; ++c) {
        bool plus = true, minus = true, witness = false;
        for (std::size_t t = 0; t < pts.size(); ++t) {
          plus = plus && vals[t] == cand_sq[c][t];
          minus = minus && vals[t] == field.neg(cand_sq[c][t]);
          witness = witness || cand_val[c][t] != 0;
        }
        if ((plus || minus) && witness) {
          rep.sign = plus ? 1 : -1;
          rep.verdict = SpinorVerdict::VerifiedSquare;
          rep.candidate_name = candidates[c].name;
          rep.certificate.target += " = +-(" + candidates[c].name + ")^2*x1";
          ++out.matched;
        }
      }
    }
    rep.certificate.pass = rep.verdict == SpinorVerdict::VerifiedSquare;
    rep.certificate.detail = to_string(rep.verdict);
    out.reports.push_back(std::move(rep));
  }
  return out;
}

}  // namespace gd
