#include "gendouble/cli.hpp"

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "gendouble/error.hpp"
#include "gendouble/exterior.hpp"
#include "gendouble/serialize.hpp"

namespace gd {

using nlohmann::json;

namespace {

const std::vector<std::string> kAllChecks{"complex", "ranks", "colon", "equivariant", "spinor", "membership"};

Mode pick_mode(const RunConfig& cfg, Mode fallback) {
  if (!cfg.mode) return fallback;
  return *cfg.mode == "exact" ? Mode::Exact : Mode::Probabilistic;
}

void emit(const RunConfig& cfg, const std::string& content, std::ostream& out) {
  if (cfg.out == "-") {
    out << content;
  } else {
    write_file_atomic(cfg.out, content);
  }
}

MatrixBundle base_bundle(const AciResolution& res) { return {res.ring, {res.d1, res.d2, res.d3}}; }

MatrixBundle cone_bundle(const DoublingCone& c) {
  return {c.ring, {c.delta[0], c.delta[1], c.delta[2], c.delta[3]}};
}

json config_json(const RunConfig& cfg) {
  return {{"n", cfg.n},
          {"parity", cfg.n % 2 ? "odd" : "even"},
          {"trials", cfg.trials},
          {"modulus", cfg.field.modulus},
          {"seed", cfg.field.seed},
          {"mode", cfg.mode.value_or("auto")}};
}

std::string shape(const PolyMatrix& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }

}  // namespace

void RunConfig::validate() const {
  if (n < 3 || n > kMaxN) throw std::invalid_argument("--n must lie in [3, 9]");
  if (parity && *parity != (n % 2 ? Parity::Odd : Parity::Even)) {
    throw std::invalid_argument("--parity disagrees with --n");
  }
  if (mode && *mode != "exact" && *mode != "probabilistic") {
    throw std::invalid_argument("--mode must be exact or probabilistic");
  }
  if (trials < 1) throw std::invalid_argument("--trials must be at least 1");
  try {
    field.validate();
  } catch (const AlgebraError& e) {
    throw std::invalid_argument(e.what());
  }
  for (const auto& c : checks) {
    if (std::find(kAllChecks.begin(), kAllChecks.end(), c) == kAllChecks.end()) {
      throw std::invalid_argument("unknown check '" + c + "'");
    }
    if (c == "spinor" && input.empty() && n != 4 && n != 5) throw std::invalid_argument("spinor checks exist for n = 4 and 5");
  }
}

int cmd_build(const RunConfig& cfg, std::ostream& out, std::ostream& log) {
  auto res = build_resolution(make_ring(cfg.n));
  MatrixBundle bundle = base_bundle(res);
  if (cfg.cone) bundle = cone_bundle(build_cone(make_ring(cfg.n, true), res));
  for (const auto& m : bundle.matrices) log << m.name << " " << shape(m) << "\n";
  emit(cfg, to_json(bundle).dump(1) + "\n", out);
  return kExitPass;
}

int cmd_export(const RunConfig& cfg, std::ostream& out, std::ostream& log) {
  auto res = build_resolution(make_ring(cfg.n));
  MatrixBundle bundle = base_bundle(res);
  if (cfg.cone) bundle = cone_bundle(build_cone(make_ring(cfg.n, true), res));
  std::string text;
  switch (cfg.format) {
    case ExportFormat::Json:
      text = to_json(bundle).dump(1) + "\n";
      break;
    case ExportFormat::CasScript:
      text = to_cas_script(bundle);
      break;
    case ExportFormat::Latex:
      for (const auto& m : bundle.matrices) text += "% " + m.name + "\n" + to_latex(m);
      break;
  }
  log << "exported " << bundle.matrices.size() << " matrices over " << bundle.ring->num_vars() << " variables\n";
  emit(cfg, text, out);
  return kExitPass;
}

namespace {

// Complex and rank checks on an imported bundle, its matrices taken in order.
int verify_imported(const RunConfig& cfg, std::ostream& out, std::ostream& log) {
  std::ifstream in(cfg.input);
  if (!in) throw std::runtime_error("cannot read " + cfg.input);
  MatrixBundle bundle;
  try {
    bundle = bundle_from_json(json::parse(in));
  } catch (const std::exception& e) {
    throw std::invalid_argument(cfg.input + ": " + e.what());
  }
  ChainComplex cx{cfg.input, bundle.ring, bundle.matrices};
  std::set<std::string> checks(cfg.checks.begin(), cfg.checks.end());
  if (checks.empty()) checks = {"complex"};
  json report;
  report["config"] = config_json(cfg);
  report["config"]["input"] = cfg.input;
  report["certificates"] = json::array();
  bool all_pass = true;
  for (const auto& c : checks) {
    Certificate cert;
    if (c == "complex") {
      cert = check_complex(cx, pick_mode(cfg, Mode::Exact), cfg.trials, cfg.field);
    } else if (c == "ranks") {
      cert = rank_profile(cx, cfg.trials, cfg.field).certificate;
    } else {
      throw std::invalid_argument("check '" + c + "' needs a built construction, not --in");
    }
    all_pass = all_pass && cert.pass;
    log << (cert.pass ? "PASS " : "FAIL ") << to_string(cert.kind) << ": " << cert.target << " -- " << cert.detail
        << "\n";
    report["certificates"].push_back(to_json(cert));
  }
  report["pass"] = all_pass;
  emit(cfg, report.dump(1) + "\n", out);
  return all_pass ? kExitPass : kExitFail;
}

}  // namespace

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& log) {
  if (!cfg.input.empty()) return verify_imported(cfg, out, log);
  const int n = cfg.n;
  std::set<std::string> checks(cfg.checks.begin(), cfg.checks.end());
  if (checks.empty()) {
    checks = {"complex", "ranks", "colon", "equivariant", "membership"};
    if (n == 4 || n == 5) checks.insert("spinor");
  }
  const RingPtr base_ring = make_ring(n);
  const RingPtr ext_ring = make_ring(n, true);
  AciResolution res = build_resolution(base_ring);
  // Exact cone identities are cheap up to n = 6; the exact check is repeated
  // in check_complex below, so construction skips it.
  DoublingCone cone = build_cone(ext_ring, res, false);

  json report;
  report["config"] = config_json(cfg);
  report["certificates"] = json::array();
  bool all_pass = true;
  auto record = [&](const Certificate& c, json extra = json::object()) {
    json j = to_json(c);
    j.update(extra);
    report["certificates"].push_back(j);
    all_pass = all_pass && c.pass;
    log << (c.pass ? "PASS " : "FAIL ") << to_string(c.kind) << ": " << c.target << " -- " << c.detail << "\n";
  };

  if (checks.count("complex")) {
    record(check_complex(ChainComplex::from(res), pick_mode(cfg, Mode::Exact), cfg.trials, cfg.field));
    record(check_complex(ChainComplex::from(cone), pick_mode(cfg, n <= 4 ? Mode::Exact : Mode::Probabilistic),
                         cfg.trials, cfg.field));
  }
  if (checks.count("ranks")) {
    for (const auto& cx : {ChainComplex::from(res), ChainComplex::from(cone)}) {
      auto rp = rank_profile(cx, cfg.trials, cfg.field);
      record(rp.certificate, {{"ranks", rp.ranks}});
    }
  }
  if (checks.count("colon")) {
    Certificate c;
    c.kind = CertificateKind::Identity;
    c.target = "w_j*x1 = a*x2 + b*x3 + c*x4 for j = 1.." + std::to_string(n);
    c.pass = true;
    try {
      for (int j = 1; j <= n; ++j) colon_relation(res, j);
      c.detail = "all colon relations hold exactly";
    } catch (const AlgebraError& e) {
      c.pass = false;
      c.detail = e.what();
    }
    record(c);
  }
  if (checks.count("equivariant")) {
    Certificate c;
    c.kind = CertificateKind::Identity;
    c.target = "equivariant phi = left block of d2";
    const PolyMatrix phi = equivariant_phi(base_ring);
    c.pass = phi == theta0(res);
    c.detail = c.pass ? "entrywise equal" : "entries differ";
    record(c);
    Certificate m;
    m.kind = CertificateKind::Membership;
    m.target = "d3 * h in J_n for every column h of H_n";
    m.pass = true;
    std::vector<Poly> gens(res.x.begin(), res.x.end());
    std::size_t count = 0;
    for (int r = 0; r < 4 && m.pass; ++r) {
      PolyMatrix h(base_ring, n, 1);
      for (int j = 0; j < n; ++j) h(j, 0) = phi(r, j);
      const PolyMatrix v = res.d3 * h;
      for (std::size_t i = 0; i < v.rows() && m.pass; ++i, ++count) {
        m.pass = graded_membership(v(i, 0), gens, true).member;
        if (!m.pass) m.detail = "entry " + std::to_string(i + 1) + " of column " + std::to_string(r + 1) + " not in J_n";
      }
    }
    if (m.pass) m.detail = std::to_string(count) + " entries certified members";
    record(m);
  }
  if (checks.count("membership")) {
    std::vector<Poly> j_gens;
    for (const auto& x : cone.base.x) j_gens.push_back(x);
    auto g1 = graded_membership(cone.psi0(0, 0), j_gens, true);
    Certificate c = g1.certificate;
    c.target = "g1 not in J_" + std::to_string(n) + "*R~";
    c.pass = !g1.member;
    record(c);
    for (int i = 0; i < 4; ++i) {
      auto xm = graded_membership(cone.base.x[i], cone.ideal, true);
      xm.certificate.target = "x" + std::to_string(i + 1) + " in I_" + std::to_string(n);
      record(xm.certificate);
    }
  }
  if (checks.count("spinor")) {
    const Mode mode = pick_mode(cfg, n == 4 ? Mode::Exact : Mode::Probabilistic);
    const IndexSet rows = default_spinor_rows(n);
    const auto ks = quoted_spinor_indices(n);
    json reps = json::array();
    std::size_t verified = 0;
    for (int j = 0; j < n; ++j) {
      auto rep = verify_spinor(cone, rows, ks[j], cone.psi0(0, j), mode, cfg.trials, cfg.field, true);
      rep.candidate_name = "g" + std::to_string(j + 1);
      rep.certificate.target = "minor " + ks[j].to_string() + " = +-g" + std::to_string(j + 1) + "^2*x1";
      if (rep.verdict == SpinorVerdict::VerifiedSquare) ++verified;
      record(rep.certificate, {{"index", ks[j].to_string()}, {"sign", rep.sign}});
    }
    auto en = enumerate_spinors(cone, rows, default_spinor_candidates(cone), cfg.trials, cfg.field);
    Certificate e;
    e.kind = CertificateKind::Spinor;
    e.mode = Mode::Probabilistic;
    e.trials = cfg.trials;
    e.modulus = cfg.field.modulus;
    e.seed = cfg.field.seed;
    e.target = "index sets matching some g_j are exactly the quoted ones";
    std::vector<std::string> g_sets;
    for (const auto& r : en.reports)
      if (!r.candidate_name.empty() && r.candidate_name[0] == 'g') g_sets.push_back(r.index.to_string());
    std::vector<std::string> quoted;
    for (const auto& k : ks) quoted.push_back(k.to_string());
    std::sort(g_sets.begin(), g_sets.end());
    std::sort(quoted.begin(), quoted.end());
    e.pass = g_sets == quoted;
    e.detail = std::to_string(en.reports.size()) + " index sets: " + std::to_string(en.zero) + " zero, " +
               std::to_string(en.nonzero) + " nonzero, " + std::to_string(en.matched) + " matched a candidate";
    json summary = json::array();
    for (const auto& r : en.reports)
      if (r.verdict == SpinorVerdict::VerifiedSquare) summary.push_back({r.index.to_string(), r.candidate_name});
    record(e, {{"matched", summary}});
    log << verified << " verified spinor coordinates\n";
    report["verified_spinor_coordinates"] = verified;
  }
  report["pass"] = all_pass;
  emit(cfg, report.dump(1) + "\n", out);
  return all_pass ? kExitPass : kExitFail;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& log) {
  CLI::App app{"Generic doubling constructions and certificates"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string mode, parity, format = "json", checks;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "size of the skew matrix C (3..9)")->envname("GENDOUBLE_N");
    sub->add_option("--parity", parity, "odd or even; must agree with --n")->envname("GENDOUBLE_PARITY");
    sub->add_flag("--cone", cfg.cone, "use the doubled (mapping cone) complex");
    sub->add_option("--mode", mode, "exact or probabilistic (default: chosen per check)")->envname("GENDOUBLE_MODE");
    sub->add_option("--trials", cfg.trials, "sample points for probabilistic checks")->envname("GENDOUBLE_TRIALS");
    sub->add_option("--modulus", cfg.field.modulus, "prime modulus, 2^60 < p < 2^62")->envname("GENDOUBLE_MODULUS");
    sub->add_option("--seed", cfg.field.seed, "sampler seed")->envname("GENDOUBLE_SEED");
    sub->add_option("--out", cfg.out, "output path, - for stdout")->envname("GENDOUBLE_OUT");
  };
  auto* build = app.add_subcommand("build", "write the resolution (or cone) as JSON");
  auto* verify = app.add_subcommand("verify", "run certificates; exit 0 iff all pass");
  auto* exp = app.add_subcommand("export", "write JSON, a Macaulay2 script or LaTeX");
  for (auto* s : {build, verify, exp}) add_common(s);
  verify->add_option("--checks", checks, "comma list of complex,ranks,colon,equivariant,spinor,membership")
      ->envname("GENDOUBLE_CHECKS");
  verify->add_option("--in", cfg.input, "verify the complex stored in a JSON bundle");
  exp->add_option("--format", format, "json, cas-script or latex-matrix")->envname("GENDOUBLE_FORMAT");

  try {
    app.parse(argc, argv);
    if (!mode.empty()) cfg.mode = mode;
    if (!parity.empty()) {
      if (parity != "odd" && parity != "even") throw std::invalid_argument("--parity must be odd or even");
      cfg.parity = parity == "odd" ? Parity::Odd : Parity::Even;
    }
    if (format == "json") {
      cfg.format = ExportFormat::Json;
    } else if (format == "cas-script" || format == "cas") {
      cfg.format = ExportFormat::CasScript;
    } else if (format == "latex-matrix" || format == "latex") {
      cfg.format = ExportFormat::Latex;
    } else {
      throw std::invalid_argument("unknown --format '" + format + "'");
    }
    std::stringstream ss(checks);
    for (std::string item; std::getline(ss, item, ',');)
      if (!item.empty()) cfg.checks.push_back(item);
    cfg.validate();
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    log << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    log << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (build->parsed()) return cmd_build(cfg, out, log);
    if (verify->parsed()) return cmd_verify(cfg, out, log);
    return cmd_export(cfg, out, log);
  } catch (const AlgebraError& e) {
    log << "error: " << e.what() << "\n";
    return kExitFail;
  } catch (const std::exception& e) {
    log << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace gd
