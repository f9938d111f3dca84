#include "gendouble/serialize.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>

#include "gendouble/error.hpp"

namespace gd {

using nlohmann::json;

json to_json(const MatrixBundle& bundle) {
  const GenericRing& R = *bundle.ring;
  json out;
  out["ring"] = {{"n", R.n()}, {"parity", to_string(R.parity())}, {"extended", R.extended()}, {"variables", R.names()}};
  out["matrices"] = json::array();
  for (const auto& m : bundle.matrices) {
    if (!(m.ring() == R)) throw AlgebraError(ErrorKind::RingMismatch, "bundle matrix from another ring");
    if (m.domain() != CoeffDomain::Integer) throw AlgebraError(ErrorKind::DomainMismatch, "only integer matrices export");
    json entries = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
      json row = json::array();
      for (std::size_t c = 0; c < m.cols(); ++c) {
        json terms = json::array();
        for (const auto& t : m(r, c).terms()) {
          std::vector<int> exps(R.num_vars());
          for (std::size_t v = 0; v < exps.size(); ++v) exps[v] = t.mono.exponent(v);
          terms.push_back(json::array({t.coeff.get_str(), exps}));
        }
        row.push_back(std::move(terms));
      }
      entries.push_back(std::move(row));
    }
    json jm = {{"name", m.name}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
    if (!m.source.empty()) jm["source"] = m.source;
    if (!m.target.empty()) jm["target"] = m.target;
    out["matrices"].push_back(std::move(jm));
  }
  return out;
}

MatrixBundle bundle_from_json(const json& j) {
  try {
    const auto& jr = j.at("ring");
    RingPtr ring = make_ring(jr.at("n").get<int>(), jr.at("extended").get<bool>());
    if (jr.contains("variables") && jr.at("variables").get<std::vector<std::string>>() != ring->names()) {
      throw AlgebraError(ErrorKind::RingMismatch, "variable list does not match the generic ring");
    }
    MatrixBundle out{ring, {}};
    for (const auto& jm : j.at("matrices")) {
      const auto rows = jm.at("rows").get<std::size_t>();
      const auto cols = jm.at("cols").get<std::size_t>();
      PolyMatrix m(ring, rows, cols);
      m.name = jm.value("name", "");
      m.source = jm.value("source", "");
      m.target = jm.value("target", "");
      const auto& entries = jm.at("entries");
      if (entries.size() != rows) throw AlgebraError(ErrorKind::ShapeMismatch, "row count of " + m.name);
      for (std::size_t r = 0; r < rows; ++r) {
        if (entries[r].size() != cols) throw AlgebraError(ErrorKind::ShapeMismatch, "column count of " + m.name);
        for (std::size_t c = 0; c < cols; ++c) {
          std::vector<Term> terms;
          for (const auto& jt : entries[r][c]) {
            const auto exps = jt.at(1).get<std::vector<unsigned>>();
            if (exps.size() != ring->num_vars()) throw AlgebraError(ErrorKind::ShapeMismatch, "exponent vector length");
            Monomial mono;
            for (std::size_t v = 0; v < exps.size(); ++v) mono.set_exponent(v, exps[v]);
            terms.push_back({mono, mpz_class(jt.at(0).get<std::string>())});
          }
          m(r, c) = Poly::from_terms(ring, std::move(terms));
        }
      }
      out.matrices.push_back(std::move(m));
    }
    return out;
  } catch (const json::exception& e) {
    throw AlgebraError(ErrorKind::InvalidArgument, std::string("malformed matrix bundle: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw AlgebraError(ErrorKind::InvalidArgument, std::string("malformed coefficient: ") + e.what());
  }
}

json to_json(const Certificate& cert, bool with_points) {
  json j = {{"kind", to_string(cert.kind)},
            {"target", cert.target},
            {"mode", to_string(cert.mode)},
            {"verdict", cert.pass ? "pass" : "fail"},
            {"detail", cert.detail},
            {"wall_time_s", cert.wall_time_s}};
  if (cert.mode == Mode::Probabilistic) {
    j["trials"] = cert.trials;
    j["modulus"] = cert.modulus;
    j["seed"] = cert.seed;
    j["degree_bound"] = cert.degree_bound;
    j["per_point_bound"] = cert.per_point_bound;
    if (std::isfinite(cert.log2_failure_bound)) j["log2_failure_bound"] = cert.log2_failure_bound;
  }
  if (with_points && !cert.points.empty()) j["points"] = cert.points;
  return j;
}

json to_json(const SpinorReport& rep) {
  json j = {{"index", rep.index.to_string()}, {"verdict", to_string(rep.verdict)}, {"sign", rep.sign}};
  if (!rep.candidate_name.empty()) j["candidate"] = rep.candidate_name;
  if (rep.coordinate) j["coordinate"] = rep.coordinate->to_string();
  j["certificate"] = to_json(rep.certificate);
  return j;
}

namespace {

std::string m2_poly(const Poly& p) {
  // Canonical text uses '*' and '^', which Macaulay2 reads directly.
  return p.to_string();
}

std::string latex_var(const std::string& name) {
  if (name[0] == 'a') return "\\alpha_{" + name.substr(1) + "}";
  return name.substr(0, 1) + "_{" + name.substr(1) + "}";
}

}  // namespace

std::string poly_to_latex(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    mpz_class c = t.coeff;
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    c = abs(c);
    const bool unit = t.mono.is_one();
    if (c != 1 || unit) out += c.get_str();
    for (std::size_t v = 0; v < p.ring().num_vars(); ++v) {
      const unsigned e = t.mono.exponent(v);
      if (!e) continue;
      out += latex_var(p.ring().name(v));
      if (e > 1) out += "^{" + std::to_string(e) + "}";
    }
    first = false;
  }
  return out;
}

std::string to_latex(const PolyMatrix& m) {
  std::string out = "\\begin{bmatrix}\n";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out += " & ";
      out += poly_to_latex(m(r, c));
    }
    out += r + 1 < m.rows() ? " \\\\\n" : "\n";
  }
  return out + "\\end{bmatrix}\n";
}

std::string to_cas_script(const MatrixBundle& bundle, bool assert_complex) {
  const GenericRing& R = *bundle.ring;
  std::string s = "-- generic doubling data, n = " + std::to_string(R.n()) + "\n";
  s += "R = ZZ[";
  for (std::size_t v = 0; v < R.num_vars(); ++v) s += (v ? "," : "") + R.name(v);
  s += ", Degrees => {";
  for (std::size_t v = 0; v < R.num_vars(); ++v) s += (v ? "," : "") + std::to_string(R.weight(v));
  s += "}];\n";
  for (const auto& m : bundle.matrices) {
    s += m.name + " = matrix(R, {";
    for (std::size_t r = 0; r < m.rows(); ++r) {
      s += r ? ", {" : "{";
      for (std::size_t c = 0; c < m.cols(); ++c) s += (c ? ", " : "") + m2_poly(m(r, c));
      s += "}";
    }
    s += "});\n";
  }
  if (assert_complex) {
    for (std::size_t i = 0; i + 1 < bundle.matrices.size(); ++i) {
      s += "assert(" + bundle.matrices[i].name + " * " + bundle.matrices[i + 1].name + " == 0);\n";
    }
  }
  return s;
}

void write_file_atomic(const std::string& path, const std::string& content) {
  const std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out << content;
    if (!out.flush()) throw std::runtime_error("write to " + tmp.string() + " failed");
  }
  std::filesystem::rename(tmp, target);
}

}  // namespace gd
