#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "gendouble/cli.hpp"
#include "gendouble/serialize.hpp"

using namespace gd;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string log;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "gendouble");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, log;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, log);
  return {code, out.str(), log.str()};
}

std::vector<std::pair<std::size_t, std::size_t>> shapes(const json& bundle) {
  std::vector<std::pair<std::size_t, std::size_t>> s;
  for (const auto& m : bundle["matrices"]) s.emplace_back(m["rows"], m["cols"]);
  return s;
}

std::filesystem::path temp_path(const std::string& name) { return std::filesystem::temp_directory_path() / name; }

}  // namespace

TEST_CASE("build emits the expected shapes") {
  auto cone = run({"build", "--n", "5", "--cone"});
  REQUIRE(cone.code == kExitPass);
  using S = std::vector<std::pair<std::size_t, std::size_t>>;
  CHECK(shapes(json::parse(cone.out)) == S{{1, 9}, {9, 16}, {16, 9}, {9, 1}});
  auto base = run({"build", "--n", "4"});
  CHECK(shapes(json::parse(base.out)) == S{{1, 4}, {4, 7}, {7, 4}});
  CHECK(run({"build", "--n", "5", "--cone"}).out == cone.out);
}

TEST_CASE("JSON round-trip reproduces the matrices") {
  auto res = build_resolution(make_ring(4));
  auto c = build_cone(make_ring(4, true), res);
  MatrixBundle b{c.ring, {c.delta[0], c.delta[1], c.delta[2], c.delta[3], c.psi1}};
  auto back = bundle_from_json(json::parse(to_json(b).dump()));
  REQUIRE(back.matrices.size() == b.matrices.size());
  CHECK(*back.ring == *b.ring);
  for (std::size_t i = 0; i < b.matrices.size(); ++i) {
    CHECK(back.matrices[i] == b.matrices[i]);
    CHECK(back.matrices[i].name == b.matrices[i].name);
  }
  auto j = to_json(b);
  CHECK(j["ring"]["variables"].size() == 22);
  CHECK(j["ring"]["parity"] == "even");
  j["matrices"][0]["rows"] = 2;
  CHECK_THROWS(bundle_from_json(j));
}

TEST_CASE("export formats") {
  auto cas = run({"export", "--n", "5", "--cone", "--format", "cas-script"});
  REQUIRE(cas.code == kExitPass);
  const auto ring_line = cas.out.substr(cas.out.find("R = ZZ["));
  const auto vars = ring_line.substr(7, ring_line.find(", Degrees") - 7);
  CHECK(std::count(vars.begin(), vars.end(), ',') + 1 == 29);
  CHECK(cas.out.find("assert(delta2 * delta3 == 0);") != std::string::npos);
  auto tex = run({"export", "--n", "3", "--format", "latex-matrix"});
  const auto d3 = tex.out.substr(tex.out.find("% d3"));
  CHECK(d3.find("0 & c_{12} & c_{13} \\\\") != std::string::npos);
  CHECK(d3.find("u_{31} & u_{32} & u_{33}\n\\end{bmatrix}") != std::string::npos);
  CHECK(run({"export", "--n", "3", "--format", "pdf"}).code == kExitUsage);
}

TEST_CASE("verify subcommands") {
  auto v5 = run({"verify", "--n", "5", "--checks", "spinor", "--trials", "50"});
  CHECK(v5.code == kExitPass);
  auto j = json::parse(v5.out);
  CHECK(j["verified_spinor_coordinates"] == 5);
  CHECK(j["config"]["seed"] == kDefaultSeed);
  CHECK(v5.log.find("5 verified spinor coordinates") != std::string::npos);
  CHECK(run({"verify", "--n", "4", "--checks", "complex,colon"}).code == kExitPass);
  auto mem = run({"verify", "--n", "5", "--checks", "membership"});
  CHECK(mem.code == kExitPass);
  CHECK(mem.log.find("PASS membership: g1 not in J_5") != std::string::npos);
}

TEST_CASE("exit-code contract") {
  CHECK(run({"verify", "--n", "12"}).code == kExitUsage);
  CHECK(run({"verify", "--n", "5", "--parity", "even"}).code == kExitUsage);
  CHECK(run({"verify", "--n", "6", "--checks", "spinor"}).code == kExitUsage);
  CHECK(run({"verify", "--n", "5", "--checks", "bogus"}).code == kExitUsage);
  CHECK(run({"verify", "--n", "5", "--modulus", "1000003"}).code == kExitUsage);
  CHECK(run({"verify", "--n", "5", "--trials", "0"}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);

  // Mutation fixture: a perturbed entry makes the stored complex fail.
  const auto good = temp_path("gendouble_good.json");
  const auto bad = temp_path("gendouble_bad.json");
  REQUIRE(run({"build", "--n", "4", "--cone", "--out", good.string()}).code == kExitPass);
  CHECK(run({"verify", "--in", good.string(), "--checks", "complex,ranks", "--trials", "5"}).code == kExitPass);
  json j;
  std::ifstream(good) >> j;
  const std::size_t num_vars = j["ring"]["variables"].size();
  auto corrupt = j;
  corrupt["matrices"][1]["entries"][0][0].push_back(json::array({"1", std::vector<int>(num_vars, 0)}));
  std::ofstream(bad) << corrupt.dump();
  CHECK(run({"verify", "--in", bad.string()}).code == kExitFail);
  CHECK(run({"verify", "--in", bad.string(), "--mode", "probabilistic", "--trials", "5"}).code == kExitFail);
  auto malformed = j;
  malformed["matrices"][1]["entries"][0][0].push_back(json::array({"1", std::vector<int>(num_vars + 1, 0)}));
  std::ofstream(bad) << malformed.dump();
  CHECK(run({"verify", "--in", bad.string()}).code == kExitUsage);
  CHECK(run({"verify", "--in", "/nonexistent/bundle.json"}).code == kExitUsage);
  std::filesystem::remove(good);
  std::filesystem::remove(bad);
}

TEST_CASE("environment overrides") {
  ::setenv("GENDOUBLE_N", "4", 1);
  auto r = run({"build"});
  ::unsetenv("GENDOUBLE_N");
  CHECK(shapes(json::parse(r.out)).front().second == 4);
  CHECK(shapes(json::parse(r.out))[1].second == 7);
}
