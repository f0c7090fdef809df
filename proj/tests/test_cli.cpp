#include <doctest.h>

#include <json.hpp>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "brauer/bounds.hpp"
#include "brauer/report_json.hpp"

using namespace brauer;
using nlohmann::json;

namespace {

struct CliResult {
  int code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args, const std::string& env_prefix = "") {
  const std::string cmd = env_prefix + CLI_BIN " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream out(path);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("bound command text output") {
  const CliResult r = run_cli("bound --k-degree 1 --d -1 --delta 1/2");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "sharp bound = 9800"));
  CHECK(contains(r.out, "35/8"));
  CHECK(contains(r.out, "crude bound = 118098"));
  CHECK(contains(r.out, "delta bound (delta = 1/2) = 118098"));
}

TEST_CASE("bound with an invariants file") {
  const auto path = write_temp("brauer_trivial.json",
                               R"({"deg_E":2,"h_E":1,"h_F":1,"unit_index":1,
                                   "omega_dEF":0,"omega_dEF2":0,"norm_dEF2":1,"norm_rad_dEF":1})");
  const CliResult r = run_cli("bound --k-degree 1 --invariants " + path.string());
  CHECK(r.code == 0);
  CHECK(contains(r.out, "sharp bound = 9 "));
  std::filesystem::remove(path);

  const CliResult bad = run_cli("bound --k-degree 1 --invariants /nonexistent.json");
  CHECK(bad.code == 2);

  const auto unk = write_temp("brauer_unknown.json", R"({"deg_E":2,"bogus":1})");
  CHECK(run_cli("bound --invariants " + unk.string()).code == 2);
  std::filesystem::remove(unk);
}

TEST_CASE("bound requires exactly one field source") {
  CHECK(run_cli("bound --k-degree 1").code == 2);
  const auto path = write_temp("brauer_qi.json",
                               R"({"deg_E":2,"h_E":1,"h_F":1,"unit_index":2,
                                   "omega_dEF":1,"omega_dEF2":1,"norm_dEF2":4,"norm_rad_dEF":2})");
  CHECK(run_cli("bound --d -1 --invariants " + path.string()).code == 2);
  std::filesystem::remove(path);
}

TEST_CASE("bound JSON round-trips bit-exactly") {
  const CliResult r = run_cli("bound --k-degree 2 --d -5 --delta 1/2 --delta 1/10 --format json");
  REQUIRE(r.code == 0);
  const json parsed = json::parse(r.out);

  // Recompute everything from the embedded invariants and compare fields.
  const CMFieldInvariants inv = invariants_from_json(parsed.at("invariants"));
  std::vector<Rational> deltas;
  for (const auto& e : parsed.at("delta_bounds")) {
    deltas.push_back(parse_rational(e.at("delta").get<std::string>()));
  }
  const BoundReport recomputed = bound_report(parsed.at("k_degree").get<int>(), inv, deltas,
                                              parsed.at("precision_bits").get<int>());
  const json expected = bound_report_to_json(recomputed);
  for (const auto& [key, value] : expected.items()) {
    CAPTURE(key);
    CHECK(parsed.at(key) == value);
  }
}

TEST_CASE("search command") {
  const CliResult r = run_cli("search --k-degree 1 --d -1");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "max norm = 800"));
  CHECK(contains(r.out, "2^5 (ramified"));
  CHECK(contains(r.out, "sharp bound = 9800"));

  const CliResult j = run_cli("search --k-degree 1 --d -1 --format json");
  REQUIRE(j.code == 0);
  const json parsed = json::parse(j.out);
  CHECK(parsed.at("norm") == "800");
  CHECK(parsed.at("feasible") == true);
  CHECK(parsed.at("sharp_bound") == "9800");
  CHECK(parsed.at("witness").size() == 2);

  CHECK(run_cli("search --k-degree 1 --d -4").code == 2);  // not squarefree
  const auto path = write_temp("brauer_any.json", "{}");
  CHECK(run_cli("search --k-degree 1 --invariants " + path.string()).code == 2);
  std::filesystem::remove(path);

  const CliResult inf = run_cli("search --k-degree 1 --d -23");
  CHECK(inf.code == 0);
  CHECK(contains(inf.out, "infeasible"));
}

TEST_CASE("scan command") {
  const CliResult csv = run_cli("scan --d-min -8 --d-max -5 --k-degree 1 --format csv");
  REQUIRE(csv.code == 0);
  CHECK(contains(csv.out, "d,h,ME_squared,sharp_bound_ceil,crude_bound_ceil,search_norm\n"));
  CHECK(contains(csv.out, "-5,2,64,12250,65610,\n"));
  CHECK(contains(csv.out, "-6,"));
  CHECK(contains(csv.out, "-7,"));
  CHECK(!contains(csv.out, "-8,"));  // not squarefree
  // Rows in descending d order.
  CHECK(csv.out.find("-5,") < csv.out.find("-6,"));
  CHECK(csv.out.find("-6,") < csv.out.find("-7,"));

  // Deterministic across runs.
  const CliResult again = run_cli("scan --d-min -8 --d-max -5 --k-degree 1 --format csv");
  CHECK(again.out == csv.out);

  const CliResult with_search =
      run_cli("scan --d-min -5 --d-max -5 --k-degree 1 --format csv --search");
  CHECK(contains(with_search.out, "-5,2,64,12250,65610,1440\n"));

  const CliResult single = run_cli("scan --d-min -1 --d-max -1 --k-degree 1 --format csv");
  CHECK(contains(single.out, "-1,1,256,9800,118098,\n"));

  CHECK(run_cli("scan --d-min -3 --d-max -5").code == 2);   // min > max
  CHECK(run_cli("scan --d-min -3 --d-max 1").code == 2);    // max not negative
  CHECK(run_cli("scan --d-min -3 --d-max -3 --format csv --search").code == 0);
}

TEST_CASE("scalar commands") {
  const CliResult ld = run_cli("ldelta --delta 1/10 --verbose");
  CHECK(ld.code == 0);
  CHECK(contains(ld.out, "L_delta = 2"));
  CHECK(contains(ld.out, "Psi(L_delta) = 35/8"));
  CHECK(contains(ld.out, "sieve_limit = "));
  CHECK(contains(ld.out, "search_steps = "));

  CHECK(contains(run_cli("psi --n 2").out, "35/8"));
  CHECK(contains(run_cli("phi --n 3").out, "phi_exp(3) = 48"));
  CHECK(contains(run_cli("phiinv --Q 16 --deg 2").out, "phi_inverse = 2"));
  CHECK(contains(run_cli("phiinv --Q 16").out, "phi_inverse = 2"));
  CHECK(contains(run_cli("phiinv --t 0").out, "phi_inverse = 0"));

  CHECK(run_cli("ldelta --delta 0").code == 2);
  CHECK(run_cli("ldelta --delta abc").code == 2);
  CHECK(run_cli("psi --n -2").code == 2);
  CHECK(run_cli("phiinv --Q 16 --t 1").code == 2);
  CHECK(run_cli("phiinv").code == 2);
}

TEST_CASE("format and exit-code policy") {
  CHECK(run_cli("nonsense").code == 2);
  CHECK(run_cli("").code == 2);
  CHECK(run_cli("bound --d -1 --format csv").code == 2);   // csv is scan-only
  CHECK(run_cli("bound --d -1 --format wat").code == 2);
  CHECK(run_cli("search --d -1 --format csv").code == 2);

  // stdout carries only the report: error output goes to stderr.
  const CliResult err = run_cli("search --k-degree 1 --d -4");
  CHECK(err.out.empty());
}

TEST_CASE("precision environment override") {
  const CliResult r = run_cli("bound --d -1 --format json", "BRAUER_BOUND_PRECISION=64 ");
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out).at("precision_bits") == 64);

  // Explicit flag wins over the environment.
  const CliResult flag =
      run_cli("bound --d -1 --format json --precision-bits 96", "BRAUER_BOUND_PRECISION=64 ");
  REQUIRE(flag.code == 0);
  CHECK(json::parse(flag.out).at("precision_bits") == 96);
}
