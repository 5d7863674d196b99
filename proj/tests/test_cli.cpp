#include <catch_amalgamated.hpp>

#include "sga/cli.hpp"

#include <sstream>

using namespace sga;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("verify passes with exit code zero") {
  const auto r = run({"verify", "--dim", "32"});
  CHECK(r.code == exit_ok);
  CHECK(r.out.find("result: PASS") != std::string::npos);
  CHECK(r.out.find("casimir eigenvalue: 3/16") != std::string::npos);
  CHECK(r.out.find("FAIL ") == std::string::npos);
}

TEST_CASE("verify JSON is byte-identical across runs and parses back") {
  const auto first = run({"verify", "--dim", "24", "--format", "json"});
  const auto second = run({"verify", "--dim", "24", "--format", "json"});
  REQUIRE(first.code == exit_ok);
  CHECK(first.out == second.out);
  const Report parsed = report_from_json(nlohmann::json::parse(first.out));
  CHECK(parsed.passed());
  CHECK(parsed.casimir == make_rational(3, 16));
  CHECK(to_json(parsed).dump(2) + "\n" == first.out);
}

TEST_CASE("truncations too small for the quartic check are usage errors") {
  const auto r = run({"verify", "--dim", "6"});
  CHECK(r.code == exit_usage);
  CHECK(r.err.find("dim") != std::string::npos);
  CHECK(run({"verify", "--dim", "0"}).code == exit_usage);
}

TEST_CASE("bad arguments are usage errors") {
  CHECK(run({}).code == exit_usage);
  CHECK(run({"frobnicate"}).code == exit_usage);
  CHECK(run({"closure", "--set", "K3,Bogus"}).code == exit_usage);
  CHECK(run({"closure", "--mode", "sideways"}).code == exit_usage);
  CHECK(run({"spectrum", "--format", "xml"}).code == exit_usage);
  CHECK(run({"spectrum", "--hbar-omega", "-1"}).code == exit_usage);
  CHECK(run({"orbit", "--seed", "63"}).code == exit_usage);
  CHECK(run({"closure", "--set", "K3,K3"}).code == exit_usage);
}

TEST_CASE("help exits cleanly") {
  const auto r = run({"--help"});
  CHECK(r.code == exit_ok);
  CHECK(r.out.find("verify") != std::string::npos);
}

TEST_CASE("closure subcommand") {
  const auto graded = run({"closure"});
  CHECK(graded.code == exit_ok);
  CHECK(graded.out.find("dimension: 5") != std::string::npos);

  const auto plain = run({"closure", "--mode", "commutator-only"});
  CHECK(plain.out.find("dimension: 4") != std::string::npos);
  CHECK(plain.out.find("added: 1") != std::string::npos);

  const auto so21 = run({"closure", "--set", "so21", "--format", "json"});
  const auto j = nlohmann::json::parse(so21.out);
  CHECK(j.at("closure").at("dimension") == 3);
  CHECK(j.at("closure").at("added").empty());
}

TEST_CASE("closures over the bound exit with the not-closed status") {
  // The odd doublet needs five elements to close.
  const auto r = run({"closure", "--set", "Q,Qdag", "--max-dim", "3"});
  CHECK(r.code == exit_not_closed);
  CHECK(r.err.find("max_dim = 3") != std::string::npos);
}

TEST_CASE("orbit subcommand") {
  const auto so21 = run({"orbit", "--set", "so21", "--format", "json"});
  CHECK(so21.code == exit_ok);
  const auto j = nlohmann::json::parse(so21.out);
  CHECK(j.at("orbits")[0].at("orbit_count") == 2);
  CHECK(j.at("orbits")[0].at("trusted") == 60);

  const auto osp = run({"orbit", "--seed", "7"});
  CHECK(osp.out.find("orbits: 1 (complete orbit)") != std::string::npos);
}

TEST_CASE("structure subcommand") {
  const auto r = run({"structure"});
  CHECK(r.code == exit_ok);
  CHECK(r.out.find("{Q,Qdag} = 2 K3") != std::string::npos);
  CHECK(r.out.find("[K+,K-] = -2 K3") != std::string::npos);
  CHECK(r.out.find("[K-,K+] = 2 K3  (mirrored)") != std::string::npos);
}

TEST_CASE("spectrum CSV") {
  const auto r = run({"spectrum", "--dim", "4"});
  CHECK(r.code == exit_ok);
  CHECK(r.out ==
        "n,E,k3,parity,norm_plus,norm_minus\n"
        "0,0.5,1/4,+,1/2,0\n"
        "1,1.5,3/4,-,3/2,0\n"
        "2,2.5,5/4,+,3,1/2\n"
        "3,3.5,7/4,-,5,3/2\n");
  const auto scaled = run({"spectrum", "--dim", "2", "--hbar-omega", "2"});
  CHECK(scaled.out.find("0,1,1/4,+") != std::string::npos);
}

TEST_CASE("a report with a failing check maps to exit code one") {
  // The contract is exercised through Report::passed, which run_cli maps onto the exit status.
  Report r;
  r.checks.push_back({"x", "y", CheckMode::numeric, CheckStatus::fail, 1.0, "", ""});
  r.checks.push_back({"z", "y", CheckMode::numeric, CheckStatus::informational, std::nullopt, "", ""});
  CHECK_FALSE(r.passed());
  r.checks.front().status = CheckStatus::pass;
  CHECK(r.passed());
}

TEST_CASE("a tolerance below round-off fails the numeric checks") {
  const auto r = run({"verify", "--dim", "32", "--tol", "1e-30"});
  CHECK(r.code == exit_check_failed);
  CHECK(r.out.find("result: FAIL") != std::string::npos);
}
