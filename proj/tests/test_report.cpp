#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <string>

#include "doctest.h"
#include "nbj/errors.hpp"
#include "nbj/report.hpp"

using namespace nbj;
using nlohmann::ordered_json;

namespace {

ordered_json masked(ordered_json report) {
  for (auto& cert : report["certificates"]) cert["wall_time_ms"] = 0;
  return report;
}

}  // namespace

TEST_CASE("check name parsing and dependency closure") {
  CHECK(parse_checks({"all"}).size() == 9);
  CHECK(parse_checks({"axioms", "qpoly"}).size() == 2);
  CHECK_THROWS_AS(parse_checks({"nonsense"}), std::invalid_argument);

  RunConfig config;
  config.r = 3;
  config.k = 2;
  config.n = 3;
  config.checks = parse_checks({"qpoly"});
  RunResult result = run(config);
  CHECK(result.exit_code == 0);
  // qpoly implies spectra implies axioms
  std::vector<std::string> names;
  for (const auto& cert : result.report["certificates"]) {
    names.push_back(cert["check"].get<std::string>());
  }
  CHECK(std::find(names.begin(), names.end(), "axioms") != names.end());
  CHECK(std::find(names.begin(), names.end(), "wilson-duality") != names.end());
  CHECK(std::find(names.begin(), names.end(), "q-polynomial-certification") != names.end());
}

TEST_CASE("full run on the boundary instance") {
  RunConfig config;
  config.r = 3;
  config.k = 2;
  config.n = 3;
  RunResult result = run(config);
  CHECK(result.exit_code == 0);
  CHECK(result.report["instance"]["v"] == "12");
  CHECK(result.report["domain"].size() == 5);
  for (const auto& cert : result.report["certificates"]) {
    CHECK(cert["verdict"] == "pass");
  }
}

TEST_CASE("qpoly fails on J_3(3,4) with the domain witness") {
  RunConfig config;
  config.r = 3;
  config.k = 3;
  config.n = 4;
  config.checks = parse_checks({"qpoly"});
  RunResult result = run(config);
  CHECK(result.exit_code == 2);
  bool witness_found = false;
  for (const auto& cert : result.report["certificates"]) {
    if (cert["check"] != "q-polynomial-certification") continue;
    CHECK(cert["verdict"] == "fail");
    for (const auto& w : cert["witnesses"]) {
      std::string note = w.value("note", "");
      if (note.find("(0,2) ≼ (2,1)") != std::string::npos &&
          note.find("∉ D") != std::string::npos) {
        witness_found = true;
      }
    }
  }
  CHECK(witness_found);
}

TEST_CASE("usage and resource errors") {
  RunConfig config;
  config.r = 2;
  config.k = 2;
  config.n = 4;
  CHECK_THROWS_AS(run(config), std::invalid_argument);

  RunConfig guard;
  guard.r = 3;
  guard.k = 3;
  guard.n = 6;
  guard.max_vertices = 10;
  guard.checks = parse_checks({"axioms"});
  CHECK_THROWS_AS(run(guard), ResourceError);
}

TEST_CASE("reports are byte-stable modulo timing") {
  RunConfig config;
  config.r = 3;
  config.k = 2;
  config.n = 4;
  config.checks = parse_checks({"axioms", "spectra", "qpoly"});
  config.include_tables = true;
  RunResult a = run(config);
  RunResult b = run(config);
  CHECK(masked(a.report).dump() == masked(b.report).dump());
  // tables serialize rationals as strings
  CHECK(a.report["tables"]["P"][0][0] == "1");
  for (const auto& row : a.report["tables"]["Q"]) {
    for (const auto& cell : row) CHECK(cell.is_string());
  }
}

TEST_CASE("orthopoly check is instance-independent and selectable") {
  RunConfig config;
  config.r = 5;
  config.k = 1;
  config.n = 2;
  config.checks = parse_checks({"orthopoly"});
  RunResult result = run(config);
  CHECK(result.exit_code == 0);
  CHECK(result.report["certificates"].size() == 1);
  CHECK(result.report["certificates"][0]["check"] == "orthopoly-grid");
}
