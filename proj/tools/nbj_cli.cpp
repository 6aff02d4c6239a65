#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nbj/errors.hpp"
#include "nbj/orthopoly.hpp"
#include "nbj/report.hpp"

namespace {

int run_verify(int r, int k, int n, const std::vector<std::string>& checks,
               std::size_t max_vertices, int bases, const std::string& json_path,
               bool tables) {
  nbj::RunConfig config;
  config.r = r;
  config.k = k;
  config.n = n;
  config.checks = nbj::parse_checks(checks);
  config.max_vertices = max_vertices;
  config.base_count = bases;
  config.include_tables = tables;
  if (!json_path.empty()) config.output_path = json_path;

  nbj::RunResult result = nbj::run(config);
  if (json_path.empty()) {
    std::cout << result.report.dump(2) << "\n";
  } else {
    for (const auto& cert : result.report["certificates"]) {
      std::cout << cert["check"].get<std::string>() << ": "
                << cert["verdict"].get<std::string>() << "\n";
    }
  }
  return result.exit_code;
}

int run_poly_eval(const std::string& family, long i, long x, long N, long p) {
  nbj::Rational value;
  if (family == "krawtchouk") {
    value = nbj::krawtchouk(i, x, N, p);
  } else if (family == "eberlein") {
    value = nbj::eberlein(i, x, N, p);
  } else if (family == "hahn") {
    value = nbj::hahn(i, x, N, p);
  } else {
    throw std::invalid_argument("unknown family '" + family + "'");
  }
  std::cout << value.str() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verifier for the non-binary Johnson association scheme"};
  app.require_subcommand(1);

  int r = 3, k = 0, n = 0;
  std::vector<std::string> checks = {"all"};
  std::size_t max_vertices = 5000;
  int bases = 3;
  std::string json_path;
  bool tables = false;

  CLI::App* verify = app.add_subcommand("verify", "Build an instance and run checks");
  verify->add_option("--r", r, "alphabet size (r >= 3)")->required();
  verify->add_option("--k", k, "weight")->required();
  verify->add_option("--n", n, "word length")->required();
  verify->add_option("--checks", checks,
                     "comma-separated subset of axioms,spectra,ppoly,qpoly,recurrences,"
                     "difference,bispectral,terwilliger,orthopoly or 'all'")
      ->delimiter(',');
  verify->add_option("--max-vertices", max_vertices, "vertex-count guard");
  verify->add_option("--bases", bases, "number of base vertices for the dual checks");
  verify->add_option("--json", json_path, "write the JSON report to this path");
  verify->add_flag("--tables", tables, "include P/Q/valency/multiplicity/Krein tables");

  std::string family;
  long pi = 0, px = 0, pN = 0, pp = 0;
  CLI::App* poly = app.add_subcommand("poly", "Polynomial utilities");
  CLI::App* eval = poly->add_subcommand("eval", "Evaluate one polynomial exactly");
  eval->add_option("--family", family, "krawtchouk | eberlein | hahn")->required();
  eval->add_option("--i", pi, "degree")->required();
  eval->add_option("--x", px, "point")->required();
  eval->add_option("--N", pN, "size parameter")->required();
  eval->add_option("--p", pp, "family parameter")->required();
  poly->require_subcommand(1);

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) {
      return run_verify(r, k, n, checks, max_vertices, bases, json_path, tables);
    }
    return run_poly_eval(family, pi, px, pN, pp);
  } catch (const nbj::ResourceError& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return 1;
  } catch (const nbj::DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
