#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nbj/certificate.hpp"
#include "nbj/params.hpp"

#include "json.hpp"

namespace nbj {

enum class CheckId {
  axioms,
  spectra,
  ppoly,
  qpoly,
  recurrences,
  difference,
  bispectral,
  terwilliger,
  orthopoly,
};

/// Parses check names ("all" expands to every check); throws
/// std::invalid_argument on unknown names.
std::set<CheckId> parse_checks(const std::vector<std::string>& names);
std::string check_name(CheckId id);

struct RunConfig {
  int r = 3;
  int k = 0;
  int n = 0;
  std::set<CheckId> checks = parse_checks({"all"});
  std::size_t max_vertices = 5000;
  int base_count = 3;
  bool include_tables = false;
  std::optional<std::string> output_path;
};

struct RunResult {
  nlohmann::ordered_json report;
  int exit_code = 0;  // 0 = all pass, 2 = some check failed
};

nlohmann::ordered_json certificate_to_json(const Certificate& cert);

/// Executes the selected checks in dependency order (axioms -> spectra ->
/// the rest), emits the JSON report, and returns exit code 0 iff every
/// selected check passed.  Usage and resource errors are thrown
/// (std::invalid_argument / ResourceError) and map to exit code 1 in the CLI.
RunResult run(const RunConfig& config);

}  // namespace nbj
