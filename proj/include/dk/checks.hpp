#pragma once

#include "dk/conventions.hpp"
#include "dk/report.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dk {

struct CheckConfig {
  /// Objects for a single instance; unset means each check's defaults.
  std::optional<std::vector<std::string>> objects;
  int max_level = 3;
  /// Unset: each check runs on the models where its identity is expected.
  std::optional<bool> normalized;
  std::uint64_t seed = 1;
  MonoidalConventions conventions{};
};

struct CheckInfo {
  std::string suite;
  std::string name;
  int arity = 0;
  std::string summary;
  std::vector<std::vector<std::string>> default_objects;
};

const std::vector<std::string>& suite_names();
/// Every check in catalog order.
std::vector<CheckInfo> check_catalog();

/// Runs the checks of `suite` ("all" for every suite), or only `check`.
/// With explicit objects, only checks of matching arity run.
/// Throws ParseError for unknown names, malformed objects or arity mismatches.
std::vector<VerificationReport> run_checks(const std::string& suite, const std::optional<std::string>& check,
                                           const CheckConfig& config);

}  // namespace dk
