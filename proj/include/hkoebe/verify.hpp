#pragma once

#include <string>
#include <vector>

#include "hkoebe/io.hpp"

namespace hkoebe {

struct CheckResult {
  std::string name;
  std::string expected;
  std::string got;
  bool pass = false;
};

/// Names of the built-in verification checks, in run order.
std::vector<std::string> verification_check_names();

/// Runs every check, or only `only` when non-empty. Throws DomainError for an
/// unknown name.
std::vector<CheckResult> run_verification(const std::string& only = {});

Json verification_to_json(const std::vector<CheckResult>& results);

}  // namespace hkoebe
