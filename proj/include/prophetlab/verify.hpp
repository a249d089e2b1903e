#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace prophetlab {

struct Check {
  std::string name;
  bool passed = false;
  nlohmann::json detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;
  bool passed() const;
};

nlohmann::json to_json(const SuiteReport& report);

struct VerifyOptions {
  std::uint64_t seed = 1;
  std::size_t n_cases = 0;  // 0: suite default
};

std::vector<std::string> suite_names();

/// Throws std::invalid_argument for an unknown suite.
SuiteReport run_suite(const std::string& suite, const VerifyOptions& options);

}  // namespace prophetlab
