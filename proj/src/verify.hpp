#pragma once

#include <json.hpp>

#include "engine.hpp"

namespace wtrop {

struct VerifyCase {
  std::string name;
  std::string expected;
  std::string got;
  bool pass = false;
};

struct VerifyReport {
  std::string suite;
  std::vector<VerifyCase> cases;
  bool pass = false;
};

// Suites: "paper" (known exact values), "invariance" (direction and marking
// independence), "oracle" (recursion cross-checks and the brute-force
// completer). Throws std::invalid_argument on an unknown suite name.
VerifyReport run_verify_suite(const std::string& suite, int jobs);

nlohmann::json to_json(const VerifyReport& report);
std::string verify_report_text(const VerifyReport& report);

}  // namespace wtrop
