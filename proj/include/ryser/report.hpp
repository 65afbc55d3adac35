#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace ryser {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;

  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

// Outcome of one CLI run. JSON layout (schema 1):
//   {"schema": 1, "command": "...", "input_fingerprint": "<16 hex>" or "",
//    "outputs": {...}, "timings_ms": {"<phase>": <number>},
//    "checks": [{"name": "...", "passed": true, "detail": "..."}]}
struct RunReport {
  int schema = 1;
  std::string command;
  std::string input_fingerprint;
  nlohmann::json outputs = nlohmann::json::object();
  std::map<std::string, double> timings_ms;
  std::vector<CheckResult> checks;

  bool all_passed() const;
  friend bool operator==(const RunReport&, const RunReport&) = default;
};

// FNV-1a 64-bit hash of the bytes, as 16 lowercase hex digits.
std::string fingerprint(std::string_view bytes);

nlohmann::json to_json(const RunReport& report);
// Throws InputError on a missing key, a wrong type or an unknown schema.
RunReport report_from_json(const nlohmann::json& j);
// Indented human-readable rendering.
std::string to_text(const RunReport& report);

}  // namespace ryser
