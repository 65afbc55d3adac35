#include "ryser/report.hpp"

#include <cstdint>
#include <cstdio>
#include <sstream>

#include "ryser/error.hpp"

namespace ryser {

bool RunReport::all_passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

std::string fingerprint(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

nlohmann::json to_json(const RunReport& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  nlohmann::json timings = nlohmann::json::object();
  for (const auto& [phase, ms] : report.timings_ms) timings[phase] = ms;
  return {{"schema", report.schema},
          {"command", report.command},
          {"input_fingerprint", report.input_fingerprint},
          {"outputs", report.outputs},
          {"timings_ms", timings},
          {"checks", checks}};
}

RunReport report_from_json(const nlohmann::json& j) {
  try {
    RunReport r;
    r.schema = j.at("schema").get<int>();
    if (r.schema != 1) throw InputError("unknown report schema " + std::to_string(r.schema));
    r.command = j.at("command").get<std::string>();
    r.input_fingerprint = j.at("input_fingerprint").get<std::string>();
    r.outputs = j.at("outputs");
    for (const auto& [phase, ms] : j.at("timings_ms").items()) r.timings_ms[phase] = ms.get<double>();
    for (const auto& c : j.at("checks")) {
      r.checks.push_back({c.at("name").get<std::string>(), c.at("passed").get<bool>(), c.at("detail").get<std::string>()});
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed report: ") + e.what());
  }
}

namespace {

void render(std::ostringstream& out, const nlohmann::json& value, int indent) {
  const std::string pad(indent, ' ');
  for (const auto& [key, item] : value.items()) {
    if (item.is_object()) {
      out << pad << key << ":\n";
      render(out, item, indent + 2);
    } else if (item.is_array() && !item.empty() && item.front().is_object()) {
      out << pad << key << ":\n";
      for (const auto& element : item) {
        out << pad << "  -\n";
        render(out, element, indent + 4);
      }
    } else if (item.is_string()) {
      out << pad << key << ": " << item.get<std::string>() << "\n";
    } else {
      out << pad << key << ": " << item.dump() << "\n";
    }
  }
}

}  // namespace

std::string to_text(const RunReport& report) {
  std::ostringstream out;
  out << "command: " << report.command << "\n";
  if (!report.input_fingerprint.empty()) out << "input: " << report.input_fingerprint << "\n";
  render(out, report.outputs, 0);
  for (const auto& c : report.checks) {
    out << (c.passed ? "[ok]   " : "[FAIL] ") << c.name;
    if (!c.detail.empty()) out << ": " << c.detail;
    out << "\n";
  }
  return out.str();
}

}  // namespace ryser
