#pragma once

#include <chrono>
#include <map>
#include <optional>
#include <string>

#include <json.hpp>

namespace hyperoct {

struct VerificationReport {
  std::string check_name;
  std::map<std::string, std::string> params;
  // Supplementary values (e.g. a total computed three ways).
  std::map<std::string, std::string> details;
  std::optional<std::string> first_failure;
  std::chrono::duration<double> elapsed{0};

  bool passed() const noexcept { return !first_failure.has_value(); }

  void fail(std::string description) {
    if (!first_failure) first_failure = std::move(description);
  }
};

nlohmann::json to_json(const VerificationReport& report);
std::string to_text(const VerificationReport& report);

/// Runs body(report) and records wall time.
template <typename Body>
VerificationReport timed_check(std::string name, std::map<std::string, std::string> params, Body&& body) {
  VerificationReport report;
  report.check_name = std::move(name);
  report.params = std::move(params);
  auto start = std::chrono::steady_clock::now();
  body(report);
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

}  // namespace hyperoct
