#include "hyperoct/report.hpp"

#include <iomanip>
#include <sstream>

namespace hyperoct {

nlohmann::json to_json(const VerificationReport& report) {
  nlohmann::json j;
  j["check"] = report.check_name;
  j["params"] = report.params;
  j["passed"] = report.passed();
  j["first_failure"] = report.first_failure ? nlohmann::json(*report.first_failure) : nlohmann::json(nullptr);
  j["elapsed_seconds"] = report.elapsed.count();
  if (!report.details.empty()) j["details"] = report.details;
  return j;
}

std::string to_text(const VerificationReport& report) {
  std::ostringstream out;
  out << (report.passed() ? "PASS " : "FAIL ") << report.check_name;
  for (const auto& [key, value] : report.params) out << ' ' << key << '=' << value;
  out << " (" << std::fixed << std::setprecision(3) << report.elapsed.count() << " s)";
  for (const auto& [key, value] : report.details) out << "\n  " << key << " = " << value;
  if (report.first_failure) out << "\n  first failure: " << *report.first_failure;
  return out.str();
}

}  // namespace hyperoct
