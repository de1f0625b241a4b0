#include "cosetcat/report.hpp"

#include <sstream>

namespace cosetcat {

Json CheckResult::to_json() const {
  Json j;
  j["identity"] = identity;
  j["status"] = passed ? "pass" : "fail";
  j["checked"] = checked;
  j["witnesses"] = witnesses;
  if (failures > 0) j["failures"] = failures;
  return j;
}

bool Report::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

const CheckResult* Report::find(const std::string& identity) const {
  for (const auto& c : checks)
    if (c.identity == identity) return &c;
  return nullptr;
}

void Report::append(const Report& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

Json Report::to_json() const {
  Json arr = Json::array();
  for (const auto& c : checks) arr.push_back(c.to_json());
  return arr;
}

std::string Report::to_markdown() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << "- " << (c.passed ? "PASS" : "FAIL") << " `" << c.identity << "` (checked "
       << c.checked << ")";
    if (!c.passed) {
      os << " failures=" << c.failures;
      if (!c.witnesses.empty()) os << " witness=" << c.witnesses.front().dump();
    }
    os << "\n";
  }
  return os.str();
}

} // namespace cosetcat
