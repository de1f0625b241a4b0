#pragma once
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

namespace cosetcat {

using Json = nlohmann::ordered_json;

// One verified identity: how many instances were checked and, on failure,
// concrete witnesses (only the first few are kept; `failures` counts all).
struct CheckResult {
  std::string identity;
  bool passed = true;
  long checked = 0;
  long failures = 0;
  std::vector<Json> witnesses;

  Json to_json() const;
};

struct Report {
  std::vector<CheckResult> checks;

  bool all_passed() const;
  const CheckResult* find(const std::string& identity) const;
  void append(const Report& other);
  Json to_json() const;
  std::string to_markdown() const;
};

// Sweep helper: call expect() per instance; witnesses are built lazily so the
// passing path stays cheap.
class CheckBuilder {
public:
  static constexpr int kMaxWitnesses = 5;

  explicit CheckBuilder(std::string identity) { result_.identity = std::move(identity); }

  void expect(bool ok, const std::function<Json()>& witness) {
    ++result_.checked;
    if (ok) return;
    result_.passed = false;
    ++result_.failures;
    if (static_cast<int>(result_.witnesses.size()) < kMaxWitnesses)
      result_.witnesses.push_back(witness());
  }

  void expect(bool ok) {
    expect(ok, [] { return Json(nullptr); });
  }

  CheckResult done() { return std::move(result_); }

private:
  CheckResult result_;
};

} // namespace cosetcat
