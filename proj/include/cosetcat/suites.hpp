#pragma once
#include "cosetcat/group.hpp"
#include "cosetcat/report.hpp"

namespace cosetcat {

// What the established results predict for one report check under the
// current configuration. Observed outcomes are reported but never gate the
// exit code; MustFail makes an expected counterexample a first-class
// assertion instead of a skipped test.
enum class Expectation { MustPass, MustFail, Observed };
const char* expectation_name(Expectation e);

struct RunConfig {
  std::string fixture = "d6"; // builtin id; ignored when group_file is set
  std::string group_file;     // GroupSpec JSON path
  std::vector<std::string> subgroup, transversal; // label overrides
  unsigned long seed = 0;
  std::string hopf_data; // HopfData JSON path (hopf-double suite)
  std::string tau_tilde; // cocycle table JSON path

  // True when the selected source is the named builtin fixture. Expectation
  // tables only apply to configurations we have established results for.
  bool builtin(const char* id) const;
};

// The coset system the config selects. Unknown fixture ids throw
// Error{InvalidInput}; file problems surface as the loader's errors.
CosetSystem resolve_system(const RunConfig& cfg);

struct CheckVerdict {
  std::string identity;
  Expectation expected = Expectation::MustPass;
  bool passed = false; // raw outcome of the check
  bool ok = false;     // outcome matches the expectation
  long checked = 0;
  long failures = 0;
  std::vector<Json> witnesses;

  Json to_json() const;
};

struct SuiteResult {
  std::string id;
  std::string statement; // the claim this suite certifies
  bool skipped = false;
  std::string skip_reason;
  std::vector<CheckVerdict> verdicts;

  bool ok() const; // every verdict ok; a skipped suite is vacuously ok
  Json to_json() const;
};

// Registration order; report runs all of these.
const std::vector<std::string>& suite_ids();

// Runs one suite. Unknown ids throw Error{InvalidInput}. "hopf-double"
// without cfg.hopf_data comes back skipped; everything else runs.
SuiteResult run_suite(const std::string& id, const RunConfig& cfg);

Json run_report_json(const std::vector<SuiteResult>& results, const RunConfig& cfg);
std::string run_report_markdown(const std::vector<SuiteResult>& results,
                                const RunConfig& cfg);
// 0 when every suite is ok, 1 otherwise.
int verdict_exit_code(const std::vector<SuiteResult>& results);

// The D6 worked example: all 1296 delta-condition rows with the closed-form
// comparison and the commutativity verdict.
Json reproduce_d6_json();
std::string reproduce_d6_markdown();
bool reproduce_d6_ok(const Json& j);

} // namespace cosetcat
