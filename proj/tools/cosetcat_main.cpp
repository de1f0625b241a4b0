#include <CLI11.hpp>

#include "cosetcat/suites.hpp"

#include <iostream>

using namespace cosetcat;

namespace {

int error_exit(const Error& e) {
  std::cerr << "error: " << e.what() << "\n";
  switch (e.code) {
    case ErrCode::InvalidInput:
    case ErrCode::MissingHopfData:
    case ErrCode::DuplicateLabel:
    case ErrCode::NotAGroup:
    case ErrCode::NotATransversal:
      return 2;
    default:
      return 1; // a mathematical precondition failed while verifying
  }
}

void emit(const std::vector<SuiteResult>& results, const RunConfig& cfg,
          const std::string& format) {
  if (format == "md")
    std::cout << run_report_markdown(results, cfg);
  else
    std::cout << run_report_json(results, cfg).dump(2) << "\n";
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification harness for coset matched pairs, the algebra A, "
               "the braided double D and their morphism calculus"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string format = "json";
  std::string suite_id, example;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--fixture", cfg.fixture, "builtin fixture: d6 or s3");
    cmd->add_option("--group", cfg.group_file, "group spec JSON file");
    cmd->add_option("--subgroup", cfg.subgroup,
                    "subgroup labels (override the group file)");
    cmd->add_option("--transversal", cfg.transversal, "transversal labels");
    cmd->add_option("--seed", cfg.seed, "seed for sampled checks");
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "md"}));
    cmd->add_option("--hopf-data", cfg.hopf_data, "Hopf structure JSON for D");
    cmd->add_option("--tau-tilde", cfg.tau_tilde, "cocycle table JSON for D");
  };

  CLI::App* verify = app.add_subcommand("verify", "run one verification suite");
  verify->add_option("suite", suite_id, "suite id (see `report` for the full list)")
      ->required();
  add_common(verify);

  CLI::App* reproduce =
      app.add_subcommand("reproduce", "re-derive a worked example table");
  reproduce->add_option("example", example, "example id: d6")->required();
  reproduce->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "md"}));

  CLI::App* hopf = app.add_subcommand("hopf", "checks on supplied Hopf data");
  CLI::App* hopf_verify =
      hopf->add_subcommand("verify", "verify Hopf data for the double D");
  add_common(hopf_verify);
  hopf->require_subcommand(1);

  CLI::App* report = app.add_subcommand("report", "run every registered suite");
  add_common(report);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) {
      std::vector<SuiteResult> results = {run_suite(suite_id, cfg)};
      emit(results, cfg, format);
      return verdict_exit_code(results);
    }
    if (reproduce->parsed()) {
      if (example != "d6")
        fail(ErrCode::InvalidInput, "unknown example '" + example + "'; try d6");
      if (format == "md") {
        std::cout << reproduce_d6_markdown();
        return reproduce_d6_ok(reproduce_d6_json()) ? 0 : 1;
      }
      Json j = reproduce_d6_json();
      std::cout << j.dump(2) << "\n";
      return reproduce_d6_ok(j) ? 0 : 1;
    }
    if (hopf_verify->parsed()) {
      if (cfg.hopf_data.empty())
        fail(ErrCode::MissingHopfData,
             "hopf verify needs --hopf-data <file> with the coproduct, counit "
             "and antipode of D");
      std::vector<SuiteResult> results = {run_suite("hopf-double", cfg)};
      emit(results, cfg, format);
      return verdict_exit_code(results);
    }
    // report
    std::vector<SuiteResult> results;
    for (const std::string& id : suite_ids()) results.push_back(run_suite(id, cfg));
    emit(results, cfg, format);
    return verdict_exit_code(results);
  } catch (const Error& e) {
    return error_exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
