// rglab command line: batch experiment runner and report generator.

#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rglab/cli/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"rglab - reward-guided reinforcement learning laboratory"};
  app.require_subcommand(1);

  rglab::cli::RunOptions run_options;
  std::vector<std::uint64_t> seeds;
  std::string out_dir, evaluator, endpoint_config;

  auto* run = app.add_subcommand("run", "execute every run in a manifest, then report");
  run->add_option("--manifest", run_options.manifest_path, "experiment manifest (JSON)")
      ->required();
  run->add_option("--seeds", seeds, "override the manifest seed list")->delimiter(',');
  run->add_option("--out", out_dir, "override the manifest output directory");
  run->add_option("--evaluator", evaluator, "force evaluator kind: null|scripted|llm");
  run->add_option("--endpoint-config", endpoint_config,
                  "endpoint config file for llm evaluators");
  run->add_option("--jobs", run_options.jobs, "parallel seed workers")->default_val(1);

  std::string records_dir, report_manifest;
  auto* report = app.add_subcommand("report", "regenerate reports from stored run records");
  report->add_option("--records", records_dir, "records directory")->required();
  report->add_option("--manifest", report_manifest, "manifest providing the pairings");

  std::string oracle_env, oracle_out = "oracle.csv";
  auto* oracle = app.add_subcommand("oracle-dump", "write a scripted oracle's decision table");
  oracle->add_option("--env", oracle_env, "cartpole|blackjack|watchrepair|chockale")->required();
  oracle->add_option("--out", oracle_out, "output CSV path");

  std::string validate_manifest;
  auto* validate = app.add_subcommand("validate", "check a manifest without running it");
  validate->add_option("--manifest", validate_manifest, "experiment manifest (JSON)")->required();

  std::string reference_out = "-";
  auto* reference =
      app.add_subcommand("config-reference", "write the manifest reference with all defaults");
  reference->add_option("--out", reference_out, "output path, or - for stdout");

  CLI11_PARSE(app, argc, argv);

  if (*run) {
    if (!seeds.empty()) run_options.seeds_override = seeds;
    if (!out_dir.empty()) run_options.output_dir_override = out_dir;
    if (!evaluator.empty()) run_options.evaluator_override = evaluator;
    if (!endpoint_config.empty()) run_options.endpoint_config_path = endpoint_config;
    return rglab::cli::cmd_run(run_options);
  }
  if (*report) return rglab::cli::cmd_report(records_dir, report_manifest);
  if (*oracle) return rglab::cli::cmd_oracle_dump(oracle_env, oracle_out);
  if (*validate) return rglab::cli::cmd_validate(validate_manifest);
  if (*reference) return rglab::cli::cmd_config_reference(reference_out);
  return 1;
}
