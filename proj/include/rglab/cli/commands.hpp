#pragma once

#include <optional>
#include <string>
#include <vector>

namespace rglab::cli {

struct RunOptions {
  std::string manifest_path;
  std::optional<std::vector<std::uint64_t>> seeds_override;
  std::optional<std::string> output_dir_override;
  std::optional<std::string> evaluator_override;  // null | scripted | llm
  std::optional<std::string> endpoint_config_path;
  int jobs = 1;
};

int cmd_run(const RunOptions& options);
int cmd_report(const std::string& records_dir, const std::string& manifest_path);
int cmd_oracle_dump(const std::string& env_name, const std::string& out_path);
int cmd_validate(const std::string& manifest_path);

// Writes the manifest reference: every accepted key with its default,
// generated from the same config objects the parser fills.
int cmd_config_reference(const std::string& out_path);

// The reference text itself (exposed for tests).
std::string config_reference_text();

}  // namespace rglab::cli
