#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "rglab/harness/run_config.hpp"

namespace rglab::cli {

// A named batch of runs plus the guided-vs-baseline comparisons to report.
struct ExperimentManifest {
  std::string output_dir = "out";
  std::vector<std::uint64_t> seeds = {42, 43, 44, 45, 46};
  std::vector<harness::RunConfig> runs;

  struct Pairing {
    std::string guided;
    std::string baseline;
  };
  std::vector<Pairing> pairings;
};

// Strict parse: unknown keys anywhere, bad types, duplicate run names and
// pairings that reference missing runs are all collected; the returned list
// holds every violation found, empty on success.
ExperimentManifest parse_manifest(const nlohmann::json& doc, std::vector<std::string>& errors);

// Loads and parses a manifest file; throws std::invalid_argument carrying
// the full violation list when anything is wrong.
ExperimentManifest load_manifest(const std::string& path);

// Parses one evaluator endpoint config file (same strict rules).
llm::EndpointConfig load_endpoint_config(const std::string& path);

}  // namespace rglab::cli
