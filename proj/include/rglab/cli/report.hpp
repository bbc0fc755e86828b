#pragma once

#include <string>
#include <vector>

#include "rglab/cli/manifest.hpp"
#include "rglab/harness/run_record.hpp"

namespace rglab::cli {

// Writes one run record to <records_dir>/<run>_seed<seed>.summary.json and
// the event log next to it.
void write_record(const std::string& records_dir, const harness::RunRecord& record);

// Loads every *.summary.json under the directory, sorted by file name.
std::vector<harness::RunRecord> load_records(const std::string& records_dir);

// Report generation over a records directory: per-run learning-curve CSVs,
// per-pairing boosted-reward CSVs and SVG curve plots. Pairings whose
// partner is missing are reported as incomplete but do not block the rest.
// Output bytes are a pure function of the record contents.
struct ReportResult {
  std::vector<std::string> files_written;
  std::vector<std::string> incomplete_pairings;
};

ReportResult write_reports(const std::string& records_dir, const std::string& reports_dir,
                           const std::vector<ExperimentManifest::Pairing>& pairings);

// Rolling mean of the series over the trailing `window` entries.
std::vector<double> rolling_mean(const std::vector<double>& series, int window);

}  // namespace rglab::cli
