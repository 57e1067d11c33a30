#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "oscillator/harness/config.hpp"
#include "oscillator/harness/report.hpp"

namespace oscillator::harness {

struct SuiteResult {
  std::vector<ReportRow> rows;                // experiments in list order
  std::vector<std::filesystem::path> files;  // every file written
  bool pass() const { return all_pass(rows); }
};

/// Runs the named experiments ("all" expands to every one) concurrently and
/// writes <dir>/<name>.csv for each. With more than one experiment it also
/// writes <dir>/report.csv and <dir>/coverage.csv.
SuiteResult run_suite(const std::vector<std::string>& names, const ExperimentConfig& config,
                      const std::filesystem::path& dir);

void write_coverage(const std::filesystem::path& path, const std::vector<ReportRow>& rows);

}  // namespace oscillator::harness
