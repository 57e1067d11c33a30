// Named verification experiments. Each produces ReportRows whose case_id is
// "<relation>/<detail>", where <relation> is one of the ids in relations().
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "oscillator/harness/config.hpp"
#include "oscillator/harness/report.hpp"

namespace oscillator::harness {

struct Relation {
  std::string id;
  std::string formula;
};

struct ExperimentInfo {
  std::string name;
  std::string summary;
  std::vector<std::string> relations;  // ids this experiment exercises
};

const std::vector<Relation>& relations();
const std::vector<ExperimentInfo>& experiments();
const ExperimentInfo& find_experiment(std::string_view name);

/// FNV-1a of the name mixed into the base seed, so experiments draw
/// independent streams and the result does not depend on run order.
std::uint64_t experiment_seed(std::uint64_t base, std::string_view name);

/// Throws std::invalid_argument for unknown names.
std::vector<ReportRow> run_experiment(std::string_view name, const ExperimentConfig& config);

struct CoverageLine {
  std::string relation;
  std::string formula;
  std::string experiments;  // space-separated names with at least one row
  std::size_t rows = 0;
};

/// Rows per relation across the given results, in relations() order.
std::vector<CoverageLine> coverage(const std::vector<ReportRow>& rows);

}  // namespace oscillator::harness
