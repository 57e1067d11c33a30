#include "oscillator/harness/suite.hpp"

#include <fstream>
#include <future>
#include <stdexcept>

#include "oscillator/harness/experiments.hpp"

namespace oscillator::harness {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (const char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + '"';
}

}  // namespace

SuiteResult run_suite(const std::vector<std::string>& names, const ExperimentConfig& config,
                      const std::filesystem::path& dir) {
  std::vector<std::string> list;
  for (const std::string& n : names) {
    if (n == "all") {
      for (const ExperimentInfo& e : experiments()) list.push_back(e.name);
    } else {
      list.push_back(find_experiment(n).name);
    }
  }
  config.validate();
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create output directory " + dir.string());

  // Each task writes only its own CSV; aggregation below is sequential.
  std::vector<std::future<std::vector<ReportRow>>> pending;
  for (const std::string& name : list) {
    pending.push_back(std::async(std::launch::async, [&config, &dir, name] {
      auto rows = run_experiment(name, config);
      write_csv(dir / (name + ".csv"), rows);
      return rows;
    }));
  }
  SuiteResult result;
  for (std::size_t k = 0; k < pending.size(); ++k) {
    auto rows = pending[k].get();
    result.rows.insert(result.rows.end(), rows.begin(), rows.end());
    result.files.push_back(dir / (list[k] + ".csv"));
  }
  if (list.size() > 1) {
    write_csv(dir / "report.csv", result.rows);
    write_coverage(dir / "coverage.csv", result.rows);
    result.files.push_back(dir / "report.csv");
    result.files.push_back(dir / "coverage.csv");
  }
  return result;
}

void write_coverage(const std::filesystem::path& path, const std::vector<ReportRow>& rows) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << "relation,formula,experiments,rows\n";
  for (const CoverageLine& line : coverage(rows)) {
    out << line.relation << ',' << quoted(line.formula) << ',' << line.experiments << ','
        << line.rows << '\n';
  }
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace oscillator::harness
