#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "oscillator/phase_space.hpp"

namespace oscillator::harness {

using Value = std::variant<double, Complex>;

struct ReportRow {
  std::string experiment;
  std::string case_id;
  Value observed;
  Value expected;
  double abs_error = 0.0;
  bool pass = false;
};

/// Row with abs_error = |observed - expected| and pass = abs_error <= tolerance.
ReportRow make_row(std::string experiment, std::string case_id, Value observed, Value expected,
                   double tolerance);

/// %.17g for reals, "a+bi" / "a-bi" for complex values.
std::string format_real(double x);
std::string format_value(const Value& v);
/// Inverse of format_value; throws std::invalid_argument on malformed text.
Value parse_value(const std::string& text);

inline constexpr const char* kCsvHeader = "experiment,case_id,observed,expected,abs_error,pass";

void write_csv(std::ostream& out, const std::vector<ReportRow>& rows);
void write_csv(const std::filesystem::path& path, const std::vector<ReportRow>& rows);

bool all_pass(const std::vector<ReportRow>& rows);

}  // namespace oscillator::harness
