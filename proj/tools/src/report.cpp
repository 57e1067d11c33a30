#include "oscillator/harness/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <stdexcept>

namespace oscillator::harness {

namespace {

Complex as_complex(const Value& v) {
  if (const auto* d = std::get_if<double>(&v)) return {*d, 0.0};
  return std::get<Complex>(v);
}

double parse_real(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("parse_value: empty number");
  char* end = nullptr;
  const double x = std::strtod(text.c_str(), &end);
  if (end != text.c_str() + text.size()) {
    throw std::invalid_argument("parse_value: malformed number '" + text + "'");
  }
  return x;
}

}  // namespace

ReportRow make_row(std::string experiment, std::string case_id, Value observed, Value expected,
                   double tolerance) {
  const double err = std::abs(as_complex(observed) - as_complex(expected));
  // NaN errors fail: the comparison is false.
  const bool pass = err <= tolerance;
  return {std::move(experiment), std::move(case_id), observed, expected, err, pass};
}

std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string format_value(const Value& v) {
  if (const auto* d = std::get_if<double>(&v)) return format_real(*d);
  const Complex c = std::get<Complex>(v);
  const double im = c.imag();
  return format_real(c.real()) + (std::signbit(im) ? "-" : "+") + format_real(std::fabs(im)) + "i";
}

Value parse_value(const std::string& text) {
  if (text.empty() || text.back() != 'i') return parse_real(text);
  // The imaginary sign is the last + or - not following an exponent marker.
  for (std::size_t k = text.size() - 1; k-- > 1;) {
    const char ch = text[k];
    if ((ch == '+' || ch == '-') && text[k - 1] != 'e' && text[k - 1] != 'E') {
      const double re = parse_real(text.substr(0, k));
      double im = parse_real(text.substr(k + 1, text.size() - k - 2));
      if (ch == '-') im = -im;
      return Complex(re, im);
    }
  }
  throw std::invalid_argument("parse_value: malformed complex '" + text + "'");
}

void write_csv(std::ostream& out, const std::vector<ReportRow>& rows) {
  out << kCsvHeader << '\n';
  for (const ReportRow& r : rows) {
    out << r.experiment << ',' << r.case_id << ',' << format_value(r.observed) << ','
        << format_value(r.expected) << ',' << format_real(r.abs_error) << ','
        << (r.pass ? "true" : "false") << '\n';
  }
}

void write_csv(const std::filesystem::path& path, const std::vector<ReportRow>& rows) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_csv(out, rows);
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

bool all_pass(const std::vector<ReportRow>& rows) {
  for (const ReportRow& r : rows) {
    if (!r.pass) return false;
  }
  return true;
}

}  // namespace oscillator::harness
