#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <numbers>
#include <sstream>

#include "doctest.h"
#include "oscillator/harness/config.hpp"
#include "oscillator/harness/experiments.hpp"
#include "oscillator/harness/figures.hpp"
#include "oscillator/harness/report.hpp"
#include "oscillator/harness/suite.hpp"
#include "support/generators.hpp"

using namespace oscillator;
using namespace oscillator::harness;
namespace fs = std::filesystem;

namespace {

std::vector<ReportRow> with_prefix(const std::vector<ReportRow>& rows, const std::string& prefix) {
  std::vector<ReportRow> out;
  for (const ReportRow& r : rows) {
    if (r.case_id.starts_with(prefix)) out.push_back(r);
  }
  return out;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("oscillator-unit-" + name);
  fs::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("config defaults and overrides") {
  const ExperimentConfig d = parse_config("");
  CHECK(d.cone_indices.size() == 8);
  CHECK(d.truncation == 32);
  CHECK(d.quadrature_spec() == QuadratureSpec::for_degree(20));
  CHECK(d.tolerances.flow == 1e-12);

  const ExperimentConfig c = parse_config(
      "[oscillator]\nomega = 2.5\n[cones]\ncone_indices = 2, 3\n"
      "[bargmann]\nradial_nodes = 30\nangular_nodes = 64\n"
      "[tolerances]\nperiod = 1e-11\n[run]\nseed = 99\noutput_dir = out dir\n");
  CHECK(c.oscillator.omega() == 2.5);
  REQUIRE(c.cone_indices.size() == 2);
  CHECK(c.cone_indices[1].n() == 3);
  CHECK(c.quadrature_spec() == QuadratureSpec{30, 64});
  CHECK(c.tolerances.period == 1e-11);
  CHECK(c.seed == 99);
  CHECK(c.output_dir == fs::path("out dir"));
}

TEST_CASE("config is strict") {
  const auto rejects = [](const std::string& text, const std::string& fragment) {
    try {
      parse_config(text);
    } catch (const std::invalid_argument& e) {
      CHECK_MESSAGE(std::string(e.what()).find(fragment) != std::string::npos, e.what());
      return;
    }
    FAIL("accepted: " << text);
  };
  rejects("[oscillator]\nomgea = 1\n", "unknown key");
  rejects("[oscilator]\nomega = 1\n", "unknown section");
  rejects("omega = 1\n", "inside a [section]");
  rejects("[oscillator]\nomega = 1\nomega = 2\n", "duplicate");
  rejects("[oscillator]\nomega = fast\n", "expected a number");
  rejects("[oscillator]\nomega = 0\n", "oscillator");
  rejects("[tolerances]\nflow = -1\n", "tolerances.flow");
  rejects("[cones]\ncone_indices = 2, 2.5\n", "integers");
  rejects("[bargmann]\nradial_nodes = 21\n", "together");
  rejects("[bargmann]\nradial_nodes = 10\nangular_nodes = 44\n", "underresolved");
  rejects("[bargmann]\nradial_nodes = 21\nangular_nodes = 42\n", "multiple of 4");
  rejects("[bargmann]\ntruncation = 8\n", "exceeds truncation");
  rejects("[run]\nseed = -3\n", "non-negative integer");
  rejects("[figures]\nspectrum_coefficients = 0, 0\n", "zero");
  CHECK_THROWS_AS(load_config("/nonexistent/config.ini"), std::invalid_argument);
}

TEST_CASE("output directory fallback") {
  CHECK(default_output_dir("explicit") == fs::path("explicit"));
  ::setenv("OSCILLATOR_OUT", "from-env", 1);
  CHECK(default_output_dir("") == fs::path("from-env"));
  ::unsetenv("OSCILLATOR_OUT");
  CHECK(default_output_dir("") == fs::path("results"));
}

TEST_CASE("value formatting round-trips at 17 digits") {
  CHECK(format_value(Complex(1.0, 2.0)) == "1+2i");
  CHECK(format_value(Complex(1.0, -2.0)) == "1-2i");
  CHECK(format_value(Complex(-0.5, 0.0)) == "-0.5+0i");
  CHECK(format_value(0.1) == "0.10000000000000001");
  CHECK(format_value(Complex(1e-300, -3e20)) == "1e-300-3e+20i");

  testing::Generator gen(51);
  for (int k = 0; k < 1000; ++k) {
    const double scale = std::pow(10.0, gen.uniform(-30.0, 30.0));
    const Complex z(gen.uniform(-1.0, 1.0) * scale, gen.uniform(-1.0, 1.0) * scale);
    const Value back = parse_value(format_value(z));
    REQUIRE(std::holds_alternative<Complex>(back));
    CHECK(std::get<Complex>(back) == z);
    const double x = z.real();
    CHECK(std::get<double>(parse_value(format_value(x))) == x);
  }
  CHECK_THROWS_AS(parse_value("1+2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_value("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_value("i"), std::invalid_argument);
}

TEST_CASE("rows pass iff abs_error is within tolerance") {
  CHECK(make_row("e", "c", 1.0, 1.0 + 1e-13, 1e-12).pass);
  CHECK_FALSE(make_row("e", "c", 1.0, 1.1, 1e-12).pass);
  CHECK_FALSE(make_row("e", "c", NAN, 0.0, 1.0).pass);
  const ReportRow r = make_row("e", "c", Complex(0.0, 3.0), Complex(4.0, 0.0), 5.0);
  CHECK(r.abs_error == doctest::Approx(5.0));
  CHECK(r.pass);

  std::ostringstream csv;
  write_csv(csv, {r});
  CHECK(csv.str() == "experiment,case_id,observed,expected,abs_error,pass\ne,c,0+3i,4+0i,5,true\n");
}

TEST_CASE("experiment registry") {
  CHECK(experiments().size() == 8);
  CHECK_THROWS_AS(run_experiment("no-such", ExperimentConfig{}), std::invalid_argument);
  CHECK(experiment_seed(1, "spectrum") != experiment_seed(1, "evolution"));
  CHECK(experiment_seed(1, "spectrum") == experiment_seed(1, "spectrum"));
  for (const ExperimentInfo& e : experiments()) {
    for (const std::string& id : e.relations) {
      bool known = false;
      for (const Relation& r : relations()) known = known || r.id == id;
      CHECK_MESSAGE(known, id);
    }
  }
}

TEST_CASE("zn-periods example: eight rows of 2 pi / n") {
  const auto rows = run_experiment("zn-periods", ExperimentConfig{});
  REQUIRE(rows.size() == 8);
  for (std::size_t k = 0; k < 8; ++k) {
    CHECK(rows[k].pass);
    CHECK(std::get<double>(rows[k].expected) ==
          doctest::Approx(2.0 * std::numbers::pi / static_cast<double>(k + 1)).epsilon(1e-15));
  }
}

TEST_CASE("bargmann-norms example: N = 12 Gram rows") {
  ExperimentConfig cfg;
  cfg.gram_degree = 12;
  const auto rows = run_experiment("bargmann-norms", cfg);
  const auto diag = with_prefix(rows, "gram/diagonal");
  const auto off = with_prefix(rows, "gram/offdiagonal");
  CHECK(diag.size() == 13);
  CHECK(off.size() == 78);
  CHECK(std::get<double>(diag[5].expected) == 120.0);
  for (const auto& r : off) CHECK(std::get<double>(r.expected) == 0.0);
  CHECK(all_pass(rows));
}

TEST_CASE("fractional example: gamma = 2.5") {
  ExperimentConfig cfg;
  cfg.gammas = {2.5};
  const auto rows = run_experiment("fractional", cfg);
  const auto eig = with_prefix(rows, "fractional-eigen/eigenvalue gamma=2.5");
  REQUIRE(eig.size() == 1);
  CHECK(std::get<double>(eig[0].expected) == 3.0);
  CHECK(eig[0].pass);
  const auto member = with_prefix(rows, "membership/gamma=2.5");
  REQUIRE(member.size() == 1);
  CHECK(std::get<double>(member[0].observed) == 0.0);
  CHECK(member[0].pass);
  CHECK(all_pass(rows));
}

TEST_CASE("every experiment passes on the default config and covers its relations") {
  std::vector<ReportRow> all;
  for (const ExperimentInfo& e : experiments()) {
    const auto rows = run_experiment(e.name, ExperimentConfig{});
    CHECK_MESSAGE(all_pass(rows), e.name);
    for (const auto& r : rows) {
      CHECK(r.experiment == e.name);
      CHECK(r.case_id.find(',') == std::string::npos);
    }
    all.insert(all.end(), rows.begin(), rows.end());
  }
  for (const CoverageLine& line : coverage(all)) CHECK_MESSAGE(line.rows > 0, line.relation);
}

TEST_CASE("tight tolerances turn rows red") {
  ExperimentConfig cfg;
  cfg.tolerances.flow = 1e-30;
  CHECK_FALSE(all_pass(run_experiment("classical-flow", cfg)));
}

TEST_CASE("seed changes sampled rows only") {
  ExperimentConfig a;
  ExperimentConfig b;
  b.seed = a.seed + 1;
  const auto ra = run_experiment("classical-flow", a);
  const auto rb = run_experiment("classical-flow", b);
  REQUIRE(ra.size() == rb.size());
  CHECK(format_value(ra[0].observed) == format_value(rb[0].observed));
  bool any_differs = false;
  for (std::size_t k = 0; k < ra.size(); ++k) {
    any_differs = any_differs || format_value(ra[k].observed) != format_value(rb[k].observed);
  }
  CHECK(any_differs);
}

TEST_CASE("figures examples and determinism") {
  ExperimentConfig cfg;
  cfg.figures.sector_n = 4;
  const std::string sector = sector_svg(cfg);
  CHECK(sector.find("data-opening=\"1.5707963267948966\"") != std::string::npos);
  CHECK(sector.find("viewBox=\"0 0 480 360\"") != std::string::npos);

  cfg.figures.spectrum_coefficients = {0.0, 0.0, 1.0};
  const std::string spectrum = spectrum_svg(cfg);
  std::size_t stems = 0;
  for (std::size_t pos = 0; (pos = spectrum.find("class=\"stem\"", pos)) != std::string::npos; ++pos) {
    ++stems;
  }
  CHECK(stems == 1);
  CHECK(spectrum.find("data-energy=\"2.5\" data-probability=\"1\"") != std::string::npos);

  cfg.figures.trajectory_n = 5;
  const std::string trajectory = trajectory_svg(cfg);
  CHECK(trajectory.find("data-index=\"4\"") != std::string::npos);
  CHECK(trajectory.find("data-index=\"5\"") == std::string::npos);

  CHECK(parse_figure_list("all") == figure_names());
  CHECK(parse_figure_list("spectrum") == std::vector<std::string>{"spectrum"});
  CHECK_THROWS_AS(parse_figure_list("spectrum,pie"), std::invalid_argument);

  const fs::path d1 = scratch("fig1");
  const fs::path d2 = scratch("fig2");
  const auto f1 = render_figures(cfg, figure_names(), d1);
  const auto f2 = render_figures(cfg, figure_names(), d2);
  REQUIRE(f1.size() == 3);
  for (std::size_t k = 0; k < 3; ++k) {
    CHECK(f1[k].filename() == f2[k].filename());
    CHECK(slurp(f1[k]) == slurp(f2[k]));
  }
}

TEST_CASE("suite writes per-experiment CSVs plus report and coverage") {
  const fs::path dir = scratch("suite");
  const SuiteResult r = run_suite({"zn-periods", "spectrum"}, ExperimentConfig{}, dir);
  CHECK(r.pass());
  CHECK(fs::exists(dir / "zn-periods.csv"));
  CHECK(fs::exists(dir / "spectrum.csv"));
  CHECK(fs::exists(dir / "coverage.csv"));
  const std::string report = slurp(dir / "report.csv");
  CHECK(report.starts_with(std::string(kCsvHeader) + "\nzn-periods,"));
  CHECK_THROWS_AS(run_suite({"bogus"}, ExperimentConfig{}, dir), std::invalid_argument);
}
