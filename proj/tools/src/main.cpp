#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>

#include "oscillator/harness/config.hpp"
#include "oscillator/harness/experiments.hpp"
#include "oscillator/harness/figures.hpp"
#include "oscillator/harness/suite.hpp"

namespace h = oscillator::harness;

namespace {

constexpr int kExitFailedRows = 1;
constexpr int kExitError = 2;

void print_list() {
  for (const h::ExperimentInfo& e : h::experiments()) {
    std::cout << e.name << "  " << e.summary << '\n';
    for (const std::string& id : e.relations) {
      for (const h::Relation& r : h::relations()) {
        if (r.id == id) std::cout << "    " << r.id << ": " << r.formula << '\n';
      }
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Oscillator orbifold verification harness"};
  app.require_subcommand(1);

  std::string experiment;
  std::string config_path;
  std::string out_dir;
  std::optional<std::uint64_t> seed;
  auto* run = app.add_subcommand("run", "run an experiment (or 'all') and write CSV reports");
  run->add_option("experiment", experiment, "experiment name or 'all'")->required();
  run->add_option("--config", config_path, "INI configuration")->required();
  run->add_option("--out", out_dir, "output directory");
  run->add_option("--seed", seed, "override [run] seed");

  std::string which;
  auto* figures = app.add_subcommand("figures", "render SVG figures");
  figures->add_option("--config", config_path, "INI configuration")->required();
  figures->add_option("--which", which, "comma-separated: trajectory,sector,spectrum or all")
      ->required();
  figures->add_option("--out", out_dir, "output directory");

  app.add_subcommand("list", "list experiments and the relations they check");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand("list")) {
      print_list();
      return 0;
    }
    h::ExperimentConfig config = h::load_config(config_path);
    if (seed) config.seed = *seed;
    const auto dir = h::default_output_dir(out_dir.empty() ? config.output_dir : std::filesystem::path(out_dir));

    if (app.got_subcommand("figures")) {
      for (const auto& p : h::render_figures(config, h::parse_figure_list(which), dir)) {
        std::cout << p.string() << '\n';
      }
      return 0;
    }

    const h::SuiteResult result = h::run_suite({experiment}, config, dir);
    std::size_t failed = 0;
    for (const h::ReportRow& r : result.rows) {
      if (!r.pass) {
        ++failed;
        std::cerr << "FAIL " << r.experiment << ' ' << r.case_id << " observed "
                  << h::format_value(r.observed) << " expected " << h::format_value(r.expected)
                  << '\n';
      }
    }
    for (const auto& p : result.files) std::cout << p.string() << '\n';
    std::cout << result.rows.size() - failed << '/' << result.rows.size() << " rows pass\n";
    return failed == 0 ? 0 : kExitFailedRows;
  } catch (const std::exception& e) {
    std::cerr << "oscillator: " << e.what() << '\n';
    return kExitError;
  }
}
