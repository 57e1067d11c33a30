#include "oscillator/harness/config.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace oscillator::harness {

namespace {

namespace pt = boost::property_tree;

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw std::invalid_argument("config: " + where + ": " + what);
}

double to_real(const std::string& where, const std::string& text) {
  const std::string t = trim(text);
  double x = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), x);
  if (ec != std::errc{} || ptr != t.data() + t.size() || t.empty()) {
    bad(where, "expected a number, got '" + text + "'");
  }
  return x;
}

std::uint64_t to_unsigned(const std::string& where, const std::string& text) {
  const std::string t = trim(text);
  std::uint64_t x = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), x);
  if (ec != std::errc{} || ptr != t.data() + t.size() || t.empty()) {
    bad(where, "expected a non-negative integer, got '" + text + "'");
  }
  return x;
}

std::vector<double> to_list(const std::string& where, const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(to_real(where, item));
  if (out.empty()) bad(where, "empty list");
  return out;
}

std::vector<ConeIndex> to_cones(const std::string& where, const std::string& text) {
  std::vector<ConeIndex> out;
  for (double v : to_list(where, text)) {
    try {
      out.push_back(ConeIndex::from_real(v));
    } catch (const std::invalid_argument& e) {
      bad(where, e.what());
    }
  }
  return out;
}

using Setter = std::function<void(const std::string& where, const std::string& value)>;

}  // namespace

std::map<std::string, double*> Tolerances::by_name() {
  return {{"flow", &flow},
          {"rk4_order", &rk4_order},
          {"rk4_error", &rk4_error},
          {"vector_field", &vector_field},
          {"period", &period},
          {"exact", &exact},
          {"conjugation", &conjugation},
          {"deficit", &deficit},
          {"conformal", &conformal},
          {"curvature", &curvature},
          {"norm_relative", &norm_relative},
          {"gram_offdiagonal", &gram_offdiagonal},
          {"inner_product", &inner_product},
          {"spectrum_numeric", &spectrum_numeric},
          {"probability", &probability},
          {"phase", &phase},
          {"fractional_residual", &fractional_residual},
          {"fractional_order", &fractional_order},
          {"discontinuity", &discontinuity}};
}

ExperimentConfig::ExperimentConfig() {
  for (std::size_t n = 1; n <= 8; ++n) cone_indices.push_back(ConeIndex::integer(n));
  for (double g : {0.5, 1.5, 2.5}) fractional_cones.push_back(ConeIndex::fractional(g));
}

QuadratureSpec ExperimentConfig::quadrature_spec() const {
  return quadrature ? *quadrature : QuadratureSpec::for_degree(std::max(norm_degree, gram_degree));
}

void ExperimentConfig::validate() const {
  Tolerances copy = tolerances;
  for (const auto& [name, value] : copy.by_name()) {
    if (!(*value > 0.0)) bad("tolerances." + name, "must be positive");
  }
  for (const ConeIndex& c : cone_indices) {
    if (!c.is_integer()) bad("cones.cone_indices", "entries must be integers");
  }
  for (double g : gammas) {
    if (!(g > 0.0)) bad("fractional.gammas", "entries must be positive");
  }
  if (norm_degree > truncation) bad("bargmann.norm_degree", "exceeds truncation");
  if (gram_degree > truncation) bad("bargmann.gram_degree", "exceeds truncation");
  if (samples == 0) bad("run.samples", "must be positive");
  try {
    quadrature_spec().require_resolves(std::max(norm_degree, gram_degree));
  } catch (const std::invalid_argument& e) {
    bad("bargmann", e.what());
  }
  if (figures.trajectory_n == 0) bad("figures.trajectory_n", "must be >= 1");
  if (figures.sector_n == 0) bad("figures.sector_n", "must be >= 1");
  if (figures.spectrum_coefficients.size() > truncation + 1) {
    bad("figures.spectrum_coefficients", "degree exceeds truncation");
  }
  bool nonzero = false;
  for (double c : figures.spectrum_coefficients) nonzero = nonzero || c != 0.0;
  if (!nonzero) bad("figures.spectrum_coefficients", "state is zero");
}

ExperimentConfig parse_config(const std::string& text) {
  pt::ptree tree;
  std::istringstream in(text);
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw std::invalid_argument(std::string("config: ") + e.what());
  }

  ExperimentConfig cfg;
  double mass = cfg.oscillator.mass();
  double omega = cfg.oscillator.omega();
  double hbar = cfg.oscillator.hbar();
  std::optional<std::size_t> radial;
  std::optional<std::size_t> angular;
  auto tol = cfg.tolerances.by_name();

  const auto real = [](double& dst) {
    return Setter([&dst](const std::string& w, const std::string& v) { dst = to_real(w, v); });
  };
  const auto count = [](std::size_t& dst) {
    return Setter([&dst](const std::string& w, const std::string& v) {
      dst = static_cast<std::size_t>(to_unsigned(w, v));
    });
  };
  const auto optional_count = [](std::optional<std::size_t>& dst) {
    return Setter([&dst](const std::string& w, const std::string& v) {
      dst = static_cast<std::size_t>(to_unsigned(w, v));
    });
  };

  std::map<std::string, std::map<std::string, Setter>> schema;
  schema["oscillator"] = {{"mass", real(mass)}, {"omega", real(omega)}, {"hbar", real(hbar)}};
  schema["cones"] = {
      {"cone_indices",
       [&](const std::string& w, const std::string& v) { cfg.cone_indices = to_cones(w, v); }},
      {"fractional_indices",
       [&](const std::string& w, const std::string& v) { cfg.fractional_cones = to_cones(w, v); }}};
  schema["bargmann"] = {{"truncation", count(cfg.truncation)},
                        {"norm_degree", count(cfg.norm_degree)},
                        {"gram_degree", count(cfg.gram_degree)},
                        {"radial_nodes", optional_count(radial)},
                        {"angular_nodes", optional_count(angular)}};
  schema["fractional"] = {
      {"gammas", [&](const std::string& w, const std::string& v) { cfg.gammas = to_list(w, v); }}};
  schema["figures"] = {{"trajectory_n", count(cfg.figures.trajectory_n)},
                       {"sector_n", count(cfg.figures.sector_n)},
                       {"spectrum_coefficients", [&](const std::string& w, const std::string& v) {
                          cfg.figures.spectrum_coefficients = to_list(w, v);
                        }}};
  for (auto& [name, slot] : tol) schema["tolerances"][name] = real(*slot);
  schema["run"] = {
      {"output_dir", [&](const std::string&, const std::string& v) { cfg.output_dir = trim(v); }},
      {"seed", [&](const std::string& w, const std::string& v) { cfg.seed = to_unsigned(w, v); }},
      {"samples", count(cfg.samples)}};

  for (const auto& [section, body] : tree) {
    if (body.empty() && !body.data().empty()) bad(section, "keys must live inside a [section]");
    const auto known = schema.find(section);
    if (known == schema.end()) bad(section, "unknown section");
    for (const auto& [key, node] : body) {
      const auto setter = known->second.find(key);
      if (setter == known->second.end()) bad(section + "." + key, "unknown key");
      setter->second(section + "." + key, node.data());
    }
  }

  try {
    cfg.oscillator = OscillatorParams(mass, omega, hbar);
  } catch (const std::invalid_argument& e) {
    bad("oscillator", e.what());
  }
  if (radial.has_value() != angular.has_value()) {
    bad("bargmann", "radial_nodes and angular_nodes must be given together");
  }
  if (radial) cfg.quadrature = QuadratureSpec{*radial, *angular};
  cfg.validate();
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("config: cannot read " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::filesystem::path default_output_dir(const std::filesystem::path& configured) {
  if (!configured.empty()) return configured;
  if (const char* env = std::getenv("OSCILLATOR_OUT"); env != nullptr && *env != '\0') return env;
  return "results";
}

}  // namespace oscillator::harness
