#include "oscillator/harness/figures.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "oscillator/bargmann_space.hpp"
#include "oscillator/cyclic_symmetry.hpp"
#include "oscillator/orbifold_geometry.hpp"
#include "oscillator/phase_space.hpp"

namespace oscillator::harness {

namespace {

constexpr int kWidth = 480;
constexpr int kHeight = 360;

// Coordinates in user units with four decimals; enough for the viewBox and
// stable across runs.
std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", x);
  std::string s = buf;
  if (s == "-0.0000") s = "0.0000";
  return s;
}

std::string exact(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

class Svg {
 public:
  explicit Svg(const std::string& title) {
    out_ << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << kWidth << ' ' << kHeight
         << "\" width=\"" << kWidth << "\" height=\"" << kHeight << "\">\n"
         << "<title>" << title << "</title>\n"
         << "<rect x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\"" << kHeight
         << "\" fill=\"white\"/>\n";
  }
  std::ostringstream& raw() { return out_; }
  void text(double x, double y, const std::string& s, const char* anchor = "middle") {
    out_ << "<text x=\"" << num(x) << "\" y=\"" << num(y) << "\" font-family=\"sans-serif\""
         << " font-size=\"12\" text-anchor=\"" << anchor << "\">" << s << "</text>\n";
  }
  void line(double x1, double y1, double x2, double y2, const char* stroke, double width = 1.0) {
    out_ << "<line x1=\"" << num(x1) << "\" y1=\"" << num(y1) << "\" x2=\"" << num(x2)
         << "\" y2=\"" << num(y2) << "\" stroke=\"" << stroke << "\" stroke-width=\"" << num(width)
         << "\"/>\n";
  }
  std::string finish() {
    out_ << "</svg>\n";
    return out_.str();
  }

 private:
  std::ostringstream out_;
};

// Plane point to SVG, y up.
struct Frame {
  double cx;
  double cy;
  double scale;
  double x(double re) const { return cx + scale * re; }
  double y(double im) const { return cy - scale * im; }
};

void axes(Svg& svg, const Frame& f, double extent) {
  svg.line(f.x(-extent), f.y(0.0), f.x(extent), f.y(0.0), "#999999");
  svg.line(f.x(0.0), f.y(-extent), f.x(0.0), f.y(extent), "#999999");
}

}  // namespace

std::string trajectory_svg(const ExperimentConfig& config) {
  const OscillatorParams& p = config.oscillator;
  const std::size_t n = config.figures.trajectory_n;
  Svg svg("exact flow on |z| = 1 with the Z_" + std::to_string(n) + " orbit");
  const Frame f{kWidth / 2.0, kHeight / 2.0 + 10.0, 130.0};
  axes(svg, f, 1.25);

  const double period = kTwoPi / p.omega();
  const PhasePoint start(Complex(1.0, 0.0));
  constexpr std::size_t kSegments = 256;
  auto& o = svg.raw();
  o << "<path class=\"trajectory\" fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"2\" d=\"";
  for (std::size_t k = 0; k <= kSegments; ++k) {
    const double tau = period * static_cast<double>(k) / kSegments;
    const Complex z = exact_flow(start, tau, p).z();
    o << (k == 0 ? "M" : " L") << num(f.x(z.real())) << ' ' << num(f.y(z.imag()));
  }
  o << "\"/>\n";

  const CyclicGroup group(n);
  const auto points = orbit(group, start.z());
  for (std::size_t l = 0; l < points.size(); ++l) {
    o << "<circle class=\"orbit\" data-index=\"" << l << "\" cx=\"" << num(f.x(points[l].real()))
      << "\" cy=\"" << num(f.y(points[l].imag())) << "\" r=\"5\" fill=\"#d62728\"/>\n";
  }
  svg.text(kWidth / 2.0, 20.0,
           "z(tau) = e^{i omega tau} z, tau in [0, 2pi/omega], markers zeta^l, n = " +
               std::to_string(n));
  return svg.finish();
}

std::string sector_svg(const ExperimentConfig& config) {
  const std::size_t n = config.figures.sector_n;
  const ConeIndex index = ConeIndex::integer(n);
  const double opening = index.cone_angle();
  Svg svg("sector of opening 2pi/" + std::to_string(n) + " and the cone C/Z_" + std::to_string(n));
  auto& o = svg.raw();

  // Left: the fundamental sector in the z-plane.
  const Frame plane{130.0, 200.0, 90.0};
  axes(svg, plane, 1.2);
  const Complex edge = std::polar(1.0, opening);
  const int large_arc = opening > std::numbers::pi ? 1 : 0;
  o << "<path class=\"sector\" data-opening=\"" << exact(opening) << "\" d=\"M"
    << num(plane.x(0.0)) << ' ' << num(plane.y(0.0)) << " L" << num(plane.x(1.0)) << ' '
    << num(plane.y(0.0)) << " A" << num(plane.scale) << ' ' << num(plane.scale) << " 0 "
    << large_arc << " 0 " << num(plane.x(edge.real())) << ' ' << num(plane.y(edge.imag()))
    << " Z\" fill=\"#aec7e8\" stroke=\"#1f77b4\" stroke-width=\"1.5\"/>\n";
  // Other sheets, outlined.
  for (std::size_t l = 1; l < n; ++l) {
    const Complex ray = std::polar(1.0, opening * static_cast<double>(l));
    svg.line(plane.x(0.0), plane.y(0.0), plane.x(ray.real()), plane.y(ray.imag()), "#bbbbbb");
  }
  svg.text(plane.x(0.0), 330.0, "arg z in [0, 2pi/" + std::to_string(n) + ")");

  // Arrow for the covering map.
  svg.line(250.0, 200.0, 300.0, 200.0, "black", 1.5);
  o << "<path d=\"M300.0000 200.0000 L292.0000 196.0000 L292.0000 204.0000 Z\" fill=\"black\"/>\n";
  svg.text(275.0, 190.0, "z^" + std::to_string(n));

  // Right: the cone, seen from the side. Its slant height is the metric
  // distance to the apex and its base circumference 2pi - deficit per unit of it.
  const double slant = 120.0;
  const double ratio = (kTwoPi - angle_deficit(index)) / kTwoPi;  // sin of the half-angle
  const double half_angle = std::asin(std::min(1.0, ratio));
  const double apex_x = 390.0;
  const double apex_y = 80.0;
  const double base_r = slant * std::sin(half_angle);
  const double base_y = apex_y + slant * std::cos(half_angle);
  o << "<path class=\"cone\" data-deficit=\"" << exact(angle_deficit(index)) << "\" d=\"M"
    << num(apex_x - base_r) << ' ' << num(base_y) << " L" << num(apex_x) << ' ' << num(apex_y)
    << " L" << num(apex_x + base_r) << ' ' << num(base_y)
    << "\" fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\"/>\n";
  o << "<ellipse cx=\"" << num(apex_x) << "\" cy=\"" << num(base_y) << "\" rx=\"" << num(base_r)
    << "\" ry=\"" << num(0.25 * base_r) << "\" fill=\"#aec7e8\" fill-opacity=\"0.5\""
    << " stroke=\"#1f77b4\"/>\n";
  o << "<circle class=\"apex\" cx=\"" << num(apex_x) << "\" cy=\"" << num(apex_y)
    << "\" r=\"3\" fill=\"#d62728\"/>\n";
  svg.text(apex_x, 330.0, "cone angle 2pi/" + std::to_string(n));
  return svg.finish();
}

std::string spectrum_svg(const ExperimentConfig& config) {
  const OscillatorParams& p = config.oscillator;
  const auto& c = config.figures.spectrum_coefficients;
  std::vector<Complex> coeffs(c.begin(), c.end());
  const HolomorphicState state(std::move(coeffs), config.truncation);
  const auto lines = energy_probabilities(state, p);

  Svg svg("energy distribution hbar omega (n + 1/2) against |c_n|^2");
  const double left = 50.0;
  const double right = kWidth - 20.0;
  const double bottom = kHeight - 50.0;
  const double top = 40.0;
  const double e_max = eigenvalue(state.degree() + 1, p);
  const auto sx = [&](double e) { return left + (right - left) * e / e_max; };
  const auto sy = [&](double prob) { return bottom - (bottom - top) * prob; };

  svg.line(left, bottom, right, bottom, "black");
  svg.line(left, bottom, left, top, "black");
  for (std::size_t k = 0; k <= state.degree(); ++k) {
    const double e = eigenvalue(k, p);
    svg.line(sx(e), bottom, sx(e), bottom + 4.0, "black");
    svg.text(sx(e), bottom + 18.0, exact(e));
  }
  svg.text((left + right) / 2.0, kHeight - 12.0, "energy");
  svg.text(left - 8.0, sy(1.0) + 4.0, "1", "end");
  svg.text(left - 8.0, bottom + 4.0, "0", "end");

  auto& o = svg.raw();
  for (const SpectralLine& l : lines) {
    if (l.probability == 0.0) continue;
    o << "<g class=\"stem\" data-index=\"" << exact(l.index) << "\" data-energy=\""
      << exact(l.energy) << "\" data-probability=\"" << exact(l.probability) << "\">";
    o << "<line x1=\"" << num(sx(l.energy)) << "\" y1=\"" << num(bottom) << "\" x2=\""
      << num(sx(l.energy)) << "\" y2=\"" << num(sy(l.probability))
      << "\" stroke=\"#1f77b4\" stroke-width=\"2\"/>";
    o << "<circle cx=\"" << num(sx(l.energy)) << "\" cy=\"" << num(sy(l.probability))
      << "\" r=\"4\" fill=\"#1f77b4\"/></g>\n";
  }
  return svg.finish();
}

const std::vector<std::string>& figure_names() {
  static const std::vector<std::string> names{"trajectory", "sector", "spectrum"};
  return names;
}

std::vector<std::string> parse_figure_list(std::string_view list) {
  if (list == "all") return figure_names();
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= list.size()) {
    const std::size_t end = std::min(list.find(',', start), list.size());
    const std::string name(list.substr(start, end - start));
    bool known = false;
    for (const auto& n : figure_names()) known = known || n == name;
    if (!known) throw std::invalid_argument("unknown figure '" + name + "'");
    out.push_back(name);
    start = end + 1;
  }
  return out;
}

std::vector<std::filesystem::path> render_figures(const ExperimentConfig& config,
                                                  const std::vector<std::string>& which,
                                                  const std::filesystem::path& dir) {
  config.validate();
  std::filesystem::create_directories(dir);
  std::vector<std::filesystem::path> written;
  for (const std::string& name : which) {
    std::string body;
    if (name == "trajectory") {
      body = trajectory_svg(config);
    } else if (name == "sector") {
      body = sector_svg(config);
    } else if (name == "spectrum") {
      body = spectrum_svg(config);
    } else {
      throw std::invalid_argument("unknown figure '" + name + "'");
    }
    const auto path = dir / (name + ".svg");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << body;
    if (!out) throw std::runtime_error("write failed for " + path.string());
    written.push_back(path);
  }
  return written;
}

}  // namespace oscillator::harness
