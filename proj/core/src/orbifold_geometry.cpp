#include "oscillator/orbifold_geometry.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/tools/roots.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace oscillator {

namespace {

constexpr double kSectorSlack = 1e-12;
constexpr std::size_t kMaxPeriodScan = 50'000'000;

Complex integer_power(Complex z, std::size_t n) {
  Complex result(1.0, 0.0);
  Complex base = z;
  while (n > 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n > 0) base *= base;
  }
  return result;
}

// exp(gamma (log rho + i theta)) for an explicit branch angle theta.
Complex branch_value(double rho, double theta, double gamma) {
  if (rho == 0.0) return {0.0, 0.0};
  return std::polar(std::pow(rho, gamma), gamma * theta);
}

// Argument of z measured from the cut, in [cut, cut + 2 pi).
double argument_from_cut(Complex z, double cut) {
  return cut + normalize_angle(std::arg(z) - cut);
}

Complex cone_coordinate(Complex z, const ConeIndex& index) {
  if (index.is_integer()) return integer_power(z, index.n());
  return fractional_power(z, index.value());
}

}  // namespace

ConeSpace::ConeSpace(ConeIndex index, double branch_cut_angle)
    : index_(index), cut_(normalize_angle(branch_cut_angle)) {}

Complex fractional_power(Complex z, double gamma, double branch_cut, long long sheet) {
  if (!(gamma > 0.0)) throw std::invalid_argument("fractional_power: gamma must be positive");
  if (z == Complex{}) return {0.0, 0.0};
  const double theta = argument_from_cut(z, normalize_angle(branch_cut)) +
                       kTwoPi * static_cast<double>(sheet);
  return branch_value(std::abs(z), theta, gamma);
}

Complex covering_map(Complex z, const ConeSpace& cone, long long sheet) {
  if (cone.index().is_integer()) return integer_power(z, cone.index().n());
  return fractional_power(z, cone.index().value(), cone.branch_cut(), sheet);
}

Complex inverse_branch(Complex psi, const ConeSpace& cone, std::size_t sheet) {
  if (!cone.index().is_integer()) {
    throw std::invalid_argument("inverse_branch: requires an integer cone index");
  }
  const std::size_t n = cone.index().n();
  if (sheet >= n) throw std::invalid_argument("inverse_branch: sheet out of range");
  if (psi == Complex{}) return {0.0, 0.0};
  const double nn = static_cast<double>(n);
  const double base = nn * cone.branch_cut();
  const double theta = base + normalize_angle(std::arg(psi) - base);
  return std::polar(std::pow(std::abs(psi), 1.0 / nn),
                    (theta + kTwoPi * static_cast<double>(sheet)) / nn);
}

std::vector<Complex> preimages(Complex psi, const ConeSpace& cone) {
  std::vector<Complex> out;
  const std::size_t n = cone.index().n();
  out.reserve(n);
  for (std::size_t s = 0; s < n; ++s) out.push_back(inverse_branch(psi, cone, s));
  return out;
}

double conformal_exponent(const ConeIndex& index) {
  const double nu = index.value();
  return 2.0 * (1.0 - nu) / nu;
}

double conformal_factor(double cone_radius, const ConeIndex& index) {
  if (!(cone_radius > 0.0)) {
    throw std::invalid_argument("conformal_factor: the apex is a curvature singularity");
  }
  const double nu = index.value();
  return std::pow(cone_radius, conformal_exponent(index)) / (nu * nu);
}

MetricSample metric_at_cone_radius(double cone_radius, const ConeIndex& index) {
  const double nu = index.value();
  const double lambda = conformal_factor(cone_radius, index);
  const double rho = std::pow(cone_radius, 1.0 / nu);
  return {Complex(cone_radius, 0.0), lambda, Metric2{lambda, 0.0, lambda * cone_radius * cone_radius},
          Metric2{1.0, 0.0, rho * rho / (nu * nu)}};
}

MetricSample restricted_metric(Complex z, const ConeIndex& index) {
  if (z == Complex{}) {
    throw std::invalid_argument("restricted_metric: the apex is a curvature singularity");
  }
  const double nu = index.value();
  if (nu >= 1.0) {
    const double phi = normalize_angle(std::arg(z));
    if (phi >= index.cone_angle() * (1.0 + kSectorSlack)) {
      throw std::invalid_argument("restricted_metric: arg z outside the fundamental sector");
    }
  }
  const double rho = std::abs(z);
  MetricSample s = metric_at_cone_radius(std::pow(rho, nu), index);
  s.at = cone_coordinate(z, index);
  return s;
}

double line_element_direct(double rho, double d_rho, double d_phi_nu, const ConeIndex& index) {
  const double nu = index.value();
  return d_rho * d_rho + (rho * rho / (nu * nu)) * d_phi_nu * d_phi_nu;
}

double line_element_conformal(double rho, double d_rho, double d_phi_nu, const ConeIndex& index,
                              double exponent) {
  const double nu = index.value();
  const double rho_nu = std::pow(rho, nu);
  const double d_rho_nu = nu * std::pow(rho, nu - 1.0) * d_rho;
  return std::pow(rho_nu, exponent) / (nu * nu) *
         (d_rho_nu * d_rho_nu + rho_nu * rho_nu * d_phi_nu * d_phi_nu);
}

double angle_deficit(const ConeIndex& index) {
  const double nu = index.value();
  return kTwoPi * (nu - 1.0) / nu;
}

ConeCircle measure_circle(double rho, const ConeIndex& index, std::size_t angular_samples) {
  if (!(rho > 0.0)) throw std::invalid_argument("measure_circle: radius must be positive");
  if (angular_samples == 0) throw std::invalid_argument("measure_circle: need angular samples");
  const double nu = index.value();
  const double cone_radius = std::pow(rho, nu);

  // Integrand is constant along the circle; the trapezoid still samples the
  // metric at every node so that any angular dependence would show up.
  const double d_phi = kTwoPi / static_cast<double>(angular_samples);
  double circumference = 0.0;
  for (std::size_t j = 0; j < angular_samples; ++j) {
    const MetricSample s = metric_at_cone_radius(cone_radius, index);
    circumference += std::sqrt(s.cone_form.g22) * d_phi;
  }

  boost::math::quadrature::tanh_sinh<double> integrator;
  // sqrt(lambda) taken with the halved exponent so it stays finite near the apex.
  const double half_exponent = 0.5 * conformal_exponent(index);
  const auto radial_speed = [&](double s) { return std::pow(s, half_exponent) / nu; };
  const double radius = integrator.integrate(radial_speed, 0.0, cone_radius);
  return {circumference, radius};
}

double measured_deficit(double rho, const ConeIndex& index) {
  const ConeCircle c = measure_circle(rho, index);
  return kTwoPi - c.circumference / c.radius;
}

double curvature_estimate(Complex psi, const ConeIndex& index, double relative_step) {
  if (!(relative_step > 0.0 && relative_step < 0.5)) {
    throw std::invalid_argument("curvature_estimate: relative_step must lie in (0, 0.5)");
  }
  if (psi == Complex{}) throw std::invalid_argument("curvature_estimate: the apex is singular");
  const double h = relative_step * std::abs(psi);
  const auto log_lambda = [&](Complex w) { return std::log(conformal_factor(std::abs(w), index)); };
  const double center = log_lambda(psi);
  const auto five_point = [&](double step) {
    return (log_lambda(psi + Complex(step, 0.0)) + log_lambda(psi - Complex(step, 0.0)) +
            log_lambda(psi + Complex(0.0, step)) + log_lambda(psi - Complex(0.0, step)) -
            4.0 * center) /
           (step * step);
  };
  // One Richardson step removes the h^2 term of the stencil.
  const double laplacian = (4.0 * five_point(0.5 * h) - five_point(h)) / 3.0;
  return -laplacian / (2.0 * conformal_factor(std::abs(psi), index));
}

Complex cone_flow(Complex psi0, double tau, double omega, const ConeIndex& index) {
  return std::polar(1.0, omega * index.value() * tau) * psi0;
}

double cone_flow_period(double omega, const ConeIndex& index, double scan_step) {
  if (!(scan_step > 0.0)) throw std::invalid_argument("cone_flow_period: scan_step must be positive");
  const auto im = [&](double tau) { return cone_flow(Complex(1.0, 0.0), tau, omega, index).imag(); };

  double a = scan_step;
  double fa = im(a);
  for (std::size_t k = 2; k < kMaxPeriodScan; ++k) {
    const double b = scan_step * static_cast<double>(k);
    const double fb = im(b);
    if (fa < 0.0 && fb >= 0.0) {
      if (fb == 0.0) return b;
      std::uintmax_t max_iter = 200;
      const auto [lo, hi] = boost::math::tools::toms748_solve(
          im, a, b, fa, fb, boost::math::tools::eps_tolerance<double>(53), max_iter);
      return 0.5 * (lo + hi);
    }
    a = b;
    fa = fb;
  }
  throw std::runtime_error("cone_flow_period: no return found within the scan range");
}

double cone_hamiltonian(Complex psi, double omega, double hbar, std::size_t n) {
  return hbar * omega * static_cast<double>(n) * std::norm(psi);
}

Complex cone_vector_field(Complex psi, double omega, std::size_t n) {
  return Complex(0.0, omega * static_cast<double>(n)) * psi;
}

double branch_discontinuity(double gamma, double rho, const ConeSpace& cone) {
  if (!(gamma > 0.0)) throw std::invalid_argument("branch_discontinuity: gamma must be positive");
  if (!(rho > 0.0)) throw std::invalid_argument("branch_discontinuity: rho must be positive");
  const double cut = cone.branch_cut();
  const Complex below = branch_value(rho, cut + kTwoPi, gamma);
  const Complex above = branch_value(rho, cut, gamma);
  return std::abs(below - above);
}

}  // namespace oscillator
