#include "oscillator/phase_space.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace oscillator {

namespace {

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw std::invalid_argument(std::string(what) + " must be finite");
}

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw std::invalid_argument(std::string(what) + " must be strictly positive");
  }
}

}  // namespace

double normalize_angle(double phi) {
  require_finite(phi, "angle");
  double a = std::fmod(phi, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  // fmod of a tiny negative value can round back up to 2 pi.
  if (a >= kTwoPi) a = 0.0;
  return a;
}

OscillatorParams::OscillatorParams(double mass, double omega, double hbar)
    : mass_(mass), omega_(omega), hbar_(hbar), r0_(0.0) {
  require_positive(mass, "mass");
  require_positive(omega, "omega");
  require_positive(hbar, "hbar");
  r0_ = std::sqrt(2.0 * hbar / (mass * omega));
}

PhasePoint::PhasePoint(Complex z) : z_(z) {
  require_finite(z.real(), "z");
  require_finite(z.imag(), "z");
}

PhasePoint PhasePoint::from_polar(double rho, double phi) {
  if (!(rho >= 0.0)) throw std::invalid_argument("rho must be non-negative");
  return PhasePoint(std::polar(rho, phi));
}

double PhasePoint::phi() const { return normalize_angle(std::arg(z_)); }

PhasePoint to_dimensionless(double x, double p, const OscillatorParams& params) {
  require_finite(x, "x");
  require_finite(p, "p");
  const double q = -p / (params.mass() * params.omega());
  return PhasePoint(Complex(x / params.r0(), q / params.r0()));
}

PhaseCoordinates from_dimensionless(const PhasePoint& point, const OscillatorParams& params) {
  const Complex z = point.z();
  return {z.real() * params.r0(), -params.mass() * params.omega() * params.r0() * z.imag()};
}

double hamiltonian(const PhasePoint& point, const OscillatorParams& params) {
  return params.hbar() * params.omega() * std::norm(point.z());
}

double hamiltonian_xp(double x, double p, const OscillatorParams& params) {
  const double m = params.mass();
  const double w = params.omega();
  return p * p / (2.0 * m) + m * w * w * x * x / 2.0;
}

Complex hamiltonian_vector_field(const PhasePoint& point, const OscillatorParams& params) {
  return Complex(0.0, params.omega()) * point.z();
}

PhasePoint exact_flow(const PhasePoint& point, double tau, const OscillatorParams& params) {
  require_finite(tau, "tau");
  return PhasePoint(std::polar(1.0, params.omega() * tau) * point.z());
}

Trajectory integrate_flow(const PhasePoint& point, double tau, std::size_t steps,
                          const OscillatorParams& params) {
  if (steps == 0) throw std::invalid_argument("integrate_flow: steps must be >= 1");
  require_finite(tau, "tau");
  if (tau < 0.0) throw std::invalid_argument("integrate_flow: tau must be non-negative");

  Trajectory out{params, {}};
  out.samples.push_back({0.0, point});
  if (tau == 0.0) return out;

  const Complex iw(0.0, params.omega());
  const auto rhs = [&](Complex z) { return iw * z; };
  const double h = tau / static_cast<double>(steps);

  out.samples.reserve(steps + 1);
  Complex z = point.z();
  for (std::size_t k = 1; k <= steps; ++k) {
    const Complex k1 = rhs(z);
    const Complex k2 = rhs(z + 0.5 * h * k1);
    const Complex k3 = rhs(z + 0.5 * h * k2);
    const Complex k4 = rhs(z + h * k3);
    z += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    // Last sample lands on tau exactly rather than on the accumulated sum.
    const double t = (k == steps) ? tau : h * static_cast<double>(k);
    out.samples.push_back({t, PhasePoint(z)});
  }
  return out;
}

Complex poisson_vector_field(const std::function<double(Complex)>& hamiltonian_fn, Complex at,
                             double hbar, double h) {
  require_positive(hbar, "hbar");
  require_positive(h, "h");
  const double dx = (hamiltonian_fn(at + Complex(h, 0.0)) - hamiltonian_fn(at - Complex(h, 0.0))) /
                    (2.0 * h);
  const double dy = (hamiltonian_fn(at + Complex(0.0, h)) - hamiltonian_fn(at - Complex(0.0, h))) /
                    (2.0 * h);
  const Complex d_dzbar = 0.5 * Complex(dx, dy);
  return Complex(0.0, 1.0 / hbar) * d_dzbar;
}

}  // namespace oscillator
