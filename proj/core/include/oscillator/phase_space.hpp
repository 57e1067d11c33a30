// Classical harmonic oscillator on the complex phase plane.
//
// The phase plane (x, p) is identified with C through the dimensionless
// coordinate z = (x - i p/(m omega)) / r0, r0^2 = 2 hbar/(m omega). In this
// coordinate H = hbar omega |z|^2 and the flow is the U(1) rotation
// z(tau) = e^{i omega tau} z.
#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <numbers>
#include <vector>

namespace oscillator {

using Complex = std::complex<double>;

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Map any finite angle into [0, 2 pi).
double normalize_angle(double phi);

/// Physical constants of the oscillator. Defaults to m = omega = hbar = 1.
class OscillatorParams {
 public:
  OscillatorParams() : OscillatorParams(1.0, 1.0, 1.0) {}
  OscillatorParams(double mass, double omega, double hbar);

  double mass() const { return mass_; }
  double omega() const { return omega_; }
  double hbar() const { return hbar_; }
  /// Length scale with r0^2 = 2 hbar / (m omega).
  double r0() const { return r0_; }

  bool operator==(const OscillatorParams&) const = default;

 private:
  double mass_;
  double omega_;
  double hbar_;
  double r0_;
};

/// A point of the classical phase space. Equality is defined on z alone;
/// the polar form is derived on demand.
class PhasePoint {
 public:
  PhasePoint() = default;
  explicit PhasePoint(Complex z);
  static PhasePoint from_polar(double rho, double phi);

  Complex z() const { return z_; }
  double rho() const { return std::abs(z_); }
  /// Argument of z in [0, 2 pi).
  double phi() const;

  bool operator==(const PhasePoint&) const = default;

 private:
  Complex z_{0.0, 0.0};
};

struct PhaseCoordinates {
  double x;
  double p;
};

struct TrajectorySample {
  double tau;
  PhasePoint point;
};

struct Trajectory {
  OscillatorParams params;
  std::vector<TrajectorySample> samples;  // tau strictly increasing

  const PhasePoint& final_point() const { return samples.back().point; }
};

PhasePoint to_dimensionless(double x, double p, const OscillatorParams& params);
PhaseCoordinates from_dimensionless(const PhasePoint& point, const OscillatorParams& params);

/// H = hbar omega |z|^2.
double hamiltonian(const PhasePoint& point, const OscillatorParams& params);
/// H = p^2/(2m) + m omega^2 x^2 / 2, the same function written in (x, p).
double hamiltonian_xp(double x, double p, const OscillatorParams& params);

/// The d/dz component of V_H, i omega z. The d/dzbar part is its conjugate.
Complex hamiltonian_vector_field(const PhasePoint& point, const OscillatorParams& params);

/// z -> e^{i omega tau} z.
PhasePoint exact_flow(const PhasePoint& point, double tau, const OscillatorParams& params);

/// Fixed-step classical RK4 for dz/dtau = i omega z. Returns steps + 1
/// samples (a single sample when tau == 0).
Trajectory integrate_flow(const PhasePoint& point, double tau, std::size_t steps,
                          const OscillatorParams& params);

/// Vector field obtained from a real Hamiltonian through the Poisson tensor of
/// Omega = -i hbar dz ^ dzbar: V^z = (i / hbar) dH/dzbar, with the Wirtinger
/// derivative dH/dzbar = (dH/dx + i dH/dy)/2 taken by central differences of
/// step h in the coordinate plane.
Complex poisson_vector_field(const std::function<double(Complex)>& hamiltonian_fn, Complex at,
                             double hbar, double h = 1e-6);

}  // namespace oscillator
