#include "oscillator/bargmann_space.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace oscillator {

namespace {

Complex to_double(ExtComplex v) {
  return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

GridFunction sample_state(const PolarGrid& grid, const HolomorphicState& s,
                          Normalization convention) {
  return GridFunction::sample(grid, [&](ExtComplex z) { return s.evaluate(z, convention); });
}

// Euclidean distance from z to the ray {t e^{i cut} : t >= 0}.
double distance_to_cut(Complex z, double cut) {
  double delta = std::fabs(normalize_angle(std::arg(z) - cut));
  if (delta > std::numbers::pi) delta = kTwoPi - delta;
  if (delta >= std::numbers::pi / 2.0) return std::abs(z);
  return std::abs(z) * std::sin(delta);
}

}  // namespace

Complex inner_product_analytic(const HolomorphicState& a, const HolomorphicState& b) {
  const auto ca = a.coeffs();
  const auto cb = b.coeffs();
  Complex s{};
  for (std::size_t k = 0; k < std::min(ca.size(), cb.size()); ++k) s += std::conj(ca[k]) * cb[k];
  return s;
}

Complex inner_product_quadrature(const HolomorphicState& a, const HolomorphicState& b,
                                 const QuadratureSpec& spec, Normalization convention) {
  spec.require_resolves(std::max(a.degree(), b.degree()));
  const PolarGrid grid(spec);
  return to_double(
      integrate_product(sample_state(grid, a, convention), sample_state(grid, b, convention)));
}

std::vector<Complex> gram_matrix(std::span<const HolomorphicState> states,
                                 const QuadratureSpec& spec, Normalization convention) {
  std::size_t top = 0;
  for (const HolomorphicState& s : states) top = std::max(top, s.degree());
  spec.require_resolves(top);
  const PolarGrid grid(spec);

  std::vector<GridFunction> sampled;
  sampled.reserve(states.size());
  for (const HolomorphicState& s : states) sampled.push_back(sample_state(grid, s, convention));

  const std::size_t n = states.size();
  std::vector<Complex> gram(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      gram[i * n + j] = to_double(integrate_product(sampled[i], sampled[j]));
    }
  }
  return gram;
}

double eigenvalue(std::size_t n, const OscillatorParams& params) {
  return params.hbar() * params.omega() * (static_cast<double>(n) + 0.5);
}

HolomorphicState apply_hamiltonian(const HolomorphicState& state, const OscillatorParams& params) {
  std::vector<Complex> c(state.coeffs().begin(), state.coeffs().end());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] *= eigenvalue(k, params);
  return HolomorphicState(std::move(c), state.truncation());
}

HolomorphicState evolve(const HolomorphicState& state, double tau, const OscillatorParams& params) {
  if (!std::isfinite(tau)) throw std::invalid_argument("evolve: tau must be finite");
  std::vector<Complex> c(state.coeffs().begin(), state.coeffs().end());
  for (std::size_t k = 0; k < c.size(); ++k) {
    const double phase = eigenvalue(k, params) * tau / params.hbar();
    c[k] *= std::polar(1.0, phase);
  }
  return HolomorphicState(std::move(c), state.truncation());
}

std::vector<SpectralLine> energy_probabilities(const HolomorphicState& state,
                                               const OscillatorParams& params) {
  const double total = state.norm_squared();
  if (!(total > 0.0)) throw std::invalid_argument("energy_probabilities: zero state");
  const auto c = state.coeffs();
  std::vector<SpectralLine> lines;
  lines.reserve(c.size());
  for (std::size_t k = 0; k < c.size(); ++k) {
    lines.push_back({static_cast<double>(k), eigenvalue(k, params), std::norm(c[k]) / total});
  }
  return lines;
}

Complex radial_derivative(const std::function<Complex(Complex)>& f, Complex z, double h,
                          DifferenceRule rule) {
  if (!(h > 0.0)) throw std::invalid_argument("radial_derivative: h must be positive");
  const double r = std::abs(z);
  if (!(r > 0.0)) throw std::invalid_argument("radial_derivative: no radial direction at 0");
  const Complex u = z / r;
  const auto central = [&](double step) {
    return (f(z + step * u) - f(z - step * u)) / (2.0 * step * u);
  };
  if (rule == DifferenceRule::central) return central(h);
  return (4.0 * central(0.5 * h) - central(h)) / 3.0;
}

Complex apply_hamiltonian_numeric(const std::function<Complex(Complex)>& f, Complex z,
                                  const OscillatorParams& params, double h, DifferenceRule rule) {
  const double hw = params.hbar() * params.omega();
  return hw * z * radial_derivative(f, z, h, rule) + 0.5 * hw * f(z);
}

double verify_fractional_eigenstate(double gamma, const ConeSpace& cone,
                                    std::span<const Complex> probes, double h,
                                    const OscillatorParams& params) {
  if (!(gamma > 0.0)) throw std::invalid_argument("verify_fractional_eigenstate: gamma must be > 0");
  if (!(h > 0.0)) throw std::invalid_argument("verify_fractional_eigenstate: h must be > 0");
  const double cut = cone.branch_cut();
  const auto psi = [&](Complex w) { return fractional_power(w, gamma, cut, 0); };
  const double energy = params.hbar() * params.omega() * (gamma + 0.5);

  double worst = 0.0;
  for (const Complex z : probes) {
    if (!(std::abs(z) > h)) {
      throw std::invalid_argument("verify_fractional_eigenstate: probe at the origin");
    }
    if (!(distance_to_cut(z, cut) > h)) {
      throw std::invalid_argument("verify_fractional_eigenstate: probe on the branch cut");
    }
    const Complex lhs = apply_hamiltonian_numeric(psi, z, params, h, DifferenceRule::central);
    worst = std::max(worst, std::abs(lhs - energy * psi(z)));
  }
  return worst;
}

MembershipReport hilbert_membership(double gamma) {
  if (!(gamma > 0.0)) throw std::invalid_argument("hilbert_membership: gamma must be positive");
  const ConeSpace cone(ConeIndex::from_real(gamma));
  return {is_near_integer(gamma), branch_discontinuity(gamma, 1.0, cone)};
}

}  // namespace oscillator
