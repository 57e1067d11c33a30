// Quantum oscillator in the Bargmann-Fock representation: holomorphic
// functions of z with the Gaussian inner product
//   <a, b> = (1/pi) * integral conj(a(z)) b(z) e^{-|z|^2} rho d rho d phi,
// Hamiltonian hbar omega (z d/dz + 1/2) and evolution exp(i tau H / hbar).
#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "oscillator/holomorphic_state.hpp"
#include "oscillator/orbifold_geometry.hpp"
#include "oscillator/phase_space.hpp"
#include "oscillator/quadrature.hpp"

namespace oscillator {

/// sum conj(a_k) b_k (Fock convention, monomials orthonormal).
Complex inner_product_analytic(const HolomorphicState& a, const HolomorphicState& b);

/// Quadrature evaluation of the Gaussian inner product. Throws
/// "quadrature underresolved" if `spec` cannot integrate the product exactly.
Complex inner_product_quadrature(const HolomorphicState& a, const HolomorphicState& b,
                                 const QuadratureSpec& spec,
                                 Normalization convention = Normalization::fock);

/// Gram matrix <s_i, s_j> on one shared grid, row-major.
std::vector<Complex> gram_matrix(std::span<const HolomorphicState> states,
                                 const QuadratureSpec& spec,
                                 Normalization convention = Normalization::fock);

/// hbar omega (n + 1/2).
double eigenvalue(std::size_t n, const OscillatorParams& params);

/// c_n -> hbar omega (n + 1/2) c_n.
HolomorphicState apply_hamiltonian(const HolomorphicState& state, const OscillatorParams& params);

/// c_n -> e^{i omega (n + 1/2) tau} c_n.
HolomorphicState evolve(const HolomorphicState& state, double tau, const OscillatorParams& params);

struct SpectralLine {
  double index;        // n, or gamma for fractional eigenstates
  double energy;       // hbar omega (index + 1/2)
  double probability;  // |c_n|^2 / sum |c_k|^2
};

/// One line per n <= truncation. Throws on the zero state.
std::vector<SpectralLine> energy_probabilities(const HolomorphicState& state,
                                               const OscillatorParams& params = {});

enum class DifferenceRule {
  central,     // (f(z + h u) - f(z - h u)) / (2 h u), error O(h^2)
  richardson,  // central at h and h/2 combined, error O(h^4)
};

/// Derivative of a holomorphic f at z along the radial direction u = z/|z|.
Complex radial_derivative(const std::function<Complex(Complex)>& f, Complex z, double h,
                          DifferenceRule rule);

/// (H f)(z) = hbar omega z f'(z) + hbar omega f(z) / 2 with f' from
/// radial_derivative.
Complex apply_hamiltonian_numeric(const std::function<Complex(Complex)>& f, Complex z,
                                  const OscillatorParams& params, double h,
                                  DifferenceRule rule = DifferenceRule::central);

/// Max over probes of |H psi_gamma - hbar omega (gamma + 1/2) psi_gamma| with
/// psi_gamma = z^gamma on the principal sheet of `cone`'s branch cut and
/// central differences of step h. Probes at the origin, on the cut or within
/// h of either are rejected.
double verify_fractional_eigenstate(double gamma, const ConeSpace& cone,
                                    std::span<const Complex> probes, double h,
                                    const OscillatorParams& params = {});

struct MembershipReport {
  bool member;
  double discontinuity;  // branch jump at rho = 1, the obstruction witness
};

/// z^gamma lies in the Hilbert space iff gamma is an integer (within 1e-12).
MembershipReport hilbert_membership(double gamma);

}  // namespace oscillator
