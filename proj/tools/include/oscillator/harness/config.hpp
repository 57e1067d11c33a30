// Run configuration, read from an INI file. Every key has a default; keys the
// schema does not know are rejected.
#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "oscillator/cyclic_symmetry.hpp"
#include "oscillator/phase_space.hpp"
#include "oscillator/quadrature.hpp"

namespace oscillator::harness {

struct Tolerances {
  double flow = 1e-12;               // |z| preservation, return at 2 pi / omega
  double rk4_order = 0.1;            // |measured order - 4|
  double rk4_error = 1e-10;          // RK4 endpoint after 1000 steps over a period
  double vector_field = 1e-8;        // finite-difference generator checks
  double period = 1e-12;             // cone_flow_period vs 2 pi / (omega n)
  double exact = 1e-15;              // relations evaluated by plain arithmetic
  double conjugation = 1e-11;        // covering_map / flow commutation
  double deficit = 1e-9;             // measured vs 2 pi (nu - 1) / nu
  double conformal = 1e-10;          // corrected conformal exponent identity
  double curvature = 1e-6;           // |K| away from the apex
  double norm_relative = 1e-9;       // ||z^n||^2 / n! - 1
  double gram_offdiagonal = 1e-10;   // |<z^j, z^k>|, j != k
  double inner_product = 1e-10;      // quadrature vs coefficient form
  double spectrum_numeric = 1e-8;    // differentiated operator on z^n
  double probability = 1e-12;        // probability sums and invariance
  double phase = 1e-13;              // evolve vs exp(i tau E / hbar)
  double fractional_residual = 1e-6; // eigen-relation residual at h = 1e-5
  double fractional_order = 0.1;     // |measured order - 2|
  double discontinuity = 1e-10;      // branch jump vs its closed form

  /// Name-keyed access used by the parser and for documentation.
  std::map<std::string, double*> by_name();
};

struct FigureOptions {
  std::size_t trajectory_n = 8;  // zeta-orbit markers on the unit circle
  std::size_t sector_n = 4;
  std::vector<double> spectrum_coefficients{0.0, 0.0, 1.0};  // Fock coefficients
};

struct ExperimentConfig {
  OscillatorParams oscillator;
  std::vector<ConeIndex> cone_indices;        // integer cones, default 1..8
  std::vector<ConeIndex> fractional_cones;    // deficit checks, default 0.5, 1.5, 2.5
  std::vector<double> gammas{0.5, 1.7, 2.5};  // fractional eigenstates
  std::size_t truncation = 32;
  std::size_t norm_degree = 20;
  std::size_t gram_degree = 12;
  std::optional<QuadratureSpec> quadrature;   // unset: for_degree(norm_degree)
  std::size_t samples = 1000;                 // randomized sweep size
  Tolerances tolerances;
  FigureOptions figures;
  std::filesystem::path output_dir;
  std::uint64_t seed = 1;

  ExperimentConfig();

  QuadratureSpec quadrature_spec() const;
  /// Throws std::invalid_argument on any violated invariant.
  void validate() const;
};

/// Parses INI text. Errors carry the offending section and key.
ExperimentConfig parse_config(const std::string& text);
ExperimentConfig load_config(const std::filesystem::path& path);

/// Explicit value, else OSCILLATOR_OUT, else "results".
std::filesystem::path default_output_dir(const std::filesystem::path& configured);

}  // namespace oscillator::harness
