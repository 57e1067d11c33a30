// One line per acceptance criterion. Exit status is nonzero if any fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "oscillator/bargmann_space.hpp"
#include "oscillator/cyclic_symmetry.hpp"
#include "oscillator/harness/figures.hpp"
#include "oscillator/harness/suite.hpp"
#include "oscillator/orbifold_geometry.hpp"
#include "oscillator/phase_space.hpp"

using namespace oscillator;
namespace fs = std::filesystem;

namespace {

// Pinned tolerances.
constexpr double kNormRelative = 1e-9;
constexpr double kGramOffdiagonal = 1e-10;
constexpr double kNormSeconds = 1.0;
constexpr double kSpectrumNumeric = 1e-8;
constexpr double kFlow = 1e-12;
constexpr double kOrderSlack = 0.1;
constexpr double kPeriod = 1e-12;
constexpr double kConjugation = 1e-11;
constexpr double kDeficit = 1e-9;
constexpr double kConformal = 1e-10;
constexpr double kFractionalResidual = 1e-6;
constexpr double kDiscontinuity = 1e-10;
constexpr double kProbability = 1e-12;
constexpr double kSuiteSeconds = 10.0;
constexpr std::uint64_t kSeed = 20240601;

struct Outcome {
  bool pass;
  std::string detail;
};

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(g_); }
  std::size_t index(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(g_);
  }
  Complex annulus(double lo, double hi) { return std::polar(uniform(lo, hi), uniform(0.0, kTwoPi)); }
  HolomorphicState state(std::size_t degree, std::size_t truncation) {
    std::normal_distribution<double> n;
    std::vector<Complex> c(degree + 1);
    for (Complex& x : c) x = {n(g_), n(g_)};
    return HolomorphicState(std::move(c), truncation).normalized();
  }

 private:
  std::mt19937_64 g_;
};

double factorial(std::size_t k) {
  double f = 1.0;
  for (std::size_t i = 2; i <= k; ++i) f *= static_cast<double>(i);
  return f;
}

Outcome bargmann_norms() {
  const auto t0 = std::chrono::steady_clock::now();
  const QuadratureSpec spec = QuadratureSpec::for_degree(20);
  double worst_relative = 0.0;
  for (std::size_t n = 0; n <= 20; ++n) {
    const auto b = HolomorphicState::basis(n, 20);
    const Complex v = inner_product_quadrature(b, b, spec, Normalization::monomial);
    worst_relative = std::max(worst_relative, std::abs(v - factorial(n)) / factorial(n));
  }
  std::vector<HolomorphicState> basis;
  for (std::size_t n = 0; n <= 12; ++n) basis.push_back(HolomorphicState::basis(n, 12));
  const auto gram = gram_matrix(basis, QuadratureSpec::for_degree(12), Normalization::monomial);
  double worst_off = 0.0;
  for (std::size_t i = 0; i <= 12; ++i) {
    for (std::size_t j = 0; j <= 12; ++j) {
      if (i != j) worst_off = std::max(worst_off, std::abs(gram[i * 13 + j]));
    }
  }
  const double elapsed = seconds_since(t0);
  return {worst_relative <= kNormRelative && worst_off < kGramOffdiagonal && elapsed < kNormSeconds,
          "norms max rel " + sci(worst_relative) + " (tol " + sci(kNormRelative) +
              "), off-diagonal max " + sci(worst_off) + " (tol " + sci(kGramOffdiagonal) + "), " +
              sci(elapsed) + " s (limit " + sci(kNormSeconds) + " s)"};
}

Outcome spectrum() {
  const OscillatorParams p;
  bool exact = true;
  double numeric = 0.0;
  const Complex z0 = std::polar(0.9, 0.4);
  for (std::size_t n = 0; n <= 32; ++n) {
    const double expected = p.hbar() * p.omega() * (static_cast<double>(n) + 0.5);
    const Complex c = apply_hamiltonian(HolomorphicState::basis(n), p).coeff(n);
    exact = exact && c.real() == expected && c.imag() == 0.0;
    const auto f = [n](Complex z) {
      Complex r(1.0, 0.0);
      for (std::size_t k = 0; k < n; ++k) r *= z;
      return r;
    };
    const Complex h = apply_hamiltonian_numeric(f, z0, p, 1e-4, DifferenceRule::richardson) / f(z0);
    numeric = std::max(numeric, std::abs(h - expected));
  }
  return {exact && numeric <= kSpectrumNumeric,
          std::string("coefficient eigenvalues ") + (exact ? "bit-exact" : "NOT exact") +
              ", numeric max error " + sci(numeric) + " (tol " + sci(kSpectrumNumeric) + ")"};
}

Outcome classical_flow() {
  Rng rng(kSeed + 3);
  const OscillatorParams p(1.0, 1.3, 1.0);
  const double period = kTwoPi / p.omega();
  double drift = 0.0;
  double return_error = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const PhasePoint z(rng.annulus(0.0, 5.0));
    drift = std::max(drift, std::fabs(exact_flow(z, rng.uniform(-50.0, 50.0), p).rho() - z.rho()));
    return_error = std::max(return_error, std::abs(exact_flow(z, period, p).z() - z.z()));
  }
  const PhasePoint z(Complex(0.3, -1.2));
  const auto err = [&](std::size_t steps) {
    return std::abs(integrate_flow(z, 2.0, steps, p).final_point().z() - exact_flow(z, 2.0, p).z());
  };
  double worst_order = 0.0;
  double order = 0.0;
  for (std::size_t steps : {20u, 40u, 80u}) {
    const double o = std::log2(err(steps) / err(2 * steps));
    if (std::fabs(o - 4.0) >= worst_order) {
      worst_order = std::fabs(o - 4.0);
      order = o;
    }
  }
  return {drift <= kFlow && return_error <= kFlow && worst_order <= kOrderSlack,
          "|z| drift " + sci(drift) + ", return error " + sci(return_error) + " (tol " +
              sci(kFlow) + "), RK4 order " + std::to_string(order) + " (4 +/- " +
              sci(kOrderSlack) + ")"};
}

Outcome zn_periods() {
  const double omega = 1.0;
  const double hbar = 1.0;
  double worst = 0.0;
  bool energies = true;
  for (std::size_t n = 1; n <= 8; ++n) {
    const double t = cone_flow_period(omega, ConeIndex::integer(n), 1e-3);
    worst = std::max(worst, std::fabs(t - kTwoPi / (omega * static_cast<double>(n))));
    for (const Complex psi : {Complex(1.0, 0.0), Complex(0.0, 1.0), Complex(-1.0, 0.0)}) {
      energies = energies && cone_hamiltonian(psi, omega, hbar, n) ==
                                 hbar * omega * static_cast<double>(n);
    }
  }
  return {worst <= kPeriod && energies,
          "period max error " + sci(worst) + " (tol " + sci(kPeriod) + "), H_n(|psi|=1) " +
              (energies ? "= hbar omega n exactly" : "NOT exact")};
}

Outcome covering_conjugation() {
  Rng rng(kSeed + 5);
  const OscillatorParams p;
  double worst = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const std::size_t n = rng.index(1, 8);
    const ConeSpace cone(ConeIndex::integer(n));
    const Complex z = rng.annulus(0.1, 1.5);
    const double tau = rng.uniform(0.0, 10.0);
    const Complex lhs = covering_map(exact_flow(PhasePoint(z), tau, p).z(), cone);
    const Complex rhs = cone_flow(covering_map(z, cone), tau, p.omega(), cone.index());
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  bool orbits = true;
  for (std::size_t n = 1; n <= 8; ++n) {
    const ConeSpace cone(ConeIndex::integer(n));
    for (int k = 0; k < 20; ++k) {
      const Complex z = rng.annulus(0.2, 1.5);
      const auto pre = preimages(covering_map(z, cone), cone);
      if (pre.size() != n) orbits = false;
      // Each orbit point is matched by exactly one preimage.
      for (const Complex u : orbit(CyclicGroup(n), z)) {
        const auto close = std::count_if(pre.begin(), pre.end(),
                                         [&](Complex v) { return std::abs(u - v) < kConjugation; });
        if (close != 1) orbits = false;
      }
    }
  }
  return {worst < kConjugation && orbits, "max deviation " + sci(worst) + " over 1000 samples (tol " +
                                              sci(kConjugation) + "), preimage orbits " +
                                              (orbits ? "match" : "DO NOT match")};
}

Outcome cone_geometry() {
  double worst_deficit = 0.0;
  std::vector<double> indices{1, 2, 3, 4, 5, 6, 7, 8, 0.5, 1.5, 2.5};
  for (double nu : indices) {
    const ConeIndex idx = ConeIndex::from_real(nu);
    for (double rho : {0.5, 1.0, 2.0}) {
      worst_deficit =
          std::max(worst_deficit, std::fabs(measured_deficit(rho, idx) - kTwoPi * (nu - 1.0) / nu));
    }
  }
  Rng rng(kSeed + 6);
  double worst_identity = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const double nu = rng.index(0, 1) ? static_cast<double>(rng.index(1, 8)) : rng.uniform(0.2, 6.0);
    const ConeIndex idx = ConeIndex::from_real(nu);
    const double rho = rng.uniform(0.1, 3.0);
    const double dr = rng.uniform(-1.0, 1.0);
    const double dp = rng.uniform(-1.0, 1.0);
    const double direct = line_element_direct(rho, dr, dp, idx);
    const double conformal = line_element_conformal(rho, dr, dp, idx, conformal_exponent(idx));
    worst_identity = std::max(worst_identity, std::fabs(direct - conformal) / std::max(1.0, direct));
  }
  return {worst_deficit <= kDeficit && worst_identity <= kConformal,
          "deficit max error " + sci(worst_deficit) + " (tol " + sci(kDeficit) +
              "), conformal identity max " + sci(worst_identity) + " (tol " + sci(kConformal) + ")"};
}

Outcome fractional() {
  const std::vector<Complex> probes{std::polar(1.0, 0.5), std::polar(0.7, 2.0),
                                    std::polar(1.3, 4.0), std::polar(0.9, 5.7)};
  double residual = 0.0;
  double worst_order = 0.0;
  double jump = 0.0;
  bool members = false;
  for (double g : {0.5, 1.7, 2.5}) {
    const ConeSpace cone(ConeIndex::fractional(g));
    residual = std::max(residual, verify_fractional_eigenstate(g, cone, probes, 1e-5));
    const double r1 = verify_fractional_eigenstate(g, cone, probes, 1e-2);
    const double r2 = verify_fractional_eigenstate(g, cone, probes, 5e-3);
    const double r3 = verify_fractional_eigenstate(g, cone, probes, 2.5e-3);
    worst_order = std::max({worst_order, std::fabs(std::log2(r1 / r2) - 2.0),
                            std::fabs(std::log2(r2 / r3) - 2.0)});
    for (double rho : {0.5, 1.0, 2.0}) {
      const double closed = std::pow(rho, g) * std::abs(std::polar(1.0, kTwoPi * g) - 1.0);
      jump = std::max(jump, std::fabs(branch_discontinuity(g, rho, cone) - closed));
    }
    members = members || hilbert_membership(g).member;
  }
  // The jump vanishes exactly on integers.
  bool iff = true;
  for (double g : {1.0, 2.0, 3.0, 4.0, 7.0}) {
    const auto m = hilbert_membership(g);
    iff = iff && m.member && m.discontinuity <= kDiscontinuity;
  }
  for (double g : {0.5, 1.7, 2.5, 3.25}) {
    iff = iff && hilbert_membership(g).discontinuity > kDiscontinuity;
  }
  return {residual < kFractionalResidual && worst_order <= kOrderSlack && jump <= kDiscontinuity &&
              iff && !members,
          "residual " + sci(residual) + " (tol " + sci(kFractionalResidual) + "), order 2 +/- " +
              sci(worst_order) + ", jump error " + sci(jump) + ", vanishes iff integer: " +
              (iff ? "yes" : "no") + ", membership " + (members ? "TRUE for some gamma" : "false")};
}

Outcome superposition() {
  Rng rng(kSeed + 8);
  const OscillatorParams p;
  double sums = 0.0;
  double invariance = 0.0;
  bool lines_ok = true;
  for (int k = 0; k < 500; ++k) {
    const auto s = rng.state(rng.index(0, 32), 32);
    const auto before = energy_probabilities(s, p);
    double total = 0.0;
    for (const auto& l : before) total += l.probability;
    sums = std::max(sums, std::fabs(total - 1.0));
    const auto after = energy_probabilities(evolve(s, rng.uniform(-20.0, 20.0), p), p);
    for (std::size_t i = 0; i < before.size(); ++i) {
      invariance = std::max(invariance, std::fabs(after[i].probability - before[i].probability));
    }
    const std::size_t n = rng.index(1, 8);
    std::set<std::size_t> kept;
    std::set<std::size_t> divisible;
    for (const auto& l : energy_probabilities(project_invariant(s, n), p)) {
      if (l.probability > 0.0) kept.insert(static_cast<std::size_t>(l.index));
    }
    for (const auto& l : before) {
      const auto i = static_cast<std::size_t>(l.index);
      if (l.probability > 0.0 && i % n == 0) divisible.insert(i);
    }
    if (kept != divisible) lines_ok = false;
  }
  return {sums <= kProbability && invariance <= kProbability && lines_ok,
          "probability sum error " + sci(sums) + ", evolve drift " + sci(invariance) + " (tol " +
              sci(kProbability) + "), projected lines " + (lines_ok ? "= {k : n | k}" : "MISMATCH")};
}

std::vector<char> slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Outcome determinism(const fs::path& scratch) {
  harness::ExperimentConfig config;
  config.seed = kSeed;
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<std::vector<fs::path>> files(2);
  bool green = true;
  for (int pass = 0; pass < 2; ++pass) {
    const fs::path dir = scratch / ("run" + std::to_string(pass));
    fs::remove_all(dir);
    const auto suite = harness::run_suite({"all"}, config, dir);
    green = green && suite.pass();
    files[pass] = suite.files;
    const auto svgs = harness::render_figures(config, harness::figure_names(), dir);
    files[pass].insert(files[pass].end(), svgs.begin(), svgs.end());
  }
  const double elapsed = seconds_since(t0) / 2.0;
  bool identical = files[0].size() == files[1].size();
  std::size_t bytes = 0;
  for (std::size_t k = 0; identical && k < files[0].size(); ++k) {
    const auto a = slurp(files[0][k]);
    identical = !a.empty() && a == slurp(files[1][k]);
    bytes += a.size();
  }
  return {identical && green && elapsed < kSuiteSeconds,
          std::to_string(files[0].size()) + " artifacts, " + std::to_string(bytes) + " bytes " +
              (identical ? "byte-identical" : "DIFFER") + ", suite " + (green ? "green" : "RED") +
              ", " + sci(elapsed) + " s per run (limit " + sci(kSuiteSeconds) + " s)"};
}

}  // namespace

int main(int argc, char** argv) {
  const fs::path scratch =
      argc > 1 ? fs::path(argv[1]) : fs::temp_directory_path() / "oscillator-acceptance";
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"bargmann norms", bargmann_norms},
      {"spectrum", spectrum},
      {"classical flow", classical_flow},
      {"Z_n periods", zn_periods},
      {"covering conjugation", covering_conjugation},
      {"cone geometry", cone_geometry},
      {"fractional eigenstates", fractional},
      {"superposition semantics", superposition},
      {"determinism", [&] { return determinism(scratch); }},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o{false, ""};
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("[%s] %zu %s: %s\n", o.pass ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(),
                o.detail.c_str());
  }
  return failures == 0 ? 0 : 1;
}
