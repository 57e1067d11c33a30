#include "oscillator/harness/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <numeric>
#include <random>
#include <stdexcept>

#include "oscillator/bargmann_space.hpp"
#include "oscillator/cyclic_symmetry.hpp"
#include "oscillator/orbifold_geometry.hpp"
#include "oscillator/phase_space.hpp"

namespace oscillator::harness {

namespace {

using std::numbers::pi;

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", x);
  return buf;
}

std::string fmt(std::size_t n) { return std::to_string(n); }

double factorial(std::size_t k) {
  double f = 1.0;
  for (std::size_t i = 2; i <= k; ++i) f *= static_cast<double>(i);
  return f;
}

class Rows {
 public:
  explicit Rows(std::string experiment) : experiment_(std::move(experiment)) {}

  void add(const std::string& relation, const std::string& detail, Value observed, Value expected,
           double tolerance) {
    rows_.push_back(make_row(experiment_, relation + "/" + detail, observed, expected, tolerance));
  }

  std::vector<ReportRow> take() { return std::move(rows_); }

 private:
  std::string experiment_;
  std::vector<ReportRow> rows_;
};

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  std::size_t pick(std::size_t count) {
    return std::uniform_int_distribution<std::size_t>(0, count - 1)(rng_);
  }
  Complex annulus(double lo, double hi) { return std::polar(uniform(lo, hi), uniform(0.0, kTwoPi)); }
  /// Normalized state with coefficients uniform in the unit square.
  HolomorphicState state(std::size_t degree, std::size_t truncation) {
    std::vector<Complex> c(degree + 1);
    for (Complex& x : c) x = {uniform(-1.0, 1.0), uniform(-1.0, 1.0)};
    return HolomorphicState(std::move(c), truncation).normalized();
  }

 private:
  std::mt19937_64 rng_;
};

std::size_t cone_n(const ConeIndex& c) { return c.n(); }

// ---------------------------------------------------------------- classical

std::vector<ReportRow> classical_flow(const ExperimentConfig& cfg, Sampler& rng) {
  Rows out("classical-flow");
  const OscillatorParams& p = cfg.oscillator;
  const Tolerances& tol = cfg.tolerances;
  const double w = p.omega();
  const double hw = p.hbar() * w;

  out.add("coordinate", "x=r0 p=0", to_dimensionless(p.r0(), 0.0, p).z(), Complex(1.0, 0.0),
          tol.exact);
  out.add("coordinate", "x=0 p=-m*omega*r0",
          to_dimensionless(0.0, -p.mass() * w * p.r0(), p).z(), Complex(0.0, 1.0), tol.exact);
  double round_trip = 0.0;
  double xp_form = 0.0;
  for (std::size_t k = 0; k < cfg.samples; ++k) {
    const PhasePoint z(rng.annulus(0.0, 5.0));
    const PhaseCoordinates xp = from_dimensionless(z, p);
    round_trip = std::max(round_trip, std::abs(to_dimensionless(xp.x, xp.p, p).z() - z.z()));
    const double h = hamiltonian(z, p);
    xp_form = std::max(xp_form, std::fabs(hamiltonian_xp(xp.x, xp.p, p) - h) / std::max(1.0, h));
  }
  out.add("coordinate", "round-trip max", round_trip, 0.0, tol.flow);
  out.add("hamiltonian", "z=1", hamiltonian(PhasePoint(Complex(1.0, 0.0)), p), hw,
          tol.exact * hw);
  out.add("hamiltonian", "xp-form max relative", xp_form, 0.0, tol.flow);

  const auto h_fn = [&](Complex z) { return hamiltonian(PhasePoint(z), p); };
  double poisson = 0.0;
  for (std::size_t k = 0; k < 64; ++k) {
    const PhasePoint z(rng.annulus(0.1, 3.0));
    const Complex v = poisson_vector_field(h_fn, z.z(), p.hbar());
    poisson = std::max(poisson, std::abs(v - hamiltonian_vector_field(z, p)) / std::max(1.0, w));
  }
  out.add("vector-field", "poisson route max", poisson, 0.0, tol.vector_field);
  {
    const PhasePoint z(Complex(1.0, 2.0));
    const auto fd = [&](double s) { return (exact_flow(z, s, p).z() - z.z()) / s; };
    const double h = 1e-4 / w;
    const Complex derivative = 2.0 * fd(h / 2.0) - fd(h);
    out.add("vector-field", "flow derivative z=1+2i", derivative, hamiltonian_vector_field(z, p),
            tol.vector_field * w);
  }

  const double period = kTwoPi / w;
  out.add("flow", "z=1 tau=2pi/omega", exact_flow(PhasePoint(Complex(1.0, 0.0)), period, p).z(),
          Complex(1.0, 0.0), tol.flow);
  out.add("flow", "z=1 tau=pi/omega", exact_flow(PhasePoint(Complex(1.0, 0.0)), pi / w, p).z(),
          Complex(-1.0, 0.0), tol.flow);
  out.add("flow", "z=2i tau=pi/(2omega)",
          exact_flow(PhasePoint(Complex(0.0, 2.0)), pi / (2.0 * w), p).z(), Complex(-2.0, 0.0),
          tol.flow);
  double norm_drift = 0.0;
  double return_error = 0.0;
  for (std::size_t k = 0; k < cfg.samples; ++k) {
    const PhasePoint z(rng.annulus(0.0, 5.0));
    const double tau = rng.uniform(-50.0, 50.0);
    norm_drift = std::max(norm_drift, std::fabs(exact_flow(z, tau, p).rho() - z.rho()));
    return_error = std::max(return_error, std::abs(exact_flow(z, period, p).z() - z.z()));
  }
  out.add("flow", "norm drift max", norm_drift, 0.0, tol.flow);
  out.add("flow", "return at 2pi/omega max", return_error, 0.0, tol.flow);

  const PhasePoint start(Complex(0.3, -1.2));
  const double span = 3.0 / w;
  const auto rk4_error = [&](std::size_t steps) {
    return std::abs(integrate_flow(start, span, steps, p).final_point().z() -
                    exact_flow(start, span, p).z());
  };
  for (std::size_t steps : {20u, 40u, 80u}) {
    const double order = std::log2(rk4_error(steps) / rk4_error(2 * steps));
    out.add("flow", "rk4 order steps=" + fmt(steps) + ":" + fmt(2 * steps), order, 4.0,
            tol.rk4_order);
  }
  out.add("flow", "rk4 1000 steps z=1",
          integrate_flow(PhasePoint(Complex(1.0, 0.0)), period, 1000, p).final_point().z(),
          Complex(1.0, 0.0), tol.rk4_error);
  return out.take();
}

// ---------------------------------------------------------------- periods

std::vector<ReportRow> zn_periods(const ExperimentConfig& cfg, Sampler&) {
  Rows out("zn-periods");
  const double w = cfg.oscillator.omega();
  for (const ConeIndex& c : cfg.cone_indices) {
    const double n = c.value();
    out.add("zn-period", "n=" + fmt(cone_n(c)), cone_flow_period(w, c, 1e-3 / w),
            kTwoPi / (w * n), cfg.tolerances.period);
  }
  return out.take();
}

// ---------------------------------------------------------------- geometry

std::vector<ReportRow> cone_geometry(const ExperimentConfig& cfg, Sampler& rng) {
  Rows out("cone-geometry");
  const Tolerances& tol = cfg.tolerances;
  const double w = cfg.oscillator.omega();

  for (const ConeIndex& c : cfg.cone_indices) {
    const std::size_t n = cone_n(c);
    const ConeSpace cone(c);
    const CyclicGroup group(n);
    double collapse = 0.0;
    double matching = 0.0;
    std::size_t count_mismatch = 0;
    for (std::size_t k = 0; k < 64; ++k) {
      const Complex z = rng.annulus(0.2, 1.2);
      const Complex psi = covering_map(z, cone);
      const auto ring = orbit(group, z);
      for (const Complex u : ring) collapse = std::max(collapse, std::abs(covering_map(u, cone) - psi));
      const auto pre = preimages(psi, cone);
      if (pre.size() != n) ++count_mismatch;
      for (const Complex u : ring) {
        double nearest = INFINITY;
        for (const Complex v : pre) nearest = std::min(nearest, std::abs(u - v));
        matching = std::max(matching, nearest);
      }
    }
    out.add("covering", "orbit collapse n=" + fmt(n), collapse, 0.0, tol.conjugation);
    out.add("zn-action", "preimage count mismatches n=" + fmt(n),
            static_cast<double>(count_mismatch), 0.0, tol.exact);
    out.add("zn-action", "preimages match orbit n=" + fmt(n), matching, 0.0, tol.conjugation);
  }

  double conjugation = 0.0;
  for (std::size_t k = 0; k < cfg.samples; ++k) {
    const ConeIndex& c = cfg.cone_indices[rng.pick(cfg.cone_indices.size())];
    const ConeSpace cone(c);
    const Complex z = rng.annulus(0.1, 1.5);
    const double tau = rng.uniform(0.0, 10.0 / w);
    const Complex lhs = covering_map(exact_flow(PhasePoint(z), tau, cfg.oscillator).z(), cone);
    const Complex rhs = cone_flow(covering_map(z, cone), tau, w, c);
    conjugation = std::max(conjugation, std::abs(lhs - rhs));
  }
  out.add("cone-flow", "conjugation max samples=" + fmt(cfg.samples), conjugation, 0.0,
          tol.conjugation);

  std::vector<ConeIndex> all = cfg.cone_indices;
  all.insert(all.end(), cfg.fractional_cones.begin(), cfg.fractional_cones.end());
  for (const ConeIndex& c : all) {
    const double nu = c.value();
    const std::string tag = c.is_integer() ? "n=" + fmt(c.n()) : "gamma=" + fmt(nu);
    double identity = 0.0;
    double flatness = 0.0;
    for (std::size_t k = 0; k < 64; ++k) {
      const double rho = rng.uniform(0.1, 3.0);
      const double dr = rng.uniform(-1.0, 1.0);
      const double dp = rng.uniform(-1.0, 1.0);
      const double direct = line_element_direct(rho, dr, dp, c);
      const double conformal = line_element_conformal(rho, dr, dp, c, conformal_exponent(c));
      identity = std::max(identity, std::fabs(direct - conformal) / std::max(1.0, direct));
      flatness = std::max(flatness, std::fabs(curvature_estimate(rng.annulus(0.5, 3.0), c)));
    }
    out.add("cone-metric", "conformal identity max relative " + tag, identity, 0.0,
            tol.conformal);
    out.add("curvature", "flat off apex max " + tag, flatness, 0.0, tol.curvature);
    const std::string relation = c.is_integer() ? "curvature" : "fractional-cone";
    for (double rho : {0.5, 1.0, 2.0}) {
      out.add(relation, "deficit " + tag + " rho=" + fmt(rho), measured_deficit(rho, c),
              kTwoPi * (nu - 1.0) / nu, tol.deficit);
    }
  }
  return out.take();
}

// ---------------------------------------------------------------- norms

std::vector<ReportRow> bargmann_norms(const ExperimentConfig& cfg, Sampler& rng) {
  Rows out("bargmann-norms");
  const Tolerances& tol = cfg.tolerances;
  const QuadratureSpec spec = cfg.quadrature_spec();
  const std::size_t N = cfg.truncation;

  for (std::size_t n = 0; n <= cfg.norm_degree; ++n) {
    const auto b = HolomorphicState::basis(n, N);
    const double expected = factorial(n);
    out.add("bargmann-norm", "n=" + fmt(n),
            inner_product_quadrature(b, b, spec, Normalization::monomial), expected,
            tol.norm_relative * expected);
  }

  std::vector<HolomorphicState> basis;
  for (std::size_t n = 0; n <= cfg.gram_degree; ++n) basis.push_back(HolomorphicState::basis(n, N));
  const auto gram = gram_matrix(basis, spec, Normalization::monomial);
  const std::size_t m = basis.size();
  for (std::size_t j = 0; j < m; ++j) {
    const double expected = factorial(j);
    out.add("gram", "diagonal " + fmt(j) + "-" + fmt(j), gram[j * m + j], expected,
            tol.norm_relative * expected);
  }
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t k = j + 1; k < m; ++k) {
      out.add("gram", "offdiagonal " + fmt(j) + "-" + fmt(k), gram[j * m + k], 0.0,
              tol.gram_offdiagonal);
    }
  }

  double basis_pairs = 0.0;
  for (std::size_t j = 0; j <= cfg.norm_degree; ++j) {
    for (std::size_t k = 0; k <= cfg.norm_degree; ++k) {
      const auto a = HolomorphicState::basis(j, N);
      const auto b = HolomorphicState::basis(k, N);
      basis_pairs = std::max(basis_pairs, std::abs(inner_product_quadrature(a, b, spec) -
                                                   inner_product_analytic(a, b)) /
                                              2.0);
    }
  }
  out.add("bargmann-inner", "basis pairs max scaled", basis_pairs, 0.0, tol.inner_product);
  double random_pairs = 0.0;
  for (std::size_t k = 0; k < 100; ++k) {
    const auto a = rng.state(cfg.norm_degree, N);
    const auto b = rng.state(cfg.norm_degree, N);
    const double scale = 1.0 + std::sqrt(a.norm_squared() * b.norm_squared());
    random_pairs = std::max(random_pairs, std::abs(inner_product_quadrature(a, b, spec) -
                                                   inner_product_analytic(a, b)) /
                                              scale);
  }
  out.add("bargmann-inner", "random pairs max scaled", random_pairs, 0.0, tol.inner_product);
  return out.take();
}

// ---------------------------------------------------------------- spectrum

std::vector<ReportRow> spectrum(const ExperimentConfig& cfg, Sampler&) {
  Rows out("spectrum");
  const Tolerances& tol = cfg.tolerances;
  const OscillatorParams& p = cfg.oscillator;
  const double hw = p.hbar() * p.omega();
  const Complex z0 = std::polar(0.9, 0.4);

  for (std::size_t n = 0; n <= cfg.truncation; ++n) {
    const double expected = hw * (static_cast<double>(n) + 0.5);
    const auto applied = apply_hamiltonian(HolomorphicState::basis(n, cfg.truncation), p);
    out.add("spectrum", "exact n=" + fmt(n), applied.coeff(n), expected, tol.exact * expected);
    out.add("spectrum", "zero-point n=" + fmt(n),
            applied.coeff(n).real() / hw - static_cast<double>(n), 0.5,
            tol.exact * static_cast<double>(n + 1));

    const auto f = [n](Complex z) {
      Complex r(1.0, 0.0);
      for (std::size_t k = 0; k < n; ++k) r *= z;
      return r;
    };
    const Complex numeric =
        apply_hamiltonian_numeric(f, z0, p, 1e-4, DifferenceRule::richardson) / f(z0);
    out.add("spectrum", "numeric n=" + fmt(n), numeric, expected, tol.spectrum_numeric);
  }
  return out.take();
}

// ---------------------------------------------------------------- evolution

std::vector<ReportRow> evolution(const ExperimentConfig& cfg, Sampler& rng) {
  Rows out("evolution");
  const Tolerances& tol = cfg.tolerances;
  const OscillatorParams& p = cfg.oscillator;
  const std::size_t N = cfg.truncation;
  const std::size_t trials = std::min<std::size_t>(cfg.samples, 200);

  double sums = 0.0;
  double invariance = 0.0;
  double parseval = 0.0;
  double phases = 0.0;
  double group_law = 0.0;
  // H applied to sum_k z^k/sqrt(k!) carries every eigenvalue as a coefficient.
  const auto levels = apply_hamiltonian(HolomorphicState(std::vector<Complex>(N + 1, 1.0), N), p);
  for (std::size_t k = 0; k < trials; ++k) {
    const auto s = rng.state(rng.pick(N + 1), N);
    const double t1 = rng.uniform(-2.0, 2.0) / p.omega();
    const double t2 = rng.uniform(-2.0, 2.0) / p.omega();
    const auto lines = energy_probabilities(s, p);
    double total = 0.0;
    for (const auto& l : lines) total += l.probability;
    sums = std::max(sums, std::fabs(total - 1.0));

    const auto moved = evolve(s, t1, p);
    const auto moved_lines = energy_probabilities(moved, p);
    for (std::size_t i = 0; i < lines.size(); ++i) {
      invariance = std::max(invariance, std::fabs(moved_lines[i].probability - lines[i].probability));
    }
    parseval = std::max(parseval, std::fabs(moved.norm_squared() - s.norm_squared()));

    for (std::size_t i = 0; i <= N; ++i) {
      const double e = levels.coeff(i).real();
      const Complex expected = s.coeff(i) * std::exp(Complex(0.0, t1 * e / p.hbar()));
      phases = std::max(phases, std::abs(moved.coeff(i) - expected));
    }
    const auto twice = evolve(moved, t2, p);
    const auto once = evolve(s, t1 + t2, p);
    for (std::size_t i = 0; i <= N; ++i) {
      group_law = std::max(group_law, std::abs(twice.coeff(i) - once.coeff(i)));
    }
  }
  out.add("superposition", "probability sum max", sums, 0.0, tol.probability);
  out.add("superposition", "invariant under evolve max", invariance, 0.0, tol.probability);
  out.add("evolution", "parseval max", parseval, 0.0, tol.probability);
  out.add("evolution", "phases vs exp(i tau H) max", phases, 0.0, tol.phase);
  out.add("evolution", "group law max", group_law, 0.0, tol.phase);

  for (const ConeIndex& c : cfg.cone_indices) {
    const std::size_t n = cone_n(c);
    std::size_t line_mismatch = 0;
    std::size_t link_mismatch = 0;
    double commutation = 0.0;
    for (std::size_t k = 0; k < 32; ++k) {
      const auto s = rng.state(N, N);
      const auto projected = project_invariant(s, n);
      const auto before = energy_probabilities(s, p);
      const auto after = energy_probabilities(projected, p);
      for (std::size_t i = 0; i <= N; ++i) {
        const bool kept = after[i].probability > 0.0;
        const bool should = before[i].probability > 0.0 && i % n == 0;
        if (kept != should) ++line_mismatch;
      }
      for (const HolomorphicState* t : {&s, &projected}) {
        bool on_multiples = true;
        for (const auto& l : energy_probabilities(*t, p)) {
          if (l.probability > 0.0 && static_cast<std::size_t>(l.index) % n != 0) on_multiples = false;
        }
        if (on_multiples != is_invariant(*t, n, 0.0)) ++link_mismatch;
      }
      const double tau = rng.uniform(-2.0, 2.0);
      const auto a = project_invariant(evolve(s, tau, p), n);
      const auto b = evolve(projected, tau, p);
      for (std::size_t i = 0; i <= N; ++i) {
        commutation = std::max(commutation, std::abs(a.coeff(i) - b.coeff(i)));
      }
    }
    out.add("invariance", "projector line set mismatches n=" + fmt(n),
            static_cast<double>(line_mismatch), 0.0, tol.exact);
    out.add("invariance", "spectrum link mismatches n=" + fmt(n),
            static_cast<double>(link_mismatch), 0.0, tol.exact);
    out.add("invariance", "projection commutes with evolve n=" + fmt(n), commutation, 0.0,
            tol.exact);

    // Sampled criterion on a grid whose angular count n divides.
    const std::size_t degree = std::min<std::size_t>(N, 16);
    const std::size_t quarter_lcm = std::lcm<std::size_t>(4, n);
    std::size_t angular = quarter_lcm;
    while (angular < 2 * degree + 2) angular += quarter_lcm;
    const PolarGrid grid(QuadratureSpec{degree + 1, angular});
    std::size_t grid_mismatch = 0;
    for (std::size_t k = 0; k < 8; ++k) {
      const auto s = rng.state(degree, N);
      for (const HolomorphicState& t : {s, project_invariant(s, n)}) {
        const auto f = GridFunction::sample(grid, [&](ExtComplex z) { return t.evaluate(z); });
        if (is_invariant(f, n) != is_invariant(t, n, kGridInvarianceTolerance)) ++grid_mismatch;
      }
    }
    out.add("invariance", "grid vs coefficient mismatches n=" + fmt(n),
            static_cast<double>(grid_mismatch), 0.0, tol.exact);
  }
  return out.take();
}

// ---------------------------------------------------------------- fractional

const std::vector<Complex>& fractional_probes() {
  static const std::vector<Complex> probes{std::polar(1.0, 0.5), std::polar(0.7, 2.0),
                                           std::polar(1.3, 4.0), std::polar(0.9, 5.7)};
  return probes;
}

double fractional_eigenvalue(double gamma, const OscillatorParams& p) {
  const auto psi = [gamma](Complex w) { return fractional_power(w, gamma); };
  const Complex z0 = fractional_probes().front();
  return (apply_hamiltonian_numeric(psi, z0, p, 1e-5) / psi(z0)).real();
}

std::vector<ReportRow> fractional(const ExperimentConfig& cfg, Sampler&) {
  Rows out("fractional");
  const Tolerances& tol = cfg.tolerances;
  const OscillatorParams& p = cfg.oscillator;
  const double hw = p.hbar() * p.omega();
  const auto& probes = fractional_probes();

  for (double g : cfg.gammas) {
    const std::string tag = "gamma=" + fmt(g);
    const ConeSpace cone(ConeIndex::from_real(g));
    out.add("fractional-eigen", "eigenvalue " + tag, fractional_eigenvalue(g, p), hw * (g + 0.5),
            tol.fractional_residual * hw);
    out.add("fractional-eigen", "residual h=1e-5 " + tag,
            verify_fractional_eigenstate(g, cone, probes, 1e-5, p), 0.0,
            tol.fractional_residual * hw);
    // For integer gamma <= 2 the central difference is exact and the order
    // is undefined.
    if (!(is_near_integer(g) && g < 2.5)) {
      const double r1 = verify_fractional_eigenstate(g, cone, probes, 1e-2, p);
      const double r2 = verify_fractional_eigenstate(g, cone, probes, 5e-3, p);
      const double r3 = verify_fractional_eigenstate(g, cone, probes, 2.5e-3, p);
      out.add("fractional-eigen", "order h=1e-2:5e-3 " + tag, std::log2(r1 / r2), 2.0,
              tol.fractional_order);
      out.add("fractional-eigen", "order h=5e-3:2.5e-3 " + tag, std::log2(r2 / r3), 2.0,
              tol.fractional_order);
    }

    double witness = 0.0;
    for (double rho : {0.5, 1.0, 2.0}) {
      const double closed = std::pow(rho, g) * std::abs(std::polar(1.0, kTwoPi * g) - 1.0);
      if (rho == 1.0) witness = closed;
      out.add("branch-jump", tag + " rho=" + fmt(rho), branch_discontinuity(g, rho, cone), closed,
              tol.discontinuity * std::max(1.0, closed));
    }
    // Membership is expected exactly when the closed-form jump vanishes.
    const MembershipReport m = hilbert_membership(g);
    out.add("membership", tag, m.member ? 1.0 : 0.0, witness <= tol.discontinuity ? 1.0 : 0.0,
            tol.exact);
    out.add("membership", "witness " + tag, m.discontinuity, witness,
            tol.discontinuity * std::max(1.0, witness));
  }
  return out.take();
}

// ---------------------------------------------------------------- table

std::vector<ReportRow> correspondence_table(const ExperimentConfig& cfg, Sampler&) {
  Rows out("correspondence-table");
  const Tolerances& tol = cfg.tolerances;
  const OscillatorParams& p = cfg.oscillator;
  const double w = p.omega();
  const double hw = p.hbar() * w;

  for (const ConeIndex& c : cfg.cone_indices) {
    const std::size_t n = cone_n(c);
    const double nn = static_cast<double>(n);
    const std::string tag = "n=" + fmt(n);
    const InvariantPeriod period = invariant_period(p, n);
    const double classical = cone_hamiltonian(std::polar(1.0, 0.3), w, p.hbar(), n);
    out.add("cone-energy", "H_n at |psi|=1 " + tag, classical, hw * nn, tol.exact * hw * nn);
    out.add("cone-energy", "Omega_n from vector field " + tag,
            cone_vector_field(Complex(1.0, 0.0), w, n).imag(), period.omega, tol.exact * period.omega);
    out.add("correspondence", "E_n " + tag, period.energy, hw * nn, tol.exact * hw * nn);
    const double quantum = eigenvalue(n, p);
    out.add("correspondence", "E~_n " + tag, quantum, hw * (nn + 0.5), tol.exact * quantum);
    out.add("correspondence", "E~_n - E_n " + tag, quantum - classical, 0.5 * hw,
            tol.exact * quantum);
  }
  for (double g : cfg.gammas) {
    const std::string tag = "gamma=" + fmt(g);
    out.add("correspondence", "E~_gamma " + tag, fractional_eigenvalue(g, p), hw * (g + 0.5),
            tol.fractional_residual * hw);
    const bool integral = is_near_integer(g);
    out.add("membership", (integral ? "inside-H " : "outside-H ") + tag,
            hilbert_membership(g).member ? 1.0 : 0.0, integral ? 1.0 : 0.0, tol.exact);
  }
  return out.take();
}

using Runner = std::function<std::vector<ReportRow>(const ExperimentConfig&, Sampler&)>;

const std::map<std::string, Runner, std::less<>>& runners() {
  static const std::map<std::string, Runner, std::less<>> table{
      {"classical-flow", classical_flow}, {"zn-periods", zn_periods},
      {"cone-geometry", cone_geometry},   {"bargmann-norms", bargmann_norms},
      {"spectrum", spectrum},             {"evolution", evolution},
      {"fractional", fractional},         {"correspondence-table", correspondence_table}};
  return table;
}

}  // namespace

const std::vector<Relation>& relations() {
  static const std::vector<Relation> list{
      {"coordinate", "z = (x - i p/(m omega)) / r0, r0^2 = 2 hbar/(m omega)"},
      {"hamiltonian", "H = hbar omega |z|^2"},
      {"vector-field", "V = (i/hbar) dH/dzbar = i omega z"},
      {"flow", "z(tau) = e^{i omega tau} z"},
      {"zn-action", "z -> zeta^l z, zeta = e^{2 pi i/n}"},
      {"zn-period", "tau_n = 2 pi/(omega n)"},
      {"covering", "psi_n = z^n"},
      {"cone-flow", "psi_n(tau) = e^{i omega n tau} psi_n"},
      {"cone-metric", "ds^2 = (1/n^2) rho_n^{2(1-n)/n} |d psi_n|^2"},
      {"curvature", "K = 0 off the apex, deficit 2 pi (n-1)/n"},
      {"cone-energy", "H_n = hbar omega n |psi_n|^2, Omega_n = omega n"},
      {"bargmann-norm", "||z^n||^2 = n! under e^{-|z|^2} dv/pi"},
      {"gram", "<z^j, z^k> = j! delta_jk"},
      {"bargmann-inner", "<a, b> = sum conj(a_k) b_k"},
      {"spectrum", "H z^n = hbar omega (n + 1/2) z^n"},
      {"evolution", "c_n -> e^{i omega (n + 1/2) tau} c_n"},
      {"superposition", "p_n = |c_n|^2 / sum |c_k|^2"},
      {"invariance", "psi(zeta z) = psi(z) iff c_k = 0 for n not dividing k"},
      {"fractional-eigen", "H z^gamma = hbar omega (gamma + 1/2) z^gamma"},
      {"fractional-cone", "deficit 2 pi (gamma-1)/gamma"},
      {"branch-jump", "|jump of z^gamma| = rho^gamma |e^{2 pi i gamma} - 1|"},
      {"membership", "z^gamma in the Hilbert space iff gamma integer"},
      {"correspondence", "E_n = hbar omega n <-> E~_n = hbar omega (n + 1/2)"},
  };
  return list;
}

const std::vector<ExperimentInfo>& experiments() {
  static const std::vector<ExperimentInfo> list{
      {"classical-flow", "phase-plane coordinate, Hamiltonian, vector field and flow",
       {"coordinate", "hamiltonian", "vector-field", "flow"}},
      {"zn-periods", "return time of the cone flow for each n", {"zn-period"}},
      {"cone-geometry", "covering map, conformal metric, flatness and angle deficits",
       {"covering", "zn-action", "cone-flow", "cone-metric", "curvature", "fractional-cone"}},
      {"bargmann-norms", "Gaussian inner product by quadrature",
       {"bargmann-norm", "gram", "bargmann-inner"}},
      {"spectrum", "eigenvalues exactly and by numerical differentiation", {"spectrum"}},
      {"evolution", "unitary evolution, probabilities and Z_n projection",
       {"evolution", "superposition", "invariance"}},
      {"fractional", "z^gamma eigenstates, branch jump and Hilbert membership",
       {"fractional-eigen", "branch-jump", "membership"}},
      {"correspondence-table", "classical cone energies against quantum levels",
       {"cone-energy", "correspondence", "membership"}},
  };
  return list;
}

const ExperimentInfo& find_experiment(std::string_view name) {
  for (const ExperimentInfo& e : experiments()) {
    if (e.name == name) return e;
  }
  throw std::invalid_argument("unknown experiment '" + std::string(name) + "'");
}

std::uint64_t experiment_seed(std::uint64_t base, std::string_view name) {
  std::uint64_t h = 1469598103934665603ULL;
  for (const char ch : name) {
    h ^= static_cast<unsigned char>(ch);
    h *= 1099511628211ULL;
  }
  return base ^ h;
}

std::vector<ReportRow> run_experiment(std::string_view name, const ExperimentConfig& config) {
  const ExperimentInfo& info = find_experiment(name);
  config.validate();
  Sampler rng(experiment_seed(config.seed, info.name));
  return runners().find(info.name)->second(config, rng);
}

std::vector<CoverageLine> coverage(const std::vector<ReportRow>& rows) {
  std::vector<CoverageLine> out;
  for (const Relation& r : relations()) {
    CoverageLine line{r.id, r.formula, {}, 0};
    for (const ExperimentInfo& e : experiments()) {
      std::size_t count = 0;
      for (const ReportRow& row : rows) {
        if (row.experiment == e.name && row.case_id.starts_with(r.id + "/")) ++count;
      }
      if (count > 0) {
        if (!line.experiments.empty()) line.experiments += ' ';
        line.experiments += e.name;
        line.rows += count;
      }
    }
    out.push_back(std::move(line));
  }
  return out;
}

}  // namespace oscillator::harness
