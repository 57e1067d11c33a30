#include "oscillator/cyclic_symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace oscillator {

namespace {

void require_order(std::size_t n) {
  if (n == 0) throw std::invalid_argument("cyclic group order must be >= 1");
}

}  // namespace

CyclicGroup::CyclicGroup(std::size_t order) : order_(order) { require_order(order); }

Complex CyclicGroup::element(long long ell) const {
  const auto n = static_cast<long long>(order_);
  long long r = ell % n;
  if (r < 0) r += n;
  if (r == 0) return {1.0, 0.0};
  return std::polar(1.0, kTwoPi * static_cast<double>(r) / static_cast<double>(n));
}

bool is_near_integer(double value, double tol) {
  return std::isfinite(value) && std::fabs(value - std::round(value)) <= tol;
}

ConeIndex ConeIndex::integer(std::size_t n) {
  // n = 0 (the vacuum point space) is the constant state, not a cone.
  if (n == 0) throw std::invalid_argument("ConeIndex: integer index must be >= 1");
  return ConeIndex(n);
}

ConeIndex ConeIndex::fractional(double gamma) {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw std::invalid_argument("ConeIndex: gamma must be positive and finite");
  }
  if (is_near_integer(gamma)) {
    throw std::invalid_argument("ConeIndex: fractional gamma is within tolerance of an integer");
  }
  return ConeIndex(gamma);
}

ConeIndex ConeIndex::from_real(double value) {
  if (is_near_integer(value) && std::round(value) >= 1.0) {
    return integer(static_cast<std::size_t>(std::llround(value)));
  }
  return fractional(value);
}

std::size_t ConeIndex::n() const {
  if (!is_integer()) throw std::logic_error("ConeIndex: fractional index has no integer n");
  return std::get<std::size_t>(value_);
}

double ConeIndex::value() const {
  if (is_integer()) return static_cast<double>(std::get<std::size_t>(value_));
  return std::get<double>(value_);
}

Complex act(const CyclicGroup& group, long long ell, Complex z) { return group.element(ell) * z; }

std::vector<Complex> orbit(const CyclicGroup& group, Complex z) {
  std::vector<Complex> out;
  out.reserve(group.order());
  for (std::size_t ell = 0; ell < group.order(); ++ell) {
    out.push_back(act(group, static_cast<long long>(ell), z));
  }
  return out;
}

std::size_t sector_of(double phi, std::size_t n) {
  require_order(n);
  const double a = normalize_angle(phi);
  auto ell = static_cast<std::size_t>(std::floor(a * static_cast<double>(n) / kTwoPi));
  return std::min(ell, n - 1);
}

bool is_invariant(const HolomorphicState& state, std::size_t n, double tol) {
  require_order(n);
  if (!(tol >= 0.0)) throw std::invalid_argument("is_invariant: tol must be non-negative");
  const auto c = state.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k % n != 0 && std::abs(c[k]) > tol) return false;
  }
  return true;
}

bool is_invariant(const GridFunction& f, std::size_t n, double tol) {
  require_order(n);
  if (!(tol > 0.0)) throw std::invalid_argument("is_invariant: tol must be positive");
  const PolarGrid& grid = f.grid();
  const std::size_t m = grid.angular_count();
  if (m % n != 0) throw std::invalid_argument("grid not Z_n-compatible");
  const std::size_t shift = m / n;
  ExtReal worst = 0.0L;
  for (std::size_t i = 0; i < grid.radial_count(); ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      worst = std::max(worst, std::abs(f.at(i, (j + shift) % m) - f.at(i, j)));
    }
  }
  return worst <= static_cast<ExtReal>(tol);
}

bool is_maximally_invariant(const HolomorphicState& state, std::size_t n, double tol) {
  if (!is_invariant(state, n, tol)) return false;
  // Invariance under any m > N reduces to "only c_0 survives", so m = N + 1
  // stands for all larger orders.
  const std::size_t top = std::max(state.truncation(), n) + 1;
  for (std::size_t m = n + 1; m <= top; ++m) {
    if (is_invariant(state, m, tol)) return false;
  }
  return true;
}

HolomorphicState project_invariant(const HolomorphicState& state, std::size_t n) {
  require_order(n);
  std::vector<Complex> c(state.coeffs().begin(), state.coeffs().end());
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k % n != 0) c[k] = Complex{};
  }
  return HolomorphicState(std::move(c), state.truncation());
}

InvariantPeriod invariant_period(const OscillatorParams& params, std::size_t n) {
  require_order(n);
  const double nn = static_cast<double>(n);
  const double omega_n = params.omega() * nn;
  return {kTwoPi / omega_n, omega_n, params.hbar() * params.omega() * nn, params.hbar()};
}

}  // namespace oscillator
