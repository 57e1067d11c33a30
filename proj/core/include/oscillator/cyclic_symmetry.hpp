// The cyclic group Z_n acting on C by rotations through 2 pi / n, and the
// invariance tests and projector that it induces on states.
#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "oscillator/holomorphic_state.hpp"
#include "oscillator/phase_space.hpp"
#include "oscillator/quadrature.hpp"

namespace oscillator {

/// Distance from an integer below which a real index counts as integral.
inline constexpr double kIntegerTolerance = 1e-12;

/// Default tolerance for the sampled (grid) invariance test.
inline constexpr double kGridInvarianceTolerance = 1e-10;

class CyclicGroup {
 public:
  explicit CyclicGroup(std::size_t order);

  std::size_t order() const { return order_; }
  /// Primitive root zeta = e^{2 pi i / n}.
  Complex generator() const { return element(1); }
  /// zeta^ell, with ell reduced mod n (negative ell allowed).
  Complex element(long long ell) const;

 private:
  std::size_t order_;
};

/// Either an integer cone index n >= 1 or a non-integral gamma > 0.
class ConeIndex {
 public:
  static ConeIndex integer(std::size_t n);
  static ConeIndex fractional(double gamma);
  /// Integer branch when value is within kIntegerTolerance of an integer >= 1.
  static ConeIndex from_real(double value);

  bool is_integer() const { return std::holds_alternative<std::size_t>(value_); }
  /// Throws std::logic_error on the fractional branch.
  std::size_t n() const;
  /// n or gamma as a real number.
  double value() const;
  /// 2 pi / n or 2 pi / gamma.
  double cone_angle() const { return kTwoPi / value(); }

  bool operator==(const ConeIndex&) const = default;

 private:
  explicit ConeIndex(std::variant<std::size_t, double> v) : value_(v) {}
  std::variant<std::size_t, double> value_;
};

bool is_near_integer(double value, double tol = kIntegerTolerance);

Complex act(const CyclicGroup& group, long long ell, Complex z);

/// {zeta^ell z : ell = 0..n-1}.
std::vector<Complex> orbit(const CyclicGroup& group, Complex z);

/// Index ell of the half-open sector [2 pi ell/n, 2 pi (ell+1)/n) holding phi.
std::size_t sector_of(double phi, std::size_t n);

/// Coefficient criterion: every c_k with k mod n != 0 has |c_k| <= tol.
bool is_invariant(const HolomorphicState& state, std::size_t n, double tol);

/// Sampled criterion: max |f(zeta z) - f(z)| over the grid <= tol. Throws
/// std::invalid_argument("grid not Z_n-compatible") unless the angular node
/// count is divisible by n.
bool is_invariant(const GridFunction& f, std::size_t n, double tol = kGridInvarianceTolerance);

/// Invariant under Z_n and under no Z_m with m > n.
bool is_maximally_invariant(const HolomorphicState& state, std::size_t n, double tol);

/// Zeroes every c_k with k mod n != 0.
HolomorphicState project_invariant(const HolomorphicState& state, std::size_t n);

struct InvariantPeriod {
  double tau;     // 2 pi / (omega n)
  double omega;   // omega n
  double energy;  // hbar omega n
  double hbar;
};

InvariantPeriod invariant_period(const OscillatorParams& params, std::size_t n);

}  // namespace oscillator
