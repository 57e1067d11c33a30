#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "oscillator/phase_space.hpp"
#include "oscillator/quadrature.hpp"

namespace oscillator {

inline constexpr std::size_t kDefaultTruncation = 32;

/// How coefficients map to functions of z.
enum class Normalization {
  fock,      // psi(z) = sum c_k z^k / sqrt(k!), so ||psi||^2 = sum |c_k|^2
  monomial,  // psi(z) = sum c_k z^k, so ||z^k||^2 = k!
};

/// Truncated power series in z. Coefficients above the truncation degree do
/// not exist: constructing one throws instead of silently dropping terms.
class HolomorphicState {
 public:
  explicit HolomorphicState(std::size_t truncation = kDefaultTruncation);
  HolomorphicState(std::vector<Complex> coeffs, std::size_t truncation = kDefaultTruncation);

  static HolomorphicState basis(std::size_t n, std::size_t truncation = kDefaultTruncation);
  static HolomorphicState vacuum(std::size_t truncation = kDefaultTruncation) {
    return basis(0, truncation);
  }

  std::size_t truncation() const { return coeffs_.size() - 1; }
  std::span<const Complex> coeffs() const { return coeffs_; }
  Complex coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Complex{}; }

  /// Highest index with a nonzero coefficient (0 for the zero state).
  std::size_t degree() const;
  bool is_zero() const;
  double norm_squared() const;
  HolomorphicState normalized() const;

  Complex evaluate(Complex z, Normalization convention = Normalization::fock) const;
  ExtComplex evaluate(ExtComplex z, Normalization convention = Normalization::fock) const;

  HolomorphicState with_truncation(std::size_t truncation) const;

  HolomorphicState& operator+=(const HolomorphicState& other);
  HolomorphicState& operator*=(Complex scale);
  friend HolomorphicState operator+(HolomorphicState a, const HolomorphicState& b) {
    return a += b;
  }
  friend HolomorphicState operator*(Complex s, HolomorphicState a) { return a *= s; }

  bool operator==(const HolomorphicState&) const = default;

 private:
  std::vector<Complex> coeffs_;
};

/// 1/sqrt(k!) in extended precision.
ExtReal inverse_sqrt_factorial(std::size_t k);

}  // namespace oscillator
