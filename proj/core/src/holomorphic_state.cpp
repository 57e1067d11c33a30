#include "oscillator/holomorphic_state.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace oscillator {

namespace {

constexpr std::size_t kFactorialTableSize = 256;

}  // namespace

ExtReal inverse_sqrt_factorial(std::size_t k) {
  static const std::vector<ExtReal> table = [] {
    std::vector<ExtReal> t(kFactorialTableSize);
    t[0] = 1.0L;
    for (std::size_t j = 1; j < t.size(); ++j) t[j] = t[j - 1] / std::sqrt(static_cast<ExtReal>(j));
    return t;
  }();
  if (k < table.size()) return table[k];
  ExtReal v = table.back();
  for (std::size_t j = table.size(); j <= k; ++j) v /= std::sqrt(static_cast<ExtReal>(j));
  return v;
}

HolomorphicState::HolomorphicState(std::size_t truncation) : coeffs_(truncation + 1) {}

HolomorphicState::HolomorphicState(std::vector<Complex> coeffs, std::size_t truncation)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() > truncation + 1) {
    throw std::invalid_argument("HolomorphicState: degree exceeds truncation");
  }
  for (const Complex& c : coeffs_) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw std::invalid_argument("HolomorphicState: non-finite coefficient");
    }
  }
  coeffs_.resize(truncation + 1);
}

HolomorphicState HolomorphicState::basis(std::size_t n, std::size_t truncation) {
  if (n > truncation) throw std::invalid_argument("HolomorphicState: degree exceeds truncation");
  HolomorphicState s(truncation);
  s.coeffs_[n] = 1.0;
  return s;
}

std::size_t HolomorphicState::degree() const {
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    if (coeffs_[k] != Complex{}) return k;
  }
  return 0;
}

bool HolomorphicState::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Complex c) { return c == Complex{}; });
}

double HolomorphicState::norm_squared() const {
  double s = 0.0;
  for (const Complex& c : coeffs_) s += std::norm(c);
  return s;
}

HolomorphicState HolomorphicState::normalized() const {
  const double n2 = norm_squared();
  if (!(n2 > 0.0)) throw std::invalid_argument("cannot normalize the zero state");
  HolomorphicState out = *this;
  out *= Complex(1.0 / std::sqrt(n2), 0.0);
  return out;
}

Complex HolomorphicState::evaluate(Complex z, Normalization convention) const {
  const ExtComplex v = evaluate(ExtComplex(z.real(), z.imag()), convention);
  return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

ExtComplex HolomorphicState::evaluate(ExtComplex z, Normalization convention) const {
  // Horner from the leading nonzero term. Zero coefficients add exact zeros,
  // so a single monomial evaluates as a plain product chain.
  const std::size_t top = degree();
  ExtComplex acc(0.0L, 0.0L);
  for (std::size_t k = top + 1; k-- > 0;) {
    const ExtReal scale = convention == Normalization::fock ? inverse_sqrt_factorial(k) : 1.0L;
    const ExtComplex a(static_cast<ExtReal>(coeffs_[k].real()) * scale,
                       static_cast<ExtReal>(coeffs_[k].imag()) * scale);
    acc = acc * z + a;
  }
  return acc;
}

HolomorphicState HolomorphicState::with_truncation(std::size_t truncation) const {
  if (degree() > truncation && !is_zero()) {
    throw std::invalid_argument("HolomorphicState: degree exceeds truncation");
  }
  std::vector<Complex> c(coeffs_.begin(),
                         coeffs_.begin() + static_cast<std::ptrdiff_t>(
                                               std::min(coeffs_.size(), truncation + 1)));
  return HolomorphicState(std::move(c), truncation);
}

HolomorphicState& HolomorphicState::operator+=(const HolomorphicState& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  return *this;
}

HolomorphicState& HolomorphicState::operator*=(Complex scale) {
  for (Complex& c : coeffs_) c *= scale;
  return *this;
}

}  // namespace oscillator
