#include "oscillator/quadrature.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

namespace oscillator {

namespace {

constexpr std::size_t kMaxNewtonIterations = 200;

// L_n(x) and L_{n-1}(x) by the three-term recurrence.
std::pair<ExtReal, ExtReal> laguerre_pair(std::size_t n, ExtReal x) {
  ExtReal p1 = 1.0L;
  ExtReal p2 = 0.0L;
  for (std::size_t j = 1; j <= n; ++j) {
    const ExtReal p3 = p2;
    p2 = p1;
    const auto jj = static_cast<ExtReal>(j);
    p1 = ((2.0L * jj - 1.0L - x) * p2 - (jj - 1.0L) * p3) / jj;
  }
  return {p1, p2};
}

}  // namespace

GaussRule gauss_laguerre(std::size_t n) {
  if (n == 0) throw std::invalid_argument("gauss_laguerre: n must be >= 1");
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const auto nn = static_cast<ExtReal>(n);

  ExtReal z = 0.0L;
  for (std::size_t i = 0; i < n; ++i) {
    // Initial guesses follow the usual asymptotic spacing of Laguerre zeros.
    if (i == 0) {
      z = 3.0L / (1.0L + 2.4L * nn);
    } else if (i == 1) {
      z += 15.0L / (1.0L + 2.5L * nn);
    } else {
      const auto ai = static_cast<ExtReal>(i - 1);
      z += ((1.0L + 2.55L * ai) / (1.9L * ai)) * (z - rule.nodes[i - 2]);
    }

    ExtReal derivative = 0.0L;
    bool converged = false;
    for (std::size_t it = 0; it < kMaxNewtonIterations; ++it) {
      const auto [ln, lnm1] = laguerre_pair(n, z);
      derivative = nn * (ln - lnm1) / z;
      const ExtReal previous = z;
      z = previous - ln / derivative;
      if (std::fabs(z - previous) <= 64.0L * std::numeric_limits<ExtReal>::epsilon() * z) {
        converged = true;
        break;
      }
    }
    if (!converged) {
      throw std::runtime_error("gauss_laguerre: Newton iteration did not converge for n = " +
                               std::to_string(n));
    }
    // One more step once inside the basin polishes the last few bits.
    {
      const auto [ln, lnm1] = laguerre_pair(n, z);
      z -= ln / (nn * (ln - lnm1) / z);
    }
    const auto [ln, lnm1] = laguerre_pair(n, z);
    derivative = nn * (ln - lnm1) / z;
    rule.nodes[i] = z;
    rule.weights[i] = 1.0L / (z * derivative * derivative);
  }

  for (std::size_t i = 1; i < n; ++i) {
    if (!(rule.nodes[i] > rule.nodes[i - 1])) {
      throw std::runtime_error("gauss_laguerre: nodes not separated for n = " + std::to_string(n));
    }
  }
  return rule;
}

QuadratureSpec QuadratureSpec::for_degree(std::size_t max_degree) {
  std::size_t angular = 2 * max_degree + 2;
  angular = (angular + 3) / 4 * 4;
  return {max_degree + 1, angular};
}

void QuadratureSpec::require_resolves(std::size_t max_degree) const {
  if (angular_nodes == 0 || angular_nodes % 4 != 0) {
    throw std::invalid_argument("angular_nodes must be a positive multiple of 4");
  }
  if (radial_nodes < max_degree + 1 || angular_nodes < 2 * max_degree + 2) {
    throw std::invalid_argument("quadrature underresolved");
  }
}

PolarGrid::PolarGrid(const QuadratureSpec& spec) : spec_(spec) {
  if (spec.radial_nodes == 0) throw std::invalid_argument("radial_nodes must be >= 1");
  if (spec.angular_nodes == 0 || spec.angular_nodes % 4 != 0) {
    throw std::invalid_argument("angular_nodes must be a positive multiple of 4");
  }
  const GaussRule rule = gauss_laguerre(spec.radial_nodes);
  radii_.reserve(rule.nodes.size());
  for (ExtReal u : rule.nodes) radii_.push_back(std::sqrt(u));
  weights_ = rule.weights;

  const std::size_t m = spec.angular_nodes;
  const std::size_t q = m / 4;
  unit_.resize(m);
  const ExtReal two_pi = 2.0L * std::numbers::pi_v<ExtReal>;
  for (std::size_t j = 0; j < q; ++j) {
    if (2 * j < q) {
      const ExtReal theta = two_pi * static_cast<ExtReal>(j) / static_cast<ExtReal>(m);
      unit_[j] = j == 0 ? ExtComplex(1.0L, 0.0L) : ExtComplex(std::cos(theta), std::sin(theta));
    } else if (2 * j == q) {
      const ExtReal s = std::sqrt(0.5L);
      unit_[j] = ExtComplex(s, s);
    } else {
      // Mirror across the diagonal: i * conj(u).
      const ExtComplex mirror = unit_[q - j];
      unit_[j] = ExtComplex(mirror.imag(), mirror.real());
    }
  }
  for (std::size_t k = 1; k < 4; ++k) {
    for (std::size_t j = 0; j < q; ++j) {
      const ExtComplex prev = unit_[(k - 1) * q + j];
      unit_[k * q + j] = ExtComplex(-prev.imag(), prev.real());
    }
  }
}

ExtComplex PolarGrid::point(std::size_t ring, std::size_t j) const {
  const ExtReal r = radii_[ring];
  const ExtComplex u = unit_[j];
  return {r * u.real(), r * u.imag()};
}

GridFunction::GridFunction(PolarGrid grid, std::vector<ExtComplex> samples)
    : grid_(std::move(grid)), samples_(std::move(samples)) {
  if (samples_.size() != grid_.size()) {
    throw std::invalid_argument("GridFunction: sample count does not match grid");
  }
}

GridFunction GridFunction::sample(const PolarGrid& grid,
                                  const std::function<ExtComplex(ExtComplex)>& f) {
  std::vector<ExtComplex> values;
  values.reserve(grid.size());
  for (std::size_t i = 0; i < grid.radial_count(); ++i) {
    for (std::size_t j = 0; j < grid.angular_count(); ++j) values.push_back(f(grid.point(i, j)));
  }
  return GridFunction(grid, std::move(values));
}

ExtComplex integrate_product(const GridFunction& a, const GridFunction& b) {
  if (!(a.grid().spec() == b.grid().spec())) {
    throw std::invalid_argument("integrate_product: grids differ");
  }
  const PolarGrid& grid = a.grid();
  const std::size_t m = grid.angular_count();
  const std::size_t q = m / 4;

  ExtComplex total(0.0L, 0.0L);
  for (std::size_t i = 0; i < grid.radial_count(); ++i) {
    const auto term = [&](std::size_t j) { return std::conj(a.at(i, j)) * b.at(i, j); };
    const auto orbit = [&](std::size_t j) {
      return (term(j) + term(j + 2 * q)) + (term(j + q) + term(j + 3 * q));
    };
    ExtComplex ring = orbit(0);
    std::size_t j = 1;
    for (; 2 * j < q; ++j) ring += orbit(j) + orbit(q - j);
    if (2 * j == q) ring += orbit(j);
    total += grid.ring_weight(i) * ring;
  }
  return total / static_cast<ExtReal>(m);
}

}  // namespace oscillator
