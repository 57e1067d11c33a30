// Cones C/Z_n and fractional cones C_gamma as images of the plane under the
// covering psi = z^n (resp. the branch-resolved z^gamma).
//
// Conventions:
//  * the fundamental sector is arg z in [cut, cut + 2 pi / nu), half-open;
//  * cone coordinates are (rho_nu, phi_nu) = (rho^nu, nu phi);
//  * for fractional gamma, log z takes arg in [cut, cut + 2 pi) plus
//    2 pi * sheet. A point on the cut gets the value from the cut+ side.
#pragma once

#include <cstddef>
#include <vector>

#include "oscillator/cyclic_symmetry.hpp"
#include "oscillator/phase_space.hpp"

namespace oscillator {

class ConeSpace {
 public:
  explicit ConeSpace(ConeIndex index, double branch_cut_angle = 0.0);

  const ConeIndex& index() const { return index_; }
  double branch_cut() const { return cut_; }
  double cone_angle() const { return index_.cone_angle(); }

 private:
  ConeIndex index_;
  double cut_;
};

/// exp(gamma * log z) on the given sheet of the logarithm. 0 maps to 0.
Complex fractional_power(Complex z, double gamma, double branch_cut = 0.0, long long sheet = 0);

/// z^n for integer cones, fractional_power for fractional ones.
Complex covering_map(Complex z, const ConeSpace& cone, long long sheet = 0);

/// The sheet-th n-th root of psi. Sheet 0 has argument in
/// [cut, cut + 2 pi / n); sheet ell is sheet 0 times zeta^ell. Integer cones
/// only; psi = 0 returns 0 for every sheet.
Complex inverse_branch(Complex psi, const ConeSpace& cone, std::size_t sheet);

/// All n preimages of psi, ordered by sheet.
std::vector<Complex> preimages(Complex psi, const ConeSpace& cone);

/// Symmetric 2x2 metric tensor.
struct Metric2 {
  double g11;
  double g12;
  double g22;

  double determinant() const { return g11 * g22 - g12 * g12; }
  bool positive_definite() const { return g11 > 0.0 && determinant() > 0.0; }
  /// ds^2 for the displacement (d1, d2).
  double line_element(double d1, double d2) const {
    return g11 * d1 * d1 + 2.0 * g12 * d1 * d2 + g22 * d2 * d2;
  }
};

struct MetricSample {
  Complex at;                // cone coordinate psi = z^nu
  double conformal_factor;   // (1/nu^2) rho_nu^{2(1-nu)/nu}
  Metric2 cone_form;         // in (rho_nu, phi_nu)
  Metric2 direct_form;       // in (rho, phi_nu): d rho^2 + rho^2/nu^2 d phi_nu^2
};

/// Conformal factor of the flat metric restricted to the cone, as a function
/// of the cone radius rho_nu.
double conformal_factor(double cone_radius, const ConeIndex& index);

/// Metric of the plane restricted to the sector, in cone coordinates. z must
/// be nonzero with arg z in [0, 2 pi / nu) (any arg when nu < 1).
MetricSample restricted_metric(Complex z, const ConeIndex& index);

/// Same metric evaluated directly at cone radius rho_nu > 0.
MetricSample metric_at_cone_radius(double cone_radius, const ConeIndex& index);

/// The two sides of the conformal-flatness identity for a displacement
/// (d rho, d phi_nu) at plane radius rho, evaluated independently:
///   direct:    d rho^2 + (rho^2/nu^2) d phi_nu^2
///   conformal: (1/nu^2) rho_nu^{exponent} (d rho_nu^2 + rho_nu^2 d phi_nu^2)
/// with d rho_nu = nu rho^{nu-1} d rho and exponent = 2(1-nu)/nu.
double line_element_direct(double rho, double d_rho, double d_phi_nu, const ConeIndex& index);
double line_element_conformal(double rho, double d_rho, double d_phi_nu, const ConeIndex& index,
                              double exponent);
double conformal_exponent(const ConeIndex& index);

/// 2 pi (nu - 1) / nu. Negative (an angle surplus) for nu < 1.
double angle_deficit(const ConeIndex& index);

struct ConeCircle {
  double circumference;  // metric length of {rho_nu = const}
  double radius;         // metric distance from the apex
};

/// Measures the circle through plane radius rho with the restricted metric:
/// the circumference by a trapezoid over phi_nu of metric samples, the radius
/// by tanh-sinh integration of sqrt(g11) from the apex.
ConeCircle measure_circle(double rho, const ConeIndex& index, std::size_t angular_samples = 64);

/// 2 pi - circumference/radius from measure_circle.
double measured_deficit(double rho, const ConeIndex& index);

/// Gaussian curvature K = -Laplacian(log lambda) / (2 lambda) of the metric
/// lambda |d psi|^2 at psi != 0. Five-point Laplacians of steps h and h/2,
/// h = relative_step * |psi|, combined by Richardson extrapolation. A step
/// proportional to |psi| keeps rounding, amplified by 1/lambda, bounded at
/// every radius.
double curvature_estimate(Complex psi, const ConeIndex& index, double relative_step = 1e-2);

/// psi -> e^{i omega nu tau} psi.
Complex cone_flow(Complex psi0, double tau, double omega, const ConeIndex& index);

/// Smallest tau > 0 with cone_flow(psi0, tau) = psi0, found as the first
/// upward zero crossing of Im(cone_flow(1, tau)) on a scan of step
/// `scan_step`, refined by TOMS748.
double cone_flow_period(double omega, const ConeIndex& index, double scan_step);

/// H_n = hbar omega n |psi|^2. n = 0 (vacuum) gives 0.
double cone_hamiltonian(Complex psi, double omega, double hbar, std::size_t n);

/// i omega n psi.
Complex cone_vector_field(Complex psi, double omega, std::size_t n);

/// |psi_gamma(rho e^{i(cut + 2 pi)^-}) - psi_gamma(rho e^{i cut^+})| evaluated
/// from the two one-sided branch values.
double branch_discontinuity(double gamma, double rho, const ConeSpace& cone);

}  // namespace oscillator
