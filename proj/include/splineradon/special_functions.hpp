// Modified Bessel functions of the second kind and the closed-form kernels
// built from them: the fundamental solution of (laplacian + eps)^k, the
// lattice cardinal spectrum, and the tensor sinc.
#pragma once

#include "splineradon/common.hpp"

namespace splineradon {

// Parameters of the spline family: kernel order k, shift eps of the operator
// D = laplacian + eps, ambient dimension, and the knot-density gate constant.
struct SplineParams {
  int k = 2;
  double eps = 1.0;
  int dim = 1;
  double c_bound = 3.0;

  // Throws config_error / unsupported_order_error on invalid combinations:
  // requires k > dim/2, eps > 0, dim in {1, 2}, c_bound > 0.
  void validate() const;

  // Bessel order k - dim/2 of the kernel.
  double bessel_order() const { return k - 0.5 * dim; }
};

// K_order(t) for nonnegative integer or half-integer order. Relative error
// below 1e-10 for t in [1e-6, 100]; underflows to 0 for large t.
// Throws std::domain_error for t <= 0 or invalid order.
double bessel_k(double order, double t);

// exp(t) * K_order(t); avoids underflow in downstream ratios.
double bessel_k_scaled(double order, double t);

// Fundamental solution E^k_eps(x) of (laplacian + eps)^k, i.e. the inverse
// Fourier transform of (|xi|^2 + eps)^{-k} in the convention
// (2pi)^{-d} Int (|xi|^2+eps)^{-k} e^{i xi.x} dxi. Radial; for |x| < 1e-12
// returns the finite limit (requires k > dim/2).
double fundamental_solution(const SplineParams& params, Vec2 x);

// The finite value E^k_eps(0) = 2^{1-k} Gamma(k-d/2) / ((4pi)^{d/2} Gamma(k) eps^{k-d/2}).
double fundamental_solution_at_zero(const SplineParams& params);

// Spectrum of the cardinal spline on the integer lattice:
//   (2pi)^{-d/2} * (|xi|^{2k} * sum_{|j|_inf <= truncation_radius} |xi - 2pi j|^{-2k})^{-1}.
// The tail of the truncated sum is below 1e-12 of the value for
// truncation_radius >= 8, k >= 2, xi in [-pi, pi]^d. xi = 0 returns the limit
// (2pi)^{-d/2}; xi on the nonzero lattice 2pi Z^d returns 0.
double lattice_cardinal_spectrum(int k, int dim, Vec2 xi, int truncation_radius = 8);

// prod_i sin(pi x_i)/(pi x_i) over the first `dim` coordinates.
double sinc_tensor(int dim, Vec2 x);

}  // namespace splineradon
