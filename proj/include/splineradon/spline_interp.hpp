// Lagrangian splines: cardinal interpolants built from translates of the
// fundamental solution of (laplacian + eps)^k on a knot window, their
// closed-form Fourier transforms, and the assembled interpolant.
#pragma once

#include <Eigen/Dense>
#include <complex>
#include <span>
#include <vector>

#include "splineradon/knots.hpp"
#include "splineradon/special_functions.hpp"

namespace splineradon {

// Cardinal spline centered at one knot: value 1 there, 0 at the other knots
// of its window, written as sum_mu coeffs[mu] * E^k_eps(x - x_mu).
struct LagrangianSpline {
  std::size_t center_index = 0;
  std::vector<std::size_t> window;  // knot indices, includes center_index
  std::vector<double> coeffs;       // aligned with window
  SplineParams params;
  const KnotSet* knots = nullptr;
  double solve_residual = 0.0;      // max cardinal-condition defect after solve

  double evaluate(Vec2 x) const;

  // Fourier transform of the spline in the convention
  // f_hat(y) = (2pi)^{-d/2} Int f(x) e^{-i x.y} dx, which for this kernel is
  //   (2pi)^{-d/2} (|y|^2 + eps)^{-k} sum_mu coeffs[mu] e^{-i x_mu.y}.
  std::complex<double> spectrum(Vec2 y) const;
};

// Gram matrix M[i][j] = E^k_eps(x_{w_i} - x_{w_j}) over a knot window.
// Symmetric with the at-zero kernel value on the diagonal.
Eigen::MatrixXd build_gram(const KnotSet& knots, std::span<const std::size_t> window,
                           const SplineParams& params);

// Result of a regularization-gated Gram solve with compensated iterative
// refinement. residual_inf is measured against the unregularized matrix.
struct GramSolveInfo {
  Eigen::VectorXd solution;
  double residual_inf = 0.0;
  double rcond = 0.0;
  bool regularized = false;
};

GramSolveInfo solve_gram_system(const Eigen::MatrixXd& gram, const Eigen::VectorXd& rhs);

// Builds the cardinal spline of knot nu over the window of all knots within
// window_radius of it. Throws ill_conditioned_error when the cardinal
// conditions cannot be met to 1e-8.
LagrangianSpline solve_lagrangian(const KnotSet& knots, std::size_t nu,
                                  const SplineParams& params, double window_radius);

// s(x) = sum_nu values[nu] * L_nu(x), with terms dropped once the spline's
// exponential decay puts them below 1e-14.
struct Interpolant {
  const KnotSet* knots = nullptr;
  std::vector<LagrangianSpline> splines;  // one per knot, knot order
  std::vector<double> values;
  SplineParams params;
  double window_radius = 0.0;

  double evaluate(Vec2 x) const;
};

Interpolant interpolate(const KnotSet& knots, std::span<const double> values,
                        const SplineParams& params, double window_radius);

// max(6/sqrt(eps), 6*spacing): covers the kernel's exp(-sqrt(eps)|x|) decay.
double default_window_radius(const SplineParams& params, double spacing);

inline constexpr double kCardinalTolerance = 1e-8;

}  // namespace splineradon
