#include "splineradon/spline_interp.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <sstream>

#include "splineradon/parallel.hpp"

namespace splineradon {
namespace {

// Residual rhs - M*x accumulated in extended precision. Iterative refinement
// against this residual pushes the cardinal-condition defect well below what
// a single backward-stable solve guarantees on ill-conditioned Gram matrices.
Eigen::VectorXd residual_extended(const Eigen::MatrixXd& M, const Eigen::VectorXd& x,
                                  const Eigen::VectorXd& rhs) {
  const Eigen::Index n = M.rows();
  Eigen::VectorXd r(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    long double acc = static_cast<long double>(rhs[i]);
    for (Eigen::Index j = 0; j < n; ++j) {
      acc -= static_cast<long double>(M(i, j)) * static_cast<long double>(x[j]);
    }
    r[i] = static_cast<double>(acc);
  }
  return r;
}

}  // namespace

Eigen::MatrixXd build_gram(const KnotSet& knots, std::span<const std::size_t> window,
                           const SplineParams& params) {
  params.validate();
  const Eigen::Index n = static_cast<Eigen::Index>(window.size());
  Eigen::MatrixXd M(n, n);
  const double diag = fundamental_solution_at_zero(params);
  for (Eigen::Index i = 0; i < n; ++i) {
    M(i, i) = diag;
    const Vec2 xi = knots.point(window[i]);
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double v = fundamental_solution(params, xi - knots.point(window[j]));
      M(i, j) = v;
      M(j, i) = v;
    }
  }
  return M;
}

GramSolveInfo solve_gram_system(const Eigen::MatrixXd& gram, const Eigen::VectorXd& rhs) {
  const Eigen::Index n = gram.rows();
  GramSolveInfo info;
  Eigen::LDLT<Eigen::MatrixXd> ldlt(gram);
  info.rcond = ldlt.rcond();
  if (ldlt.info() != Eigen::Success || !(info.rcond > 1e-12)) {
    const double mu = 1e-12 * gram.trace() / static_cast<double>(n);
    Eigen::MatrixXd reg = gram;
    reg.diagonal().array() += mu;
    ldlt.compute(reg);
    info.regularized = true;
    info.rcond = ldlt.rcond();
  }
  Eigen::VectorXd x = ldlt.solve(rhs);
  Eigen::VectorXd r = residual_extended(gram, x, rhs);
  double best = r.lpNorm<Eigen::Infinity>();
  for (int iter = 0; iter < 6 && best > 1e-13; ++iter) {
    const Eigen::VectorXd candidate = x + ldlt.solve(r);
    const Eigen::VectorXd r2 = residual_extended(gram, candidate, rhs);
    const double norm2 = r2.lpNorm<Eigen::Infinity>();
    if (!(norm2 < best)) break;  // stagnated (or diverging on a singular system)
    x = candidate;
    r = r2;
    best = norm2;
  }
  info.solution = std::move(x);
  info.residual_inf = best;
  return info;
}

LagrangianSpline solve_lagrangian(const KnotSet& knots, std::size_t nu,
                                  const SplineParams& params, double window_radius) {
  params.validate();
  if (nu >= knots.size()) throw config_error("solve_lagrangian: knot index out of range");
  if (!(window_radius > 0.0)) {
    throw config_error("solve_lagrangian: window_radius must be positive");
  }
  const Vec2 center = knots.point(nu);
  std::vector<std::size_t> window;
  Eigen::Index center_pos = -1;
  for (std::size_t i = 0; i < knots.size(); ++i) {
    if (distance(knots.point(i), center) <= window_radius) {
      if (i == nu) center_pos = static_cast<Eigen::Index>(window.size());
      window.push_back(i);
    }
  }
  const Eigen::MatrixXd M = build_gram(knots, window, params);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(M.rows());
  rhs[center_pos] = 1.0;
  GramSolveInfo solve = solve_gram_system(M, rhs);
  if (!(solve.residual_inf <= kCardinalTolerance)) {
    std::ostringstream msg;
    msg << "solve_lagrangian: window around knot " << nu
        << " is numerically singular beyond regularization (residual "
        << solve.residual_inf << ", condition ~" << 1.0 / std::max(solve.rcond, 1e-300)
        << ")";
    throw ill_conditioned_error(msg.str(), 1.0 / std::max(solve.rcond, 1e-300), nu);
  }
  LagrangianSpline spline;
  spline.center_index = nu;
  spline.window = std::move(window);
  spline.coeffs.assign(solve.solution.data(), solve.solution.data() + solve.solution.size());
  spline.params = params;
  spline.knots = &knots;
  spline.solve_residual = solve.residual_inf;
  return spline;
}

double LagrangianSpline::evaluate(Vec2 x) const {
  double acc = 0.0;
  for (std::size_t m = 0; m < window.size(); ++m) {
    acc += coeffs[m] * fundamental_solution(params, x - knots->point(window[m]));
  }
  return acc;
}

std::complex<double> LagrangianSpline::spectrum(Vec2 y) const {
  std::complex<double> acc{0.0, 0.0};
  for (std::size_t m = 0; m < window.size(); ++m) {
    const double phase = -knots->point(window[m]).dot(y);
    acc += coeffs[m] * std::complex<double>{std::cos(phase), std::sin(phase)};
  }
  const double shape = std::pow(y.norm_sq() + params.eps, -params.k);
  return std::pow(kTwoPi, -0.5 * params.dim) * shape * acc;
}

Interpolant interpolate(const KnotSet& knots, std::span<const double> values,
                        const SplineParams& params, double window_radius) {
  params.validate();
  if (values.size() != knots.size()) {
    throw config_error("interpolate: values must align with knots");
  }
  Interpolant out;
  out.knots = &knots;
  out.values.assign(values.begin(), values.end());
  out.params = params;
  out.window_radius = window_radius;
  out.splines.resize(knots.size());

  std::mutex error_mutex;
  std::exception_ptr first_error;
  parallel_for(knots.size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t nu = begin; nu < end; ++nu) {
      try {
        out.splines[nu] = solve_lagrangian(knots, nu, params, window_radius);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  });
  if (first_error) std::rethrow_exception(first_error);
  return out;
}

double Interpolant::evaluate(Vec2 x) const {
  // |L_nu(x)| <= a e^{-b |x - x_nu|} with b ~ sqrt(eps); beyond the window
  // radius plus ln(1e14)/sqrt(eps) the term is below 1e-14 and is dropped.
  const double cutoff = window_radius + 32.3 / std::sqrt(params.eps);
  const double cutoff_sq = cutoff * cutoff;
  double acc = 0.0;
  for (std::size_t nu = 0; nu < splines.size(); ++nu) {
    if (values[nu] == 0.0) continue;
    if ((x - knots->point(nu)).norm_sq() > cutoff_sq) continue;
    acc += values[nu] * splines[nu].evaluate(x);
  }
  return acc;
}

double default_window_radius(const SplineParams& params, double spacing) {
  return std::max(6.0 / std::sqrt(params.eps), 6.0 * spacing);
}

}  // namespace splineradon
