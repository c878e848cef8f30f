#include "splineradon/special_functions.hpp"

#include <cmath>
#include <cstddef>
#include <sstream>

namespace splineradon {
namespace {

// K0/K1 minimax rational approximations on (0,1] and (1,inf), coefficients
// from Russon and Blair, Chalk River Report AECL-3461, 1969 (as used by
// Boost.Math; relative error well below 1e-15 in double precision).
// Higher integer orders follow from the upward recurrence
// K_{v+1}(t) = K_{v-1}(t) + (2v/t) K_v(t), which is stable for K.

template <std::size_t N>
double eval_poly(const double (&c)[N], double y) {
  double r = c[N - 1];
  for (std::size_t i = N - 1; i-- > 0;) r = r * y + c[i];
  return r;
}

// exp(t) * K_0(t)
double bessel_k0_scaled(double t) {
  static const double P1[] = {2.4708152720399552679e+03, 5.9169059852270512312e+03,
                              4.6850901201934832188e+02, 1.1999463724910714109e+01,
                              1.3166052564989571850e-01, 5.8599221412826100000e-04};
  static const double Q1[] = {2.1312714303849120380e+04, -2.4994418972832303646e+02, 1.0};
  static const double P2[] = {-1.6128136304458193998e+06, -3.7333769444840079748e+05,
                              -1.7984434409411765813e+04, -2.9501657892958843865e+02,
                              -1.6414452837299064100e+00};
  static const double Q2[] = {-1.6128136304458193998e+06, 2.9865713163054025489e+04,
                              -2.5064972445877992730e+02, 1.0};
  static const double P3[] = {1.1600249425076035558e+02, 2.3444738764199315021e+03,
                              1.8321525870183537725e+04, 7.1557062783764037541e+04,
                              1.5097646353289914539e+05, 1.7398867902565686251e+05,
                              1.0577068948034021957e+05, 3.1075408980684392399e+04,
                              3.6832589957340267940e+03, 1.1394980557384778174e+02};
  static const double Q3[] = {9.2556599177304839811e+01, 1.8821890840982713696e+03,
                              1.4847228371802360957e+04, 5.8824616785857027752e+04,
                              1.2689839587977598727e+05, 1.5144644673520157801e+05,
                              9.7418829762268075784e+04, 3.1474655750295278825e+04,
                              4.4329628889746408858e+03, 2.0013443064949242491e+02,
                              1.0};
  if (t <= 1.0) {
    const double y = t * t;
    const double r1 = eval_poly(P1, y) / eval_poly(Q1, y);
    const double r2 = eval_poly(P2, y) / eval_poly(Q2, y);
    return std::exp(t) * (r1 - std::log(t) * r2);
  }
  const double y = 1.0 / t;
  return eval_poly(P3, y) / eval_poly(Q3, y) / std::sqrt(t);
}

// exp(t) * K_1(t)
double bessel_k1_scaled(double t) {
  static const double P1[] = {-2.2149374878243304548e+06, 7.1938920065420586101e+05,
                              1.7733324035147015630e+05,  7.1885382604084798576e+03,
                              9.9991373567429309922e+01,  4.8127070456878442310e-01};
  static const double Q1[] = {-2.2149374878243304548e+06, 3.7264298672067697862e+04,
                              -2.8143915754538725829e+02, 1.0};
  static const double P2[] = {0.0,
                              -1.3531161492785421328e+06,
                              -1.4758069205414222471e+05,
                              -4.5051623763436087023e+03,
                              -5.3103913335180275253e+01,
                              -2.2795590826955002390e-01};
  static const double Q2[] = {-2.7062322985570842656e+06, 4.3117653211351080007e+04,
                              -3.0507151578787595807e+02, 1.0};
  static const double P3[] = {2.2196792496874548962e+00, 4.4137176114230414036e+01,
                              3.4122953486801312910e+02, 1.3319486433183221990e+03,
                              2.8590657697910288226e+03, 3.4540675585544584407e+03,
                              2.3123742209168871550e+03, 8.1094256146537402173e+02,
                              1.3182609918569941308e+02, 7.5584584631176030810e+00,
                              6.4257745859173138767e-02};
  static const double Q3[] = {1.7710478032601086579e+00, 3.4552228452758912848e+01,
                              2.5951223655579051357e+02, 9.6929165726802648634e+02,
                              1.9448440788918006154e+03, 2.1181000487171943810e+03,
                              1.2082692316002348638e+03, 3.3031020088765390854e+02,
                              3.6001069306861518855e+01, 1.0};
  if (t <= 1.0) {
    const double y = t * t;
    const double r1 = eval_poly(P1, y) / eval_poly(Q1, y);
    const double r2 = eval_poly(P2, y) / eval_poly(Q2, y);
    return std::exp(t) * (r1 + std::log(t) * r2) / t;
  }
  const double y = 1.0 / t;
  return eval_poly(P3, y) / eval_poly(Q3, y) / std::sqrt(t);
}

// Upward recurrence from two consecutive scaled orders.
double recur_up(double s_lo, double s_hi, double first_order, double target, double t) {
  double order = first_order;
  while (order < target - 0.25) {
    const double next = s_lo + (2.0 * order / t) * s_hi;
    s_lo = s_hi;
    s_hi = next;
    order += 1.0;
  }
  return s_hi;
}

}  // namespace

void SplineParams::validate() const {
  if (dim != 1 && dim != 2) {
    throw config_error("SplineParams: dim must be 1 or 2, got " + std::to_string(dim));
  }
  if (k <= 0 || 2 * k <= dim) {
    throw unsupported_order_error("SplineParams: requires k > dim/2, got k=" +
                                  std::to_string(k) + ", dim=" + std::to_string(dim));
  }
  if (!(eps > 0.0)) {
    throw config_error("SplineParams: eps must be positive (the eps = 0 case is excluded)");
  }
  if (!(c_bound > 0.0)) {
    throw config_error("SplineParams: c_bound must be positive");
  }
}

double bessel_k_scaled(double order, double t) {
  if (!(t > 0.0)) {
    std::ostringstream msg;
    msg << "bessel_k: t must be positive, got " << t;
    throw std::domain_error(msg.str());
  }
  if (order < 0.0) {
    throw std::domain_error("bessel_k: order must be nonnegative (use K_{-v} = K_v)");
  }
  const double doubled = 2.0 * order;
  const double rounded = std::round(doubled);
  if (std::abs(doubled - rounded) > 1e-9) {
    throw std::domain_error("bessel_k: order must be an integer or half-integer");
  }
  const long n2 = static_cast<long>(rounded);
  if (n2 % 2 == 0) {
    const double k0 = bessel_k0_scaled(t);
    if (n2 == 0) return k0;
    const double k1 = bessel_k1_scaled(t);
    if (n2 == 2) return k1;
    return recur_up(k0, k1, 1.0, order, t);
  }
  const double k_half = std::sqrt(kPi / (2.0 * t));
  if (n2 == 1) return k_half;
  const double k_3half = k_half * (1.0 + 1.0 / t);
  if (n2 == 3) return k_3half;
  return recur_up(k_half, k_3half, 1.5, order, t);
}

double bessel_k(double order, double t) {
  const double scaled = bessel_k_scaled(order, t);
  // exp(-t) underflows to 0 for t > ~745, which is the desired limit.
  return scaled * std::exp(-t);
}

double fundamental_solution_at_zero(const SplineParams& params) {
  params.validate();
  const double nu = params.bessel_order();
  const double num = std::exp2(1.0 - params.k) * std::tgamma(nu);
  const double den = std::pow(4.0 * kPi, 0.5 * params.dim) * std::tgamma(params.k) *
                     std::pow(params.eps, nu);
  return num / den;
}

double fundamental_solution(const SplineParams& params, Vec2 x) {
  params.validate();
  const double r = x.norm();
  if (r < 1e-12) return fundamental_solution_at_zero(params);
  const double nu = params.bessel_order();
  const double sqrt_eps = std::sqrt(params.eps);
  const double t = sqrt_eps * r;
  const double prefactor = std::exp2(1.0 - params.k) /
                           (std::pow(kTwoPi, 0.5 * params.dim) * std::tgamma(params.k));
  // Scaled form avoids underflow of K at large t before the power is applied.
  return prefactor * std::pow(r / sqrt_eps, nu) * bessel_k_scaled(nu, t) * std::exp(-t);
}

double lattice_cardinal_spectrum(int k, int dim, Vec2 xi, int truncation_radius) {
  if (truncation_radius < 1) {
    throw config_error("lattice_cardinal_spectrum: truncation_radius must be >= 1");
  }
  if (dim != 1 && dim != 2) {
    throw config_error("lattice_cardinal_spectrum: dim must be 1 or 2");
  }
  if (k < 1) {
    throw config_error("lattice_cardinal_spectrum: k must be a positive integer");
  }
  const double norm_const = std::pow(kTwoPi, -0.5 * dim);
  const double r2 = xi.norm_sq();
  // denom = |xi|^{2k} * sum_j |xi - 2pi j|^{-2k}, with the j = 0 term pulled
  // out as 1 so xi = 0 needs no special case.
  double denom = 1.0;
  const int R = truncation_radius;
  const int jy_max = dim == 2 ? R : 0;
  for (int jx = -R; jx <= R; ++jx) {
    for (int jy = -jy_max; jy <= jy_max; ++jy) {
      if (jx == 0 && jy == 0) continue;
      const Vec2 shift{xi.x - kTwoPi * jx, xi.y - kTwoPi * jy};
      const double s2 = shift.norm_sq();
      if (s2 < 1e-24) return 0.0;  // xi on the nonzero lattice
      denom += std::pow(r2 / s2, k);
    }
  }
  return norm_const / denom;
}

double sinc_tensor(int dim, Vec2 x) {
  if (dim != 1 && dim != 2) throw config_error("sinc_tensor: dim must be 1 or 2");
  double prod = 1.0;
  const double coords[2] = {x.x, x.y};
  for (int i = 0; i < dim; ++i) {
    const double z = kPi * coords[i];
    if (std::abs(z) < 1e-6) {
      prod *= 1.0 - z * z / 6.0;
    } else {
      prod *= std::sin(z) / z;
    }
  }
  return prod;
}

}  // namespace splineradon
