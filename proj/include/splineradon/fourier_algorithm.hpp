// The three-step Fourier reconstruction pipeline: per-projection DFTs onto
// the polar frequency grid, spline gridding from polar to Cartesian
// frequencies, and the inverse DFT back to the image. Also the 1D
// irregular-offset resampling of a projection's Fourier transform.
//
// Normalization chain (fixed here, used consistently by all steps):
//  - step 1 produces g_hat_{jr} = (2pi)^{-1/2} h sum_{l=-q}^{q-1} e^{-i pi l r / q} g_l,
//    a Riemann-sum approximation of the 1D transform of the projection at
//    tau = pi r in the symmetric convention.
//  - the 2D spectrum at the polar point pi r theta_j is (2pi)^{-1/2} g_hat_{jr}
//    (projection-slice theorem, d = 2).
//  - CartesianSpectrum stores phi_hat_k = pi^2 * phi_hat(pi k); the pi^2 cell
//    area makes step 3's displayed prefactor (2pi)^{-d/2} reproduce physical
//    values (it is the Fourier-series partial sum of phi on [-1,1]^2).
#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "splineradon/knots.hpp"
#include "splineradon/radon.hpp"
#include "splineradon/spline_interp.hpp"

namespace splineradon {

// g_hat_{jr} on the polar grid, j = 1..p, r = -q..q-1, flat (j-1)*2q + (r+q).
struct PolarSpectrum {
  PolarGridSpec spec;
  std::vector<std::complex<double>> values;

  std::complex<double>& at(int j, int r) { return values[spec.flat_index(j, r)]; }
  std::complex<double> at(int j, int r) const { return values[spec.flat_index(j, r)]; }
};

// phi_hat_k for integer k with |k|_inf < q; same (2q-1)^2 layout as Image.
struct CartesianSpectrum {
  int q = 1;
  std::vector<std::complex<double>> values;

  explicit CartesianSpectrum(int q_in)
      : q(q_in),
        values(static_cast<std::size_t>(2 * q_in - 1) * (2 * q_in - 1), {0.0, 0.0}) {}
  std::size_t index(int kx, int ky) const {
    const int w = 2 * q - 1;
    return static_cast<std::size_t>(ky + q - 1) * w + static_cast<std::size_t>(kx + q - 1);
  }
  std::complex<double>& at(int kx, int ky) { return values[index(kx, ky)]; }
  std::complex<double> at(int kx, int ky) const { return values[index(kx, ky)]; }
};

struct GriddingConfig {
  SplineParams params{4, 1.0, 2, 3.0};  // spline order m = 4, eps = 1
  int neighbor_count = 25;              // terms kept per Cartesian target
  double sigma = 1.0;                   // assumed spatial support radius (gate)

  void validate() const;
};

struct RunReport {
  int p = 0;
  int q = 0;
  std::uint64_t targets = 0;             // gridded Cartesian points
  std::uint64_t kernel_evaluations = 0;  // fundamental-solution evaluations in step 2
  std::uint64_t local_solves = 0;
  std::uint64_t fallbacks = 0;           // windows degraded to inverse-distance weights
  double fallback_fraction = 0.0;
  bool flagged = false;                  // fallback_fraction >= 2%
  bool density_gate_passed = false;
  double polar_fill_distance = 0.0;
  double step1_ms = 0.0;
  double step2_ms = 0.0;
  double step3_ms = 0.0;
};

// Step 1: per-direction DFT of length 2q (offsets l = -q..q-1), evaluated by
// a fast transform after index reshuffling.
PolarSpectrum step1_projection_dft(const Sinogram& sino);

// Step 2: for each Cartesian frequency pi k inside the sampled disk, solve
// the local Lagrangian system on the neighbor_count nearest polar knots and
// evaluate the cardinal combination of spectral values at the target.
// Ill-conditioned windows fall back to inverse-distance weights (counted).
CartesianSpectrum step2_gridding(const PolarSpectrum& polar, const GriddingConfig& cfg,
                                 RunReport* report = nullptr);

// Nearest-neighbor gridding baseline over the same geometry.
CartesianSpectrum nearest_gridding(const PolarSpectrum& polar);

// Step 3: phi_N = (2pi)^{-1} sum_{|k|_inf < q} e^{i pi N.k/q} phi_hat_k via a
// zero-padded 2D fast transform.
Image step3_inverse_dft(const CartesianSpectrum& cart);

// step3 . step2 . step1 with a run report.
Image reconstruct(const Sinogram& sino, const GriddingConfig& cfg,
                  RunReport* report = nullptr);

// 1D spline resampling of an irregularly sampled projection's Fourier
// transform. Splines are built once per knot set; eval sums
// values[gamma] * V_gamma(tau) where V is the spline's Fourier transform.
class Resampler1D {
 public:
  Resampler1D(const KnotSet& knots_1d, const SplineParams& params, double window_radius);

  std::complex<double> eval(std::span<const double> values, double tau) const;
  const std::vector<LagrangianSpline>& splines() const { return splines_; }

 private:
  const KnotSet* knots_;
  std::vector<LagrangianSpline> splines_;
};

// One-shot form: builds the splines (order k, shift eps, dim 1) and returns
// sum_gamma values[gamma] * V_gamma(tau).
std::complex<double> resample_projection_irregular(std::span<const double> values,
                                                   const KnotSet& knots_1d, int k, double eps,
                                                   double tau);

}  // namespace splineradon
