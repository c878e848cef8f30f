// Phantom scenes, exact analytic sinograms, backprojection, and the
// filtered-backprojection reference reconstruction.
#pragma once

#include <span>
#include <vector>

#include "splineradon/common.hpp"

namespace splineradon {

struct Ellipse {
  Vec2 center{};
  double a = 1.0;       // semi-axes
  double b = 1.0;
  double rot = 0.0;     // radians
  double density = 1.0;
};

// Ellipse-list scene. The union of ellipses must fit in the unit disk so that
// Radon offsets in [-1, 1] capture the full support.
struct Phantom {
  std::vector<Ellipse> ellipses;

  void validate() const;          // positive axes, support within the unit disk
  double support_radius() const;  // max over ellipses of |center| + max(a, b)
};

// Radon data g(theta_j, s_l) on p directions x (2q+1) offsets.
// angles alpha_j = (j-1) pi / p, offsets s_l = l/q for l = -q..q.
class Sinogram {
 public:
  Sinogram(int p, int q);

  int p() const { return p_; }
  int q() const { return q_; }
  double h() const { return 1.0 / q_; }
  double angle(int j) const { return (j - 1) * kPi / p_; }
  Vec2 direction(int j) const { return {std::cos(angle(j)), std::sin(angle(j))}; }
  double offset(int l) const { return h() * l; }

  double& at(int j, int l) { return data_[row_offset(j) + (l + q_)]; }
  double at(int j, int l) const { return data_[row_offset(j) + (l + q_)]; }
  std::span<double> row(int j) { return {data_.data() + row_offset(j), row_size()}; }
  std::span<const double> row(int j) const { return {data_.data() + row_offset(j), row_size()}; }
  std::span<double> data() { return data_; }
  std::span<const double> data() const { return data_; }
  std::size_t row_size() const { return static_cast<std::size_t>(2 * q_ + 1); }

 private:
  std::size_t row_offset(int j) const { return static_cast<std::size_t>(j - 1) * row_size(); }
  int p_;
  int q_;
  std::vector<double> data_;
};

// Real pixel grid phi_N at positions hN for integer N with |N|_inf < q.
class Image {
 public:
  explicit Image(int q);

  int q() const { return q_; }
  int width() const { return 2 * q_ - 1; }
  double h() const { return 1.0 / q_; }
  double& at(int nx, int ny) { return pix_[index(nx, ny)]; }
  double at(int nx, int ny) const { return pix_[index(nx, ny)]; }
  Vec2 position(int nx, int ny) const { return {h() * nx, h() * ny}; }
  std::span<double> pixels() { return pix_; }
  std::span<const double> pixels() const { return pix_; }
  std::size_t index(int nx, int ny) const {
    return static_cast<std::size_t>(ny + q_ - 1) * width() + static_cast<std::size_t>(nx + q_ - 1);
  }

 private:
  int q_;
  std::vector<double> pix_;
};

// Exact ellipse line integrals summed over the scene.
Sinogram sinogram_analytic(const Phantom& phantom, int p, int q);

// phi_N = (pi/p) sum_j data(theta_j, x . theta_j), linear interpolation in the
// offset variable, zero outside the sampled offsets.
Image backproject(const Sinogram& sinogram_like);

// Ramp-filtered backprojection (d = 2). Rows are DFT'd, multiplied by the
// band-limited ramp |tau| (cosine-tapered over the top 10% up to the offset
// Nyquist), inverse DFT'd, then backprojected and scaled by 1/(2 pi).
Image fbp_reconstruct(const Sinogram& sino);

// Ground-truth raster: pixel value = sum of densities of ellipses containing
// the pixel center.
Image rasterize(const Phantom& phantom, int q);

// Root-mean-square difference over all pixels.
double rmse(const Image& a, const Image& b);
// Same restricted to pixels with |position| <= radius.
double interior_rmse(const Image& a, const Image& b, double radius);

}  // namespace splineradon
