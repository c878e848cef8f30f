#include "splineradon/radon.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <sstream>

#include "fft_util.hpp"
#include "splineradon/parallel.hpp"
#include "splineradon/simd.hpp"

namespace splineradon {

void Phantom::validate() const {
  for (std::size_t i = 0; i < ellipses.size(); ++i) {
    const Ellipse& e = ellipses[i];
    if (!(e.a > 0.0) || !(e.b > 0.0)) {
      std::ostringstream msg;
      msg << "Phantom: ellipse " << i << " has degenerate semi-axes (" << e.a << ", "
          << e.b << ")";
      throw config_error(msg.str());
    }
  }
  if (support_radius() > 1.0 + 1e-9) {
    throw config_error("Phantom: scene does not fit in the unit disk");
  }
}

double Phantom::support_radius() const {
  double r = 0.0;
  for (const Ellipse& e : ellipses) {
    r = std::max(r, e.center.norm() + std::max(e.a, e.b));
  }
  return r;
}

Sinogram::Sinogram(int p, int q) : p_(p), q_(q) {
  if (p < 1 || q < 1) throw config_error("Sinogram: p and q must be positive");
  data_.assign(static_cast<std::size_t>(p) * (2 * q + 1), 0.0);
}

Image::Image(int q) : q_(q) {
  if (q < 1) throw config_error("Image: q must be positive");
  pix_.assign(static_cast<std::size_t>(width()) * width(), 0.0);
}

Sinogram sinogram_analytic(const Phantom& phantom, int p, int q) {
  phantom.validate();
  Sinogram sino(p, q);
  const auto& k = simd::kernels();
  const double h = sino.h();
  for (int j = 1; j <= p; ++j) {
    const double alpha = sino.angle(j);
    const Vec2 theta = sino.direction(j);
    double* out = sino.row(j).data();
    for (const Ellipse& e : phantom.ellipses) {
      const double beta = alpha - e.rot;
      const double ca = std::cos(beta), sb = std::sin(beta);
      const double w2 = e.a * e.a * ca * ca + e.b * e.b * sb * sb;
      const double amp = 2.0 * e.density * e.a * e.b / w2;
      // offsets s_l = h*l, reduced by the ellipse center projection
      const double t0 = -1.0 - theta.dot(e.center);
      k.chord_accumulate(out, w2, t0, h, amp, sino.row_size());
    }
  }
  return sino;
}

Image backproject(const Sinogram& sino) {
  const int q = sino.q();
  const int p = sino.p();
  Image img(q);
  const double weight = kPi / p;
  const auto& kern = simd::kernels();
  const std::size_t w = static_cast<std::size_t>(img.width());
  parallel_for(w, [&](std::size_t begin, std::size_t end) {
    for (std::size_t iy = begin; iy < end; ++iy) {
      const int ny = static_cast<int>(iy) - (q - 1);
      double* out_row = img.pixels().data() + iy * w;
      for (int j = 1; j <= p; ++j) {
        const Vec2 theta = sino.direction(j);
        // t = x . theta with x = (h nx, h ny); continuous row index
        // c = t/h + q = theta_x nx + theta_y ny + q marches linearly in nx.
        const double c0 = theta.x * (-(q - 1)) + theta.y * ny + q;
        kern.backproject_row(out_row, sino.row(j).data(), sino.row_size(), c0, theta.x,
                             weight, w);
      }
    }
  });
  return img;
}

Image fbp_reconstruct(const Sinogram& sino) {
  const int q = sino.q();
  const int p = sino.p();
  if (p < 8) {
    std::fprintf(stderr,
                 "fbp_reconstruct: warning: p = %d directions causes severe streaking\n", p);
  }
  const int L = 2 * q + 1;
  const double h = sino.h();
  const double nyquist = kPi / h;

  // |tau| with a cosine taper over the top 10% of the band.
  std::vector<double> ramp(L);
  for (int m = 0; m < L; ++m) {
    const int signed_m = m <= L / 2 ? m : m - L;
    const double tau = kTwoPi * signed_m / (L * h);
    const double u = std::abs(tau) / nyquist;
    double taper = 1.0;
    if (u > 1.0) {
      taper = 0.0;
    } else if (u > 0.9) {
      const double c = std::cos(0.5 * kPi * (u - 0.9) / 0.1);
      taper = c * c;
    }
    ramp[m] = std::abs(tau) * taper;
  }

  Sinogram filtered(p, q);
  std::vector<std::complex<double>> row(L);
  for (int j = 1; j <= p; ++j) {
    const auto src = sino.row(j);
    for (int l = 0; l < L; ++l) row[l] = src[l];
    fftutil::dft_1d(row, -1);
    for (int m = 0; m < L; ++m) row[m] *= ramp[m];
    fftutil::dft_1d(row, +1);
    auto dst = filtered.row(j);
    for (int l = 0; l < L; ++l) dst[l] = row[l].real() / L;
  }

  Image img = backproject(filtered);
  simd::kernels().scale(img.pixels().data(), 1.0 / kTwoPi, img.pixels().size());
  return img;
}

Image rasterize(const Phantom& phantom, int q) {
  phantom.validate();
  Image img(q);
  for (int ny = -(q - 1); ny <= q - 1; ++ny) {
    for (int nx = -(q - 1); nx <= q - 1; ++nx) {
      const Vec2 x = img.position(nx, ny);
      double v = 0.0;
      for (const Ellipse& e : phantom.ellipses) {
        const Vec2 d = x - e.center;
        const double c = std::cos(e.rot), s = std::sin(e.rot);
        const double u = (d.x * c + d.y * s) / e.a;
        const double w = (-d.x * s + d.y * c) / e.b;
        if (u * u + w * w <= 1.0) v += e.density;
      }
      img.at(nx, ny) = v;
    }
  }
  return img;
}

double rmse(const Image& a, const Image& b) {
  if (a.q() != b.q()) throw config_error("rmse: image sizes differ");
  const double ss = simd::kernels().sum_sq_diff(a.pixels().data(), b.pixels().data(),
                                                a.pixels().size());
  return std::sqrt(ss / static_cast<double>(a.pixels().size()));
}

double interior_rmse(const Image& a, const Image& b, double radius) {
  if (a.q() != b.q()) throw config_error("interior_rmse: image sizes differ");
  const int q = a.q();
  double ss = 0.0;
  std::size_t count = 0;
  for (int ny = -(q - 1); ny <= q - 1; ++ny) {
    for (int nx = -(q - 1); nx <= q - 1; ++nx) {
      if (a.position(nx, ny).norm() > radius) continue;
      const double d = a.at(nx, ny) - b.at(nx, ny);
      ss += d * d;
      ++count;
    }
  }
  return count ? std::sqrt(ss / static_cast<double>(count)) : 0.0;
}

}  // namespace splineradon
