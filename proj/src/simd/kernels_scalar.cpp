// Scalar reference kernels. These define the semantics the SIMD variants
// must reproduce.
#include <cmath>
#include <cstddef>

#include "splineradon/simd.hpp"

namespace splineradon::simd {
namespace {

double dot_scalar(const double* x, const double* y, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i] * y[i];
  return acc;
}

void axpy_scalar(double a, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void scale_scalar(double* x, double a, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= a;
}

double sum_sq_diff_scalar(const double* x, const double* y, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = x[i] - y[i];
    acc += d * d;
  }
  return acc;
}

void chord_accumulate_scalar(double* out, double w2, double t0, double dt, double amp,
                             std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double t = t0 + dt * static_cast<double>(i);
    const double d = w2 - t * t;
    if (d > 0.0) out[i] += amp * std::sqrt(d);
  }
}

void backproject_row_scalar(double* out, const double* row, std::size_t row_len, double c0,
                            double dc, double weight, std::size_t n) {
  const double last = static_cast<double>(row_len - 1);
  for (std::size_t i = 0; i < n; ++i) {
    const double c = c0 + dc * static_cast<double>(i);
    if (c < 0.0 || c > last) continue;
    std::size_t i0 = static_cast<std::size_t>(c);
    if (i0 >= row_len - 1) i0 = row_len - 2;
    const double f = c - static_cast<double>(i0);
    out[i] += weight * (row[i0] * (1.0 - f) + row[i0 + 1] * f);
  }
}

}  // namespace

const Kernels scalar_kernels = {
    "scalar",        dot_scalar,          axpy_scalar,
    scale_scalar,    sum_sq_diff_scalar,  chord_accumulate_scalar,
    backproject_row_scalar,
};

}  // namespace splineradon::simd
