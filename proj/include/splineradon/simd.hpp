// Data-parallel inner-loop kernels with runtime-dispatched SIMD variants.
//
// Every kernel has a scalar reference implementation; the AVX2 variants are
// equivalence-tested against it. Selection happens once per process from CPU
// capabilities and can be forced with SPLINE_RADON_SIMD=scalar|avx2|auto.
#pragma once

#include <cstddef>

namespace splineradon::simd {

struct Kernels {
  const char* name;

  // sum_i x[i] * y[i]
  double (*dot)(const double* x, const double* y, std::size_t n);

  // y[i] += a * x[i]
  void (*axpy)(double a, const double* x, double* y, std::size_t n);

  // x[i] *= a
  void (*scale)(double* x, double a, std::size_t n);

  // sum_i (x[i] - y[i])^2
  double (*sum_sq_diff)(const double* x, const double* y, std::size_t n);

  // out[i] += amp * sqrt(w2 - t_i^2) where t_i = t0 + dt*i, for w2 > t_i^2.
  // Chord-length accumulation for one ellipse along one projection row.
  void (*chord_accumulate)(double* out, double w2, double t0, double dt, double amp,
                           std::size_t n);

  // out[i] += weight * lerp(row, c_i) where c_i = c0 + dc*i is a fractional
  // sample index into row[0..row_len-1]; indices outside [0, row_len-1]
  // contribute zero. Backprojection of one projection row along one image row.
  void (*backproject_row)(double* out, const double* row, std::size_t row_len, double c0,
                          double dc, double weight, std::size_t n);
};

extern const Kernels scalar_kernels;
#if defined(SPLINERADON_HAVE_AVX2)
extern const Kernels avx2_kernels;
#endif

// The active kernel set (selected once, thread safe).
const Kernels& kernels();

// True when the CPU reports AVX2+FMA support.
bool cpu_has_avx2();

}  // namespace splineradon::simd
