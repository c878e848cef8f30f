// AVX2/FMA variants of the inner-loop kernels. Compiled only on x86-64 with
// -mavx2 -mfma; selected at runtime (see dispatch.cpp).
#include <immintrin.h>

#include <cmath>
#include <cstddef>
#include <cstdint>

#include "splineradon/simd.hpp"

namespace splineradon::simd {
namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d swapped = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, swapped));
}

inline __m256d lane_offsets() { return _mm256_set_pd(3.0, 2.0, 1.0, 0.0); }

double dot_avx2(const double* x, const double* y, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc);
  }
  double total = hsum(acc);
  for (; i < n; ++i) total += x[i] * y[i];
  return total;
}

void axpy_avx2(double a, const double* x, double* y, std::size_t n) {
  const __m256d av = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(y + i, _mm256_fmadd_pd(av, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
  }
  for (; i < n; ++i) y[i] += a * x[i];
}

void scale_avx2(double* x, double a, std::size_t n) {
  const __m256d av = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(x + i, _mm256_mul_pd(av, _mm256_loadu_pd(x + i)));
  }
  for (; i < n; ++i) x[i] *= a;
}

double sum_sq_diff_avx2(const double* x, const double* y, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i));
    acc = _mm256_fmadd_pd(d, d, acc);
  }
  double total = hsum(acc);
  for (; i < n; ++i) {
    const double d = x[i] - y[i];
    total += d * d;
  }
  return total;
}

void chord_accumulate_avx2(double* out, double w2, double t0, double dt, double amp,
                           std::size_t n) {
  const __m256d w2v = _mm256_set1_pd(w2);
  const __m256d ampv = _mm256_set1_pd(amp);
  const __m256d dtv = _mm256_set1_pd(dt);
  const __m256d zero = _mm256_setzero_pd();
  __m256d idx = lane_offsets();
  const __m256d t0v = _mm256_set1_pd(t0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d iv = _mm256_add_pd(idx, _mm256_set1_pd(static_cast<double>(i)));
    const __m256d t = _mm256_fmadd_pd(dtv, iv, t0v);
    const __m256d d = _mm256_fnmadd_pd(t, t, w2v);  // w2 - t*t
    const __m256d mask = _mm256_cmp_pd(d, zero, _CMP_GT_OQ);
    // sqrt of max(d, 0) keeps masked lanes finite; the blend zeroes them.
    const __m256d s = _mm256_sqrt_pd(_mm256_max_pd(d, zero));
    const __m256d add = _mm256_and_pd(_mm256_mul_pd(ampv, s), mask);
    _mm256_storeu_pd(out + i, _mm256_add_pd(_mm256_loadu_pd(out + i), add));
  }
  for (; i < n; ++i) {
    const double t = t0 + dt * static_cast<double>(i);
    const double d = w2 - t * t;
    if (d > 0.0) out[i] += amp * std::sqrt(d);
  }
}

void backproject_row_avx2(double* out, const double* row, std::size_t row_len, double c0,
                          double dc, double weight, std::size_t n) {
  const double last = static_cast<double>(row_len - 1);
  const __m256d lastv = _mm256_set1_pd(last);
  const __m256d zero = _mm256_setzero_pd();
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d wv = _mm256_set1_pd(weight);
  const __m256d c0v = _mm256_set1_pd(c0);
  const __m256d dcv = _mm256_set1_pd(dc);
  const __m128i max_i0 = _mm_set1_epi32(static_cast<int>(row_len) - 2);
  const __m128i zero_i = _mm_setzero_si128();
  const __m256d offs = lane_offsets();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d iv = _mm256_add_pd(offs, _mm256_set1_pd(static_cast<double>(i)));
    const __m256d c = _mm256_fmadd_pd(dcv, iv, c0v);
    const __m256d valid = _mm256_and_pd(_mm256_cmp_pd(c, zero, _CMP_GE_OQ),
                                        _mm256_cmp_pd(c, lastv, _CMP_LE_OQ));
    if (_mm256_movemask_pd(valid) == 0) continue;
    __m128i i0 = _mm256_cvttpd_epi32(_mm256_max_pd(c, zero));
    i0 = _mm_min_epi32(_mm_max_epi32(i0, zero_i), max_i0);
    const __m128i i1 = _mm_add_epi32(i0, _mm_set1_epi32(1));
    const __m256d f = _mm256_sub_pd(c, _mm256_cvtepi32_pd(i0));
    const __m256d v0 = _mm256_mask_i32gather_pd(zero, row, i0, valid, 8);
    const __m256d v1 = _mm256_mask_i32gather_pd(zero, row, i1, valid, 8);
    // Masked lanes gathered zero, so their contribution vanishes.
    const __m256d lerp =
        _mm256_add_pd(_mm256_mul_pd(v0, _mm256_sub_pd(one, f)), _mm256_mul_pd(v1, f));
    const __m256d add = _mm256_and_pd(_mm256_mul_pd(wv, lerp), valid);
    _mm256_storeu_pd(out + i, _mm256_add_pd(_mm256_loadu_pd(out + i), add));
  }
  for (; i < n; ++i) {
    const double c = c0 + dc * static_cast<double>(i);
    if (c < 0.0 || c > last) continue;
    std::size_t i0 = static_cast<std::size_t>(c);
    if (i0 >= row_len - 1) i0 = row_len - 2;
    const double f = c - static_cast<double>(i0);
    out[i] += weight * (row[i0] * (1.0 - f) + row[i0 + 1] * f);
  }
}

}  // namespace

const Kernels avx2_kernels = {
    "avx2",        dot_avx2,          axpy_avx2,
    scale_avx2,    sum_sq_diff_avx2,  chord_accumulate_avx2,
    backproject_row_avx2,
};

}  // namespace splineradon::simd
