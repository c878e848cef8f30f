// Internal FFTW helpers. Plan creation/destruction is serialized (FFTW plans
// are not thread safe to create); execution happens on the caller's thread.
#pragma once

#include <complex>
#include <vector>

namespace splineradon::fftutil {

// In-place unnormalized DFT of length data.size():
//   sign = -1: out[m] = sum_l data[l] e^{-2 pi i l m / n}
//   sign = +1: out[m] = sum_l data[l] e^{+2 pi i l m / n}
void dft_1d(std::vector<std::complex<double>>& data, int sign);

// In-place unnormalized 2D DFT of an n-by-n row-major array.
void dft_2d(std::vector<std::complex<double>>& data, int n, int sign);

}  // namespace splineradon::fftutil
