#include "fft_util.hpp"

#include <fftw3.h>

#include <mutex>
#include <stdexcept>

namespace splineradon::fftutil {
namespace {

std::mutex& plan_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

void dft_1d(std::vector<std::complex<double>>& data, int sign) {
  if (data.empty()) return;
  fftw_complex* buf = reinterpret_cast<fftw_complex*>(data.data());
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(plan_mutex());
    plan = fftw_plan_dft_1d(static_cast<int>(data.size()), buf, buf,
                            sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD, FFTW_ESTIMATE);
  }
  if (!plan) throw std::runtime_error("fftw_plan_dft_1d failed");
  fftw_execute(plan);
  std::lock_guard<std::mutex> lock(plan_mutex());
  fftw_destroy_plan(plan);
}

void dft_2d(std::vector<std::complex<double>>& data, int n, int sign) {
  if (data.size() != static_cast<std::size_t>(n) * n) {
    throw std::runtime_error("dft_2d: size mismatch");
  }
  fftw_complex* buf = reinterpret_cast<fftw_complex*>(data.data());
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(plan_mutex());
    plan = fftw_plan_dft_2d(n, n, buf, buf, sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD,
                            FFTW_ESTIMATE);
  }
  if (!plan) throw std::runtime_error("fftw_plan_dft_2d failed");
  fftw_execute(plan);
  std::lock_guard<std::mutex> lock(plan_mutex());
  fftw_destroy_plan(plan);
}

}  // namespace splineradon::fftutil
