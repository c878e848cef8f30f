#include <cstdlib>
#include <cstring>

#include "splineradon/simd.hpp"

namespace splineradon::simd {

bool cpu_has_avx2() {
#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

namespace {

const Kernels& select() {
  const char* force = std::getenv("SPLINE_RADON_SIMD");
  if (force && std::strcmp(force, "scalar") == 0) return scalar_kernels;
#if defined(SPLINERADON_HAVE_AVX2)
  if (force && std::strcmp(force, "avx2") == 0 && cpu_has_avx2()) return avx2_kernels;
  if ((!force || std::strcmp(force, "auto") == 0) && cpu_has_avx2()) return avx2_kernels;
#endif
  return scalar_kernels;
}

}  // namespace

const Kernels& kernels() {
  static const Kernels& active = select();
  return active;
}

}  // namespace splineradon::simd
