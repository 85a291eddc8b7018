#include "zdp/kernels.hpp"

#include <stdexcept>

namespace zdp {

bool avx2_available() {
#if ZDP_HAVE_AVX2_KERNEL
  return __builtin_cpu_supports("avx2") != 0;
#else
  return false;
#endif
}

AberthSweepFn select_sweep_kernel(AberthKernel choice) {
  switch (choice) {
    case AberthKernel::Scalar:
      return aberth_sweep_scalar;
    case AberthKernel::Avx2:
#if ZDP_HAVE_AVX2_KERNEL
      if (avx2_available()) return aberth_sweep_avx2;
#endif
      throw std::runtime_error("AVX2 kernel not available on this CPU");
    case AberthKernel::Auto:
      break;
  }
#if ZDP_HAVE_AVX2_KERNEL
  if (avx2_available()) return aberth_sweep_avx2;
#endif
  return aberth_sweep_scalar;
}

std::string kernel_name(AberthSweepFn fn) {
#if ZDP_HAVE_AVX2_KERNEL
  if (fn == aberth_sweep_avx2) return "avx2";
#endif
  if (fn == aberth_sweep_scalar) return "scalar";
  return "unknown";
}

}  // namespace zdp
