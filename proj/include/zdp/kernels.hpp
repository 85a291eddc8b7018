#pragma once

#include <cstddef>
#include <string>

namespace zdp {

enum class AberthKernel { Auto, Scalar, Avx2 };

/// One Jacobi-style simultaneous-iteration sweep over all current root
/// estimates z_k of the real-coefficient polynomial sum_i coeffs[i] x^i:
///
///   N_k = p(z_k) / p'(z_k)                (Horner, complex)
///   S_k = sum_{j != k} 1 / (z_k - z_j)    (repulsion)
///   w_k = N_k / (1 - N_k S_k)             (correction, written to wr/wi)
///
/// All lanes read the same input state; the caller applies z -= w. Kernels
/// must perform identical per-root operation sequences so that scalar and
/// SIMD variants agree to the last bit (equivalence-tested).
using AberthSweepFn = void (*)(const double* coeffs, std::size_t degree,
                               const double* zr, const double* zi,
                               std::size_t count, double* wr, double* wi);

void aberth_sweep_scalar(const double* coeffs, std::size_t degree,
                         const double* zr, const double* zi, std::size_t count,
                         double* wr, double* wi);

namespace detail {
/// Scalar reference restricted to roots [begin, end); repulsion still runs
/// over all `count` roots. Used for SIMD tails.
void aberth_sweep_scalar_range(const double* coeffs, std::size_t degree,
                               const double* zr, const double* zi,
                               std::size_t count, std::size_t begin,
                               std::size_t end, double* wr, double* wi);
}  // namespace detail

#if defined(__x86_64__) || defined(_M_X64)
#define ZDP_HAVE_AVX2_KERNEL 1
void aberth_sweep_avx2(const double* coeffs, std::size_t degree,
                       const double* zr, const double* zi, std::size_t count,
                       double* wr, double* wi);
#else
#define ZDP_HAVE_AVX2_KERNEL 0
#endif

bool avx2_available();

/// Resolves Auto to the best kernel supported by the running CPU.
AberthSweepFn select_sweep_kernel(AberthKernel choice);
std::string kernel_name(AberthSweepFn fn);

}  // namespace zdp
