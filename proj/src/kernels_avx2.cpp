#include "zdp/kernels.hpp"

#if ZDP_HAVE_AVX2_KERNEL

#include <immintrin.h>

namespace zdp {

// Four roots per batch, lanes independent; the per-lane operation sequence
// matches aberth_sweep_scalar exactly (plain mul/add/sub, no FMA), so both
// kernels produce identical corrections. The self term j == k is masked out
// of the repulsion sum instead of skipped.
void aberth_sweep_avx2(const double* coeffs, std::size_t degree,
                       const double* zr, const double* zi, std::size_t count,
                       double* wr, double* wi) {
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d zero = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 4 <= count; k += 4) {
    const __m256d xr = _mm256_loadu_pd(zr + k);
    const __m256d xi = _mm256_loadu_pd(zi + k);

    __m256d pr = _mm256_set1_pd(coeffs[degree]);
    __m256d pi = zero;
    __m256d dr = zero;
    __m256d di = zero;
    for (std::size_t i = degree; i-- > 0;) {
      __m256d t = _mm256_add_pd(
          _mm256_sub_pd(_mm256_mul_pd(dr, xr), _mm256_mul_pd(di, xi)), pr);
      di = _mm256_add_pd(
          _mm256_add_pd(_mm256_mul_pd(dr, xi), _mm256_mul_pd(di, xr)), pi);
      dr = t;
      t = _mm256_add_pd(
          _mm256_sub_pd(_mm256_mul_pd(pr, xr), _mm256_mul_pd(pi, xi)),
          _mm256_set1_pd(coeffs[i]));
      pi = _mm256_add_pd(_mm256_mul_pd(pr, xi), _mm256_mul_pd(pi, xr));
      pr = t;
    }

    const __m256d dd =
        _mm256_add_pd(_mm256_mul_pd(dr, dr), _mm256_mul_pd(di, di));
    const __m256d nr = _mm256_div_pd(
        _mm256_add_pd(_mm256_mul_pd(pr, dr), _mm256_mul_pd(pi, di)), dd);
    const __m256d ni = _mm256_div_pd(
        _mm256_sub_pd(_mm256_mul_pd(pi, dr), _mm256_mul_pd(pr, di)), dd);

    const __m256d lane_idx =
        _mm256_set_pd(static_cast<double>(k + 3), static_cast<double>(k + 2),
                      static_cast<double>(k + 1), static_cast<double>(k));
    __m256d sr = zero;
    __m256d si = zero;
    for (std::size_t j = 0; j < count; ++j) {
      const __m256d er = _mm256_sub_pd(xr, _mm256_set1_pd(zr[j]));
      const __m256d ei = _mm256_sub_pd(xi, _mm256_set1_pd(zi[j]));
      const __m256d den =
          _mm256_add_pd(_mm256_mul_pd(er, er), _mm256_mul_pd(ei, ei));
      const __m256d tr = _mm256_div_pd(er, den);
      const __m256d ti = _mm256_div_pd(_mm256_sub_pd(zero, ei), den);
      const __m256d keep = _mm256_cmp_pd(
          lane_idx, _mm256_set1_pd(static_cast<double>(j)), _CMP_NEQ_OQ);
      sr = _mm256_add_pd(sr, _mm256_and_pd(tr, keep));
      si = _mm256_add_pd(si, _mm256_and_pd(ti, keep));
    }

    const __m256d gr = _mm256_sub_pd(
        one, _mm256_sub_pd(_mm256_mul_pd(nr, sr), _mm256_mul_pd(ni, si)));
    const __m256d gi = _mm256_sub_pd(
        zero, _mm256_add_pd(_mm256_mul_pd(nr, si), _mm256_mul_pd(ni, sr)));
    const __m256d gg =
        _mm256_add_pd(_mm256_mul_pd(gr, gr), _mm256_mul_pd(gi, gi));
    _mm256_storeu_pd(wr + k,
                     _mm256_div_pd(_mm256_add_pd(_mm256_mul_pd(nr, gr),
                                                 _mm256_mul_pd(ni, gi)),
                                   gg));
    _mm256_storeu_pd(wi + k,
                     _mm256_div_pd(_mm256_sub_pd(_mm256_mul_pd(ni, gr),
                                                 _mm256_mul_pd(nr, gi)),
                                   gg));
  }
  detail::aberth_sweep_scalar_range(coeffs, degree, zr, zi, count, k, count,
                                    wr, wi);
}

}  // namespace zdp

#endif  // ZDP_HAVE_AVX2_KERNEL
