#include "zdp/kernels.hpp"

namespace zdp {
namespace detail {

// Reference kernel. The operation sequence (two-product complex multiply,
// explicit temporaries, serial j-accumulation) is mirrored by the SIMD
// variants lane for lane; keep them in sync when editing.
void aberth_sweep_scalar_range(const double* coeffs, std::size_t degree,
                               const double* zr, const double* zi,
                               std::size_t count, std::size_t begin,
                               std::size_t end, double* wr, double* wi) {
  for (std::size_t k = begin; k < end; ++k) {
    const double xr = zr[k];
    const double xi = zi[k];

    // p and p' at z_k by a fused Horner pass
    double pr = coeffs[degree], pi = 0.0;
    double dr = 0.0, di = 0.0;
    for (std::size_t i = degree; i-- > 0;) {
      double t = dr * xr - di * xi + pr;
      di = dr * xi + di * xr + pi;
      dr = t;
      t = pr * xr - pi * xi + coeffs[i];
      pi = pr * xi + pi * xr;
      pr = t;
    }

    // N = p / p'
    const double dd = dr * dr + di * di;
    const double nr = (pr * dr + pi * di) / dd;
    const double ni = (pi * dr - pr * di) / dd;

    // S = sum over other roots of 1 / (z_k - z_j)
    double sr = 0.0, si = 0.0;
    for (std::size_t j = 0; j < count; ++j) {
      if (j == k) continue;
      const double er = xr - zr[j];
      const double ei = xi - zi[j];
      const double den = er * er + ei * ei;
      sr += er / den;
      si += (0.0 - ei) / den;
    }

    // w = N / (1 - N S)
    const double gr = 1.0 - (nr * sr - ni * si);
    const double gi = 0.0 - (nr * si + ni * sr);
    const double gg = gr * gr + gi * gi;
    wr[k] = (nr * gr + ni * gi) / gg;
    wi[k] = (ni * gr - nr * gi) / gg;
  }
}

}  // namespace detail

void aberth_sweep_scalar(const double* coeffs, std::size_t degree,
                         const double* zr, const double* zi, std::size_t count,
                         double* wr, double* wi) {
  detail::aberth_sweep_scalar_range(coeffs, degree, zr, zi, count, 0, count,
                                    wr, wi);
}

}  // namespace zdp
