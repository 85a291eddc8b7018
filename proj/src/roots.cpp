#include "zdp/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "zdp/sturm.hpp"

namespace zdp {

namespace {

// Deflated double coefficients, ascending; index 0 is the lowest nonzero
// term of p.
std::vector<double> deflated_doubles(const DomPolynomial& p, std::size_t m) {
  const auto& a = p.coeffs();
  std::vector<double> c(a.size() - m);
  for (std::size_t i = m; i < a.size(); ++i)
    c[i - m] = a[i].convert_to<double>();
  return c;
}

}  // namespace

RootsReport find_roots(const DomPolynomial& p, const RootFindOptions& opts) {
  if (p.is_zero() || p.degree() < 1)
    throw std::invalid_argument("find_roots: degree must be >= 1");
  RootsReport rep;
  rep.degree = p.degree();
  rep.origin_multiplicity = p.lowest_exponent();
  const std::vector<double> c = deflated_doubles(p, rep.origin_multiplicity);
  const std::size_t d = c.size() - 1;
  if (d == 0) return rep;  // pure monomial: only the origin root

  // initial estimates on a circle of Cauchy-bound radius, offset to break
  // conjugate and roots-of-unity symmetry
  double radius = 0.0;
  for (std::size_t i = 0; i < d; ++i)
    radius = std::max(radius, std::abs(c[i] / c[d]));
  radius = 1.0 + radius;
  std::vector<double> zr(d), zi(d), wr(d), wi(d);
  for (std::size_t k = 0; k < d; ++k) {
    const double theta =
        2.0 * std::numbers::pi * (static_cast<double>(k) + 0.354) /
        static_cast<double>(d);
    zr[k] = radius * std::cos(theta);
    zi[k] = radius * std::sin(theta);
  }

  const AberthSweepFn sweep = select_sweep_kernel(opts.kernel);
  bool converged = false;
  std::size_t iter = 0;
  while (iter < opts.max_iter) {
    ++iter;
    sweep(c.data(), d, zr.data(), zi.data(), d, wr.data(), wi.data());
    double max_update = 0.0;
    for (std::size_t k = 0; k < d; ++k) {
      if (!std::isfinite(wr[k]) || !std::isfinite(wi[k])) {
        // derivative or denominator vanished; deterministic nudge
        zr[k] += 1e-3 * (1.0 + static_cast<double>(k));
        zi[k] += 1e-3;
        max_update = radius;
        continue;
      }
      zr[k] -= wr[k];
      zi[k] -= wi[k];
      max_update = std::max(max_update, std::hypot(wr[k], wi[k]));
    }
    // coincident estimates would make the next repulsion sum singular
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i + 1; j < d; ++j)
        if (zr[i] == zr[j] && zi[i] == zi[j]) zr[j] += 1e-9 * (j + 1);
    if (max_update < opts.tol) {
      converged = true;
      break;
    }
  }
  rep.converged = converged;
  rep.iterations = iter;

  double max_abs_coeff = 0.0;
  for (double x : c) max_abs_coeff = std::max(max_abs_coeff, std::abs(x));
  rep.numeric_roots.reserve(d);
  for (std::size_t k = 0; k < d; ++k) {
    std::complex<double> z(zr[k], zi[k]);
    std::complex<double> v(c[d], 0.0);
    for (std::size_t i = d; i-- > 0;) v = v * z + c[i];
    NumericRoot root;
    root.z = z;
    root.residual = std::abs(v) / max_abs_coeff;
    rep.numeric_roots.push_back(root);
    rep.max_residual = std::max(rep.max_residual, root.residual);
  }
  std::sort(rep.numeric_roots.begin(), rep.numeric_roots.end(),
            [](const NumericRoot& a, const NumericRoot& b) {
              if (a.z.real() != b.z.real()) return a.z.real() < b.z.real();
              return a.z.imag() < b.z.imag();
            });
  return rep;
}

RealRootCount count_real_roots_exact(const DomPolynomial& p) {
  if (p.is_zero() || p.degree() < 1)
    throw std::invalid_argument("count_real_roots_exact: degree must be >= 1");
  const std::size_t m = p.lowest_exponent();
  const auto& a = p.coeffs();
  detail::ZPoly q(a.begin() + static_cast<std::ptrdiff_t>(m), a.end());

  RealRootCount out;
  const std::size_t origin = m > 0 ? 1 : 0;
  if (q.size() == 1) {  // p = c x^m
    out.squarefree_degree = origin;
    out.distinct_real_exact = origin;
    out.distinct_nonreal_exact = 0;
    return out;
  }
  const detail::ZPoly s = detail::zp_squarefree_part(q);
  const std::size_t real = detail::count_distinct_real_roots(s);
  out.squarefree_degree = detail::zp_degree(s) + origin;
  out.distinct_real_exact = real + origin;
  out.distinct_nonreal_exact = detail::zp_degree(s) - real;
  return out;
}

RootsReport certify_roots(const DomPolynomial& p, const RootFindOptions& opts) {
  RootsReport rep = find_roots(p, opts);
  const RealRootCount rc = count_real_roots_exact(p);
  rep.distinct_real_exact = rc.distinct_real_exact;
  rep.distinct_nonreal_exact = rc.distinct_nonreal_exact;
  rep.squarefree_degree = rc.squarefree_degree;
  return rep;
}

}  // namespace zdp
