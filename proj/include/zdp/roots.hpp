#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "zdp/kernels.hpp"
#include "zdp/polynomial.hpp"

namespace zdp {

struct NumericRoot {
  std::complex<double> z;
  double residual = 0.0;  // |p(z)| / max |a_i|, p = origin-deflated polynomial
};

struct RootsReport {
  std::size_t degree = 0;
  std::size_t origin_multiplicity = 0;     // exact trailing-zero deflation
  std::vector<NumericRoot> numeric_roots;  // sorted by (re, im)
  bool converged = true;
  std::size_t iterations = 0;
  double max_residual = 0.0;

  // Exact certification (filled by certify_roots / count_real_roots_exact).
  std::size_t distinct_real_exact = 0;
  std::size_t distinct_nonreal_exact = 0;
  std::size_t squarefree_degree = 0;
};

struct RootFindOptions {
  double tol = 1e-12;
  std::size_t max_iter = 1000;
  AberthKernel kernel = AberthKernel::Auto;
};

/// Numeric zeros by simultaneous Aberth-Ehrlich iteration, all roots refined
/// together from distinct points on a circle of Cauchy-bound radius. The
/// origin factor x^m is deflated exactly first. A report that did not reach
/// tol within max_iter comes back with converged = false.
RootsReport find_roots(const DomPolynomial& p, const RootFindOptions& opts = {});

struct RealRootCount {
  std::size_t distinct_real_exact = 0;
  std::size_t distinct_nonreal_exact = 0;
  std::size_t squarefree_degree = 0;
};

/// Exact distinct-real-root count: squarefree part via integer polynomial
/// gcd with the derivative, then a Sturm chain evaluated at an integer
/// Cauchy bound. No floating point anywhere.
RealRootCount count_real_roots_exact(const DomPolynomial& p);

/// find_roots plus the exact certificate in one report.
RootsReport certify_roots(const DomPolynomial& p,
                          const RootFindOptions& opts = {});

}  // namespace zdp
