#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "zdp/bigint.hpp"

namespace zdp {

/// Hard ceiling on dense degree; guards against pathological allocations for
/// very large n (alpha can approach n).
inline constexpr std::size_t kMaxDenseDegree = 1u << 20;

/// Dense univariate polynomial with nonnegative big-integer coefficients,
/// index = exponent. The zero polynomial has an empty coefficient vector.
class DomPolynomial {
 public:
  DomPolynomial() = default;
  explicit DomPolynomial(std::vector<BigInt> coeffs);

  static DomPolynomial monomial(BigInt coeff, std::size_t exponent);
  static DomPolynomial from_sparse(const std::map<std::size_t, BigInt>& terms);

  bool is_zero() const { return coeffs_.empty(); }
  std::size_t degree() const;            // highest nonzero exponent
  std::size_t lowest_exponent() const;   // lowest nonzero exponent
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  const BigInt& coeff(std::size_t exponent) const;  // 0 beyond degree

  void add_term(const BigInt& coeff, std::size_t exponent);

  BigInt evaluate_at_one() const;  // sum of coefficients
  std::map<std::size_t, BigInt> sparse() const;

  /// Sparse text form, ascending exponents: "x^10 + 4x^21 + x^28".
  std::string to_string() const;

  friend bool operator==(const DomPolynomial&, const DomPolynomial&) = default;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// Signed sparse polynomial, exponent -> nonzero coefficient.
using SignedSparse = std::map<std::size_t, BigInt>;

SignedSparse subtract_sparse(const DomPolynomial& a, const DomPolynomial& b);

/// "+x^18", "-2x^3 +x^4", "0".
std::string sparse_to_string(const SignedSparse& s);

}  // namespace zdp
