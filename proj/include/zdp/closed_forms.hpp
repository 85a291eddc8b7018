#pragma once

#include <cstdint>

#include "zdp/numtheory.hpp"
#include "zdp/polynomial.hpp"

namespace zdp {

// Family formulas, implemented exactly as published. The even-power formula
// is known to disagree with both exact engines by one term; audit_family
// surfaces that difference instead of patching it away.
DomPolynomial closed_prime_squared(std::uint64_t p);  // (p-1) x
DomPolynomial closed_two_p(std::uint64_t p);          // x + x^{p-1}, p odd
DomPolynomial closed_pq(std::uint64_t p, std::uint64_t q);  // x^phi(p) + x^phi(q)
/// p is the squared prime: x^{phi(q)+phi(pq)} + phi(p) x^{phi(p^2)+1}
///                        + x^{phi(p^2)+phi(pq)}; valid for p > q and p < q.
DomPolynomial closed_p_squared_q(std::uint64_t p, std::uint64_t q);
/// p < q < r: x^{phi(pr)+phi(pq)+phi(p)} + x^{phi(qr)+phi(pq)+phi(q)}
///          + x^{phi(qr)+phi(pr)+phi(r)} + x^{phi(qr)+phi(pr)+phi(pq)}.
DomPolynomial closed_pqr(std::uint64_t p, std::uint64_t q, std::uint64_t r);
/// n = p^{2m}: sum_{i=1}^m phi(p^i) x^{1+p^{2m-1}-p^{2m-1-(i-1)}}
///           + x^{p^{2m-1}-p^m}.
DomPolynomial closed_prime_power_even(std::uint64_t p, unsigned m);
/// n = p^{2m+1}: sum_{i=1}^m phi(p^i) x^{1+p^{2m}-p^{2m-(i-1)}}
///             + x^{p^{2m}-p^m}.
DomPolynomial closed_prime_power_odd(std::uint64_t p, unsigned m);

struct ClosedForm {
  DomPolynomial poly;
  FamilyClass family;
};

/// Dispatch on classify_family. Throws UnsupportedFamilyError for General
/// and EmptyGraph.
ClosedForm dipoly_closed(const Factorization& f);

struct AuditRecord {
  std::uint64_t n = 0;
  FamilyClass family;
  bool match = false;
  SignedSparse difference;  // closed - compressed
};

/// Cross-checks the closed form against the compressed engine.
AuditRecord audit_family(const Factorization& f);

/// The one difference the even-power formula is expected to show against the
/// exact engines: +x^{p^{2m-1}-p^m} for m >= 2, the constant +1 for m = 1.
SignedSparse expected_even_power_difference(std::uint64_t p, unsigned m);

}  // namespace zdp
