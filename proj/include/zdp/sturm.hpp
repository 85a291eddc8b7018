#pragma once

#include <cstddef>
#include <vector>

#include "zdp/bigint.hpp"

namespace zdp::detail {

/// Signed dense integer polynomial, index = exponent, no trailing zeros.
using ZPoly = std::vector<BigInt>;

bool zp_is_zero(const ZPoly& a);
std::size_t zp_degree(const ZPoly& a);  // zero polynomial: 0
void zp_trim(ZPoly& a);
ZPoly zp_derivative(const ZPoly& a);
BigInt zp_content(const ZPoly& a);       // >= 0; 0 only for the zero poly
ZPoly zp_primitive_part(const ZPoly& a);  // sign preserved

/// c * rem(a, b) for some positive integer c, computed by fraction-free
/// elimination. Requires deg(a) >= deg(b) >= 0, b nonzero.
ZPoly zp_scaled_rem(ZPoly a, const ZPoly& b);

/// Exact quotient a / b over the integers; throws std::domain_error if the
/// division is not exact.
ZPoly zp_exact_div(const ZPoly& a, const ZPoly& b);

BigInt zp_eval(const ZPoly& a, const BigInt& x);

/// Primitive gcd with positive leading coefficient (pseudo-remainder
/// sequence, content-stripped each step).
ZPoly zp_gcd(ZPoly a, ZPoly b);

/// a / gcd(a, a'): same distinct roots, all simple. a must be nonzero.
ZPoly zp_squarefree_part(const ZPoly& a);

/// Sturm chain of a squarefree polynomial; each element is a positive
/// multiple of the classical chain element.
std::vector<ZPoly> sturm_chain(const ZPoly& squarefree);

/// Sign variations of the chain evaluated at x (zeros skipped).
int sign_variations_at(const std::vector<ZPoly>& chain, const BigInt& x);

/// Integer B strictly larger than the Cauchy root bound, so every real root
/// lies in (-B, B).
BigInt cauchy_bound_int(const ZPoly& a);

/// Distinct real roots of a squarefree polynomial, by Sturm's theorem.
std::size_t count_distinct_real_roots(const ZPoly& squarefree);

}  // namespace zdp::detail
