#pragma once

#include <cstddef>
#include <utility>

#include "zdp/polynomial.hpp"
#include "zdp/zdg.hpp"

namespace zdp {

inline constexpr std::size_t kDefaultBruteCap = 30;
inline constexpr std::size_t kDefaultDominationCap = 26;
inline constexpr std::size_t kMaxClasses = 64;

/// Exact D_i by enumerating maximal independent sets with a pivoted
/// branch-and-bound (maximal cliques of the complement). Coefficient k counts
/// the independent dominating sets of size k.
DomPolynomial dipoly_bruteforce(const ExplicitGraph& g,
                                std::size_t vertex_cap = kDefaultBruteCap);

/// Exact D_i from the divisor-class quotient: sum over independent class
/// supports T that dominate every class outside T of prod_{i in T} w_i(x),
/// w_i = size_i * x for clique classes and x^{size_i} for null classes.
DomPolynomial dipoly_compressed(const ClassGraph& cg);

/// (gamma_i, alpha): lowest and highest exponent with nonzero coefficient.
/// Throws EmptyGraphError on the zero polynomial.
std::pair<std::size_t, std::size_t> gamma_i_alpha(const DomPolynomial& p);

/// Minimum dominating set size (independence not required), by
/// increasing-size search.
std::size_t domination_number(const ExplicitGraph& g,
                              std::size_t vertex_cap = kDefaultDominationCap);

}  // namespace zdp
