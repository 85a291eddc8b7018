#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "zdp/analysis.hpp"
#include "zdp/engines.hpp"
#include "zdp/numtheory.hpp"
#include "zdp/zdg.hpp"

using namespace zdp;

namespace {

DomPolynomial dense(std::initializer_list<int> coeffs) {
  std::vector<BigInt> v;
  for (int c : coeffs) v.emplace_back(c);
  return DomPolynomial(std::move(v));
}

DomPolynomial sparse(std::initializer_list<std::pair<std::size_t, int>> terms) {
  DomPolynomial p;
  for (const auto& [e, c] : terms) p.add_term(c, e);
  return p;
}

bool is_composite(std::uint64_t n) {
  const auto f = factorize(n);
  return !(f.factors.size() == 1 && f.factors[0].exponent == 1);
}

}  // namespace

TEST_CASE("unimodality") {
  CHECK(is_unimodal(dense({1, 2, 3, 7, 6, 3})) ==
        std::pair<bool, std::optional<std::size_t>>{true, 3});
  CHECK_FALSE(is_unimodal(dense({21, 7, 19, 6, 4})).first);
  CHECK_FALSE(is_unimodal(sparse({{3, 1}, {7, 2}, {8, 1}})).first);
  CHECK(is_unimodal(dense({0, 1, 1})) ==
        std::pair<bool, std::optional<std::size_t>>{true, 1});
  CHECK(is_unimodal(DomPolynomial::monomial(4, 1)).first);
  CHECK_THROWS_AS(is_unimodal(DomPolynomial{}), std::invalid_argument);
}

TEST_CASE("log-concavity with the highest violating index as witness") {
  const auto z30 = sparse({{7, 1}, {12, 1}, {14, 1}, {16, 1}});
  CHECK(is_log_concave(z30) ==
        std::pair<bool, std::optional<std::size_t>>{false, 15});
  const auto z105 = sparse({{22, 1}, {36, 1}, {42, 1}, {44, 1}});
  CHECK(is_log_concave(z105) ==
        std::pair<bool, std::optional<std::size_t>>{false, 43});
  const auto z70 = sparse({{11, 1}, {32, 1}, {34, 1}, {36, 1}});
  CHECK(is_log_concave(z70) ==
        std::pair<bool, std::optional<std::size_t>>{false, 35});
  CHECK(is_log_concave(sparse({{3, 1}, {7, 2}, {8, 1}})).first);
  CHECK(is_log_concave(DomPolynomial::monomial(4, 1)).first);
}

TEST_CASE("newton inequalities in exact rationals") {
  const auto z30 = sparse({{7, 1}, {12, 1}, {14, 1}, {16, 1}});
  CHECK(newton_check(z30) ==
        std::pair<bool, std::optional<std::size_t>>{false, 15});
  CHECK(newton_check(DomPolynomial::monomial(4, 1)).first);  // degree 1
  CHECK(newton_check(sparse({{10, 1}, {21, 4}, {28, 1}})).first);
  // the factors (1+1/t)(1+1/(b-t)) push the bound above a plain square
  const auto tight = dense({1, 2, 2, 1});
  CHECK(is_log_concave(tight).first);
  CHECK_FALSE(newton_check(tight).first);
}

TEST_CASE("oscillation metrics") {
  const auto m1 = oscillation_metrics(dense({8, 6, 160, 28, 16, 11}));
  CHECK(m1.inc_runs == 1);
  CHECK(m1.dec_runs == 2);
  CHECK(m1.direction_changes == 2);
  CHECK(m1.eta == 2);

  const auto m2 = oscillation_metrics(sparse({{3, 1}, {7, 2}, {8, 1}}));
  CHECK(m2.inc_runs == 2);
  CHECK(m2.dec_runs == 2);
  CHECK(m2.direction_changes == 3);
  CHECK(m2.eta == 2);

  const auto m3 = oscillation_metrics(sparse({{1, 2}, {55, 6}, {72, 1}}));
  CHECK(m3.eta == 3);

  const auto m4 = oscillation_metrics(DomPolynomial::monomial(3, 0));
  CHECK(m4.inc_runs == 0);
  CHECK(m4.dec_runs == 0);
  CHECK(m4.eta == 0);
}

TEST_CASE("internal zeros") {
  CHECK_FALSE(has_internal_zeros(sparse({{1, 1}, {2, 1}})));
  CHECK(has_internal_zeros(sparse({{2, 1}, {4, 1}})));
  CHECK_FALSE(has_internal_zeros(DomPolynomial::monomial(4, 1)));
  CHECK_FALSE(has_internal_zeros(dense({0, 0, 3, 4})));  // leading zeros only
}

TEST_CASE("implications over the engine corpus up to 200") {
  for (std::uint64_t n = 4; n <= 200; ++n) {
    if (!is_composite(n)) continue;
    const PropertyReport r =
        analyze(dipoly_compressed(build_class_graph(n)));
    if (r.logconcave && !r.has_internal_zeros) REQUIRE(r.unimodal);
    if (r.newton) REQUIRE(r.logconcave);
    if (r.unimodal) {
      REQUIRE(r.oscillation.dec_runs <= 1);
      REQUIRE(r.oscillation.eta <= 1);
    }
  }
}

TEST_CASE("verdicts are scale invariant") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coeff(0, 9);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<BigInt> a(10), b(10);
    for (int i = 0; i < 10; ++i) {
      a[i] = coeff(rng);
      b[i] = a[i] * 12345;
    }
    if (a == std::vector<BigInt>(10, BigInt(0))) continue;
    const DomPolynomial pa(std::move(a)), pb(std::move(b));
    CHECK(is_log_concave(pa).first == is_log_concave(pb).first);
    CHECK(newton_check(pa).first == newton_check(pb).first);
  }
}
