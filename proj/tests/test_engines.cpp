#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>

#include "support/oracles.hpp"
#include "zdp/engines.hpp"
#include "zdp/errors.hpp"
#include "zdp/numtheory.hpp"
#include "zdp/zdg.hpp"

using namespace zdp;

namespace {

bool is_composite(std::uint64_t n) {
  const auto f = factorize(n);
  return !(f.factors.size() == 1 && f.factors[0].exponent == 1);
}

DomPolynomial sparse(std::initializer_list<std::pair<std::size_t, int>> terms) {
  DomPolynomial p;
  for (const auto& [e, c] : terms) p.add_term(c, e);
  return p;
}

}  // namespace

TEST_CASE("brute force engine on the anchor graphs") {
  CHECK(dipoly_bruteforce(expand_graph(build_class_graph(15))) ==
        sparse({{2, 1}, {4, 1}}));
  CHECK(dipoly_bruteforce(expand_graph(build_class_graph(6))) ==
        sparse({{1, 1}, {2, 1}}));
  CHECK(dipoly_bruteforce(expand_graph(build_class_graph(12))) ==
        sparse({{3, 1}, {4, 2}}));
  CHECK(dipoly_bruteforce(expand_graph(build_class_graph(4))) ==
        sparse({{1, 1}}));
}

TEST_CASE("compressed engine on the anchor graphs") {
  CHECK(dipoly_compressed(build_class_graph(75)) ==
        sparse({{10, 1}, {21, 4}, {28, 1}}));
  CHECK(dipoly_compressed(build_class_graph(105)) ==
        sparse({{22, 1}, {36, 1}, {42, 1}, {44, 1}}));
  CHECK(dipoly_compressed(build_class_graph(10)) == sparse({{1, 1}, {4, 1}}));
}

TEST_CASE("gamma_i and alpha") {
  CHECK(gamma_i_alpha(sparse({{10, 1}, {21, 4}, {28, 1}})) ==
        std::pair<std::size_t, std::size_t>{10, 28});
  CHECK(gamma_i_alpha(sparse({{1, 1}, {2, 1}})) ==
        std::pair<std::size_t, std::size_t>{1, 2});
  CHECK(gamma_i_alpha(DomPolynomial::monomial(6, 1)) ==
        std::pair<std::size_t, std::size_t>{1, 1});
  CHECK_THROWS_AS(gamma_i_alpha(DomPolynomial{}), EmptyGraphError);
}

TEST_CASE("domination number") {
  CHECK(domination_number(expand_graph(build_class_graph(6))) == 1);
  CHECK(domination_number(expand_graph(build_class_graph(4))) == 1);
  CHECK(domination_number(expand_graph(build_class_graph(15))) == 2);
}

TEST_CASE("size caps") {
  // Gamma(Z_75) has 34 vertices
  CHECK_THROWS_AS(dipoly_bruteforce(expand_graph(build_class_graph(75))),
                  SizeCapError);
  CHECK_THROWS_AS(domination_number(expand_graph(build_class_graph(75))),
                  SizeCapError);
  // 720720 has 238 proper divisors
  CHECK_THROWS_AS(dipoly_compressed(build_class_graph(720720)), SizeCapError);
}

TEST_CASE("engine equivalence for n <= 120 with <= 26 vertices") {
  int checked = 0;
  for (std::uint64_t n = 4; n <= 120; ++n) {
    if (!is_composite(n)) continue;
    const ClassGraph cg = build_class_graph(n);
    if (cg.vertex_count() > 26) continue;
    const DomPolynomial brute = dipoly_bruteforce(expand_graph(cg));
    REQUIRE(brute == dipoly_compressed(cg));
    ++checked;
  }
  CHECK(checked > 20);
}

TEST_CASE("independent dominating = maximal independent, by definition") {
  for (std::uint64_t n = 4; n <= 60; ++n) {
    if (!is_composite(n)) continue;
    const ClassGraph cg = build_class_graph(n);
    if (cg.vertex_count() > 20) continue;
    const ExplicitGraph g = expand_graph(cg);
    REQUIRE(oracle::independent_dominating_masks(g) ==
            oracle::maximal_independent_masks(g));
    REQUIRE(dipoly_bruteforce(g) == oracle::dipoly_subset_scan(g));
  }
}

TEST_CASE("evaluation at 1 counts the maximal independent sets") {
  for (std::uint64_t n : {6, 8, 12, 15, 16, 18, 20, 24, 27, 30, 36, 45}) {
    const ClassGraph cg = build_class_graph(n);
    const ExplicitGraph g = expand_graph(cg);
    if (g.size() > 20) continue;
    const auto mis = oracle::maximal_independent_masks(g);
    CHECK(dipoly_compressed(cg).evaluate_at_one() == BigInt(mis.size()));
  }
}

TEST_CASE("domination chain gamma <= gamma_i <= alpha") {
  for (std::uint64_t n = 4; n <= 120; ++n) {
    if (!is_composite(n)) continue;
    const ClassGraph cg = build_class_graph(n);
    if (cg.vertex_count() > 26) continue;
    const ExplicitGraph g = expand_graph(cg);
    const auto [gamma_i, alpha] = gamma_i_alpha(dipoly_bruteforce(g));
    const std::size_t gamma = domination_number(g);
    REQUIRE(gamma <= gamma_i);
    REQUIRE(gamma_i <= alpha);
  }
}

TEST_CASE("pruned support recursion equals the unpruned class scan") {
  for (std::uint64_t n = 4; n <= 300; ++n) {
    if (!is_composite(n)) continue;
    const ClassGraph cg = build_class_graph(n);
    if (cg.size() > 24) continue;
    REQUIRE(dipoly_compressed(cg) == oracle::dipoly_class_scan(cg));
  }
}

TEST_CASE("compressed engine scales to Z_729 under a second") {
  const auto start = std::chrono::steady_clock::now();
  const ClassGraph cg = build_class_graph(729);
  const DomPolynomial p = dipoly_compressed(cg);
  const auto elapsed = std::chrono::steady_clock::now() - start;
  CHECK(std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count() <
        1000);
  CHECK(cg.vertex_count() == 242);
  CHECK(p == sparse({{1, 2}, {163, 6}, {217, 18}}));
  // support agrees with the definitional scan on the quotient
  CHECK(p == oracle::dipoly_class_scan(cg));
}

TEST_CASE("prime modulus yields an error, not a zero polynomial") {
  CHECK_THROWS_AS(build_class_graph(11), EmptyGraphError);
}
