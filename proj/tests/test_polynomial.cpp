#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zdp/errors.hpp"
#include "zdp/polynomial.hpp"

using namespace zdp;

TEST_CASE("sparse text rendering") {
  DomPolynomial p;
  p.add_term(1, 10);
  p.add_term(4, 21);
  p.add_term(1, 28);
  CHECK(p.to_string() == "x^10 + 4x^21 + x^28");

  DomPolynomial q;
  q.add_term(1, 1);
  q.add_term(1, 2);
  CHECK(q.to_string() == "x + x^2");

  CHECK(DomPolynomial{}.to_string() == "0");
  CHECK(DomPolynomial::monomial(5, 0).to_string() == "5");
  CHECK(DomPolynomial::monomial(2, 1).to_string() == "2x");

  DomPolynomial r;
  r.add_term(2, 1);
  r.add_term(6, 55);
  r.add_term(1, 72);
  CHECK(r.to_string() == "2x + 6x^55 + x^72");
}

TEST_CASE("degree and exponent bounds") {
  DomPolynomial p;
  p.add_term(3, 7);
  p.add_term(1, 2);
  CHECK(p.degree() == 7);
  CHECK(p.lowest_exponent() == 2);
  CHECK(p.coeff(7) == 3);
  CHECK(p.coeff(100) == 0);
  CHECK_THROWS_AS(DomPolynomial{}.degree(), std::logic_error);
}

TEST_CASE("term accumulation and round trips") {
  DomPolynomial p;
  p.add_term(1, 4);
  p.add_term(2, 4);
  CHECK(p.coeff(4) == 3);
  CHECK(p == DomPolynomial::monomial(3, 4));
  CHECK(DomPolynomial::from_sparse(p.sparse()) == p);
  CHECK(p.evaluate_at_one() == 3);
}

TEST_CASE("nonnegative coefficients enforced") {
  DomPolynomial p;
  CHECK_THROWS_AS(p.add_term(-1, 2), std::invalid_argument);
  CHECK_THROWS_AS(DomPolynomial({BigInt(1), BigInt(-2)}), std::invalid_argument);
}

TEST_CASE("dense degree cap") {
  DomPolynomial p;
  CHECK_THROWS_AS(p.add_term(1, kMaxDenseDegree + 1), SizeCapError);
}

TEST_CASE("signed sparse difference") {
  DomPolynomial a, b;
  a.add_term(2, 1);
  a.add_term(1, 18);
  a.add_term(6, 19);
  b.add_term(2, 1);
  b.add_term(6, 19);
  const SignedSparse d = subtract_sparse(a, b);
  CHECK(d == SignedSparse{{18, 1}});
  CHECK(sparse_to_string(d) == "+x^18");
  CHECK(sparse_to_string(subtract_sparse(b, a)) == "-x^18");
  CHECK(sparse_to_string(subtract_sparse(a, a)) == "0");

  DomPolynomial c;
  c.add_term(2, 3);
  const SignedSparse mixed = subtract_sparse(a, c);
  CHECK(sparse_to_string(mixed) == "+2x -2x^3 +x^18 +6x^19");
}
