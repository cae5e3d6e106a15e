#include <doctest.h>

#include "scar/poly_gcd.hpp"

using namespace scar::algebra;

TEST_CASE("univariate gcd") {
  const Polynomial x = Polynomial::variable("x");
  const Polynomial f = (x - Polynomial(1L)) * (x - Polynomial(2L));
  const Polynomial g = (x - Polynomial(1L)) * (x + Polynomial(3L));
  CHECK(poly_gcd(f, g) == x - Polynomial(1L));
  CHECK(poly_gcd(f, x + Polynomial(7L)) == Polynomial(Rational(1)));
}

TEST_CASE("multivariate gcd") {
  const Polynomial x = Polynomial::variable("x");
  const Polynomial y = Polynomial::variable("y");
  const Polynomial common = x * y + Polynomial(1L);
  const Polynomial f = common * (x + y);
  const Polynomial g = common * (x - y + Polynomial(2L));
  CHECK(poly_gcd(f, g) == common.monic());
  // disjoint variables are coprime
  CHECK(poly_gcd(x + Polynomial(1L), y + Polynomial(1L)) == Polynomial(Rational(1)));
}

TEST_CASE("content and primitive part") {
  const Polynomial x = Polynomial::variable("x");
  const Polynomial y = Polynomial::variable("y");
  const Polynomial p = y * x.pow(2) + y * y * x;  // content in x is y
  CHECK(content_in(p, "x") == y);
  CHECK(primitive_part_in(p, "x") == x.pow(2) + y * x);
}

TEST_CASE("squarefree part in a variable") {
  const Polynomial x = Polynomial::variable("x");
  const Polynomial y = Polynomial::variable("y");
  const Polynomial p = (x - y).pow(3) * (x + Polynomial(1L)) * y.pow(2);
  const Polynomial sf = squarefree_part_in(p, "x");
  // y^2 factor is independent of x and dropped; repeated factor reduced
  CHECK(sf == ((x - y) * (x + Polynomial(1L))).monic());
}

TEST_CASE("full squarefree part keeps factors of every variable") {
  const Polynomial x = Polynomial::variable("x");
  const Polynomial y = Polynomial::variable("y");
  const Polynomial p = (x + y).pow(2) * y.pow(3);
  CHECK(squarefree_full(p) == ((x + y) * y).monic());
}

TEST_CASE("clear denominators yields primitive integer coefficients") {
  const Polynomial x = Polynomial::variable("x");
  const Polynomial p = Polynomial(Rational(3, 4)) * x + Polynomial(Rational(9, 2));
  const Polynomial q = clear_denominators(p);
  CHECK(q == Polynomial(1L) * x + Polynomial(6L));
}

TEST_CASE("pseudo remainder degree contract") {
  const Polynomial x = Polynomial::variable("x");
  const Polynomial y = Polynomial::variable("y");
  const Polynomial a = y * x.pow(3) + x + Polynomial(1L);
  const Polynomial b = (y + Polynomial(1L)) * x.pow(2) + Polynomial(1L);
  const Polynomial r = pseudo_remainder(a, b, "x");
  CHECK(r.degree("x") < 2);
  CHECK_THROWS_AS(pseudo_remainder(a, Polynomial(2L), "x"), scar::Error);
}
