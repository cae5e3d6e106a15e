#include <doctest.h>

#include "scar/real_roots.hpp"

using namespace scar::algebra;

TEST_CASE("sqrt two on the positive axis") {
  const Polynomial x = Polynomial::variable("x");
  const Polynomial p = x * x - Polynomial(2L);
  const auto roots = real_roots_univariate(p, RootDomain::positive(), Rational(1, 1000000000000L));
  REQUIRE(roots.size() == 1);
  CHECK(roots[0].width() <= Rational(1, 1000000000000L));
  CHECK(std::abs(to_double(roots[0].mid()) - 1.4142135623730951) < 1e-11);
  // certification: the interval evaluation of p contains zero
  CHECK(evaluate_on_box(p, {{"x", roots[0]}}).contains_zero());
}

TEST_CASE("cubic with roots on both sides of the domain") {
  const Polynomial x = Polynomial::variable("x");
  const Polynomial p = (x - Polynomial(1L)) * (x - Polynomial(3L)) * (x + Polynomial(5L));
  const auto roots = real_roots_univariate(p, RootDomain::positive());
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].contains(Rational(1)));
  CHECK(roots[1].contains(Rational(3)));
  const auto all = real_roots_univariate(p, RootDomain::all());
  CHECK(all.size() == 3);
  CHECK(all[0].contains(Rational(-5)));
}

TEST_CASE("no real roots") {
  const Polynomial x = Polynomial::variable("x");
  CHECK(real_roots_univariate(x * x + Polynomial(1L), RootDomain::all()).empty());
}

TEST_CASE("identically zero polynomial is degenerate") {
  CHECK_THROWS_WITH_AS(real_roots_univariate(Polynomial(), RootDomain::all()),
                       "degenerate polynomial", scar::Error);
}

TEST_CASE("multiple roots located once") {
  const Polynomial x = Polynomial::variable("x");
  const Polynomial p = (x - Polynomial(2L)).pow(3) * (x + Polynomial(1L)).pow(2);
  const auto roots = real_roots_univariate(p, RootDomain::all());
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].contains(Rational(-1)));
  CHECK(roots[1].contains(Rational(2)));
  for (const auto& r : roots) CHECK(evaluate_on_box(p, {{"x", r}}).contains_zero());
}

TEST_CASE("no roots are missed: Sturm exclusion over the whole line") {
  const Polynomial x = Polynomial::variable("x");
  // degree 6, four real roots at -3, -1/2, 2, 7 plus a complex pair
  const Polynomial p = (x + Polynomial(3L)) * (Polynomial(2L) * x + Polynomial(1L)) *
                       (x - Polynomial(2L)) * (x - Polynomial(7L)) *
                       (x * x + x + Polynomial(1L));
  const auto roots = real_roots_univariate(p, RootDomain::all());
  REQUIRE(roots.size() == 4);
  // the Sturm count over a bracketing interval equals the number found,
  // certifying the exclusion of further roots
  CHECK(sturm_count(p, "x", Rational(-1000), Rational(1000)) == 4);
  // sign changes across each certified interval endpoint (simple roots)
  for (const auto& r : roots) {
    if (r.width() == 0) continue;
    const Rational lo_val = p.evaluate({{"x", r.lo}});
    const Rational hi_val = p.evaluate({{"x", r.hi}});
    CHECK(((lo_val < 0 && hi_val > 0) || (lo_val > 0 && hi_val < 0)));
  }
}

TEST_CASE("open domain edges excluded") {
  const Polynomial x = Polynomial::variable("x");
  const Polynomial p = x * (x - Polynomial(1L));
  // (0, 1) open on both sides: neither root belongs
  RootDomain domain;
  domain.lo = Rational(0);
  domain.hi = Rational(1);
  CHECK(real_roots_univariate(p, domain).empty());
  CHECK(real_roots_univariate(p, RootDomain::positive()).size() == 1);
}
