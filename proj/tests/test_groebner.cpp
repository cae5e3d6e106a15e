#include <doctest.h>

#include "scar/groebner.hpp"

using namespace scar::algebra;

TEST_CASE("parabola implicitization") {
  const Polynomial x = Polynomial::variable("x");
  const Polynomial y = Polynomial::variable("y");
  const Polynomial t = Polynomial::variable("t");
  const auto basis = groebner_elimination({x - t, y - t * t}, {"t"});
  REQUIRE(basis.size() == 1);
  CHECK(basis.front() == (y - x * x).monic());
}

TEST_CASE("line implicitization") {
  const Polynomial x = Polynomial::variable("x");
  const Polynomial y = Polynomial::variable("y");
  const Polynomial t = Polynomial::variable("t");
  const auto basis = groebner_elimination({x - t, y - t}, {"t"});
  REQUIRE(basis.size() == 1);
  CHECK(basis.front() == (x - y).monic());
}

TEST_CASE("eliminated variable must be present") {
  const Polynomial x = Polynomial::variable("x");
  CHECK_THROWS_AS(groebner_elimination({x}, {"z"}), scar::Error);
  CHECK_THROWS_AS(groebner_elimination({}, {"x"}), scar::Error);
}

TEST_CASE("basis members reduce to zero against the ideal") {
  const Polynomial x = Polynomial::variable("x");
  const Polynomial y = Polynomial::variable("y");
  const Polynomial t = Polynomial::variable("t");
  const std::vector<Polynomial> gens{x - t, y - t * t};
  const auto full = groebner_basis(gens, {"t", "y", "x"});
  for (const auto& b : groebner_elimination(gens, {"t"}))
    CHECK(normal_form(b, full, {"t", "y", "x"}).is_zero());
  // and the generators themselves reduce to zero
  for (const auto& g : gens) CHECK(normal_form(g, full, {"t", "y", "x"}).is_zero());
}

TEST_CASE("normal form is the remainder") {
  const Polynomial x = Polynomial::variable("x");
  const Polynomial y = Polynomial::variable("y");
  const auto basis = groebner_basis({x * x - Polynomial(1L)}, {"x", "y"});
  const Polynomial p = x.pow(3) + y;
  CHECK(normal_form(p, basis, {"x", "y"}) == x + y);
}

TEST_CASE("budget exhaustion carries a partial basis") {
  const Polynomial x = Polynomial::variable("x");
  const Polynomial y = Polynomial::variable("y");
  const Polynomial z = Polynomial::variable("z");
  EliminationBudget budget;
  budget.seconds = 0.0;  // exhaust immediately
  try {
    groebner_basis({x * y - z, y * z - x, z * x - y}, {"x", "y", "z"}, budget);
    FAIL("expected BudgetExceeded");
  } catch (const BudgetExceeded& e) {
    CHECK(std::string(e.what()) == "elimination budget exceeded");
    CHECK(!e.partial.empty());
  }
}

TEST_CASE("zero dimensionality by leading terms") {
  const Polynomial x = Polynomial::variable("x");
  const Polynomial y = Polynomial::variable("y");
  const auto basis0 = groebner_basis({x * x - Polynomial(1L), y - x}, {"y", "x"});
  CHECK(is_zero_dimensional(basis0, {"x", "y"}, {"y", "x"}));
  const auto basis1 = groebner_basis({x * y}, {"y", "x"});
  CHECK(!is_zero_dimensional(basis1, {"x", "y"}, {"y", "x"}));
}
