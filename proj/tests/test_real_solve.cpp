#include <doctest.h>

#include <random>

#include "scar/real_solve.hpp"

using namespace scar::algebra;

TEST_CASE("circle-line style system") {
  const Polynomial x = Polynomial::variable("x");
  const Polynomial y = Polynomial::variable("y");
  const ComponentSystem comp{{x * x - Polynomial(2L), y - Polynomial(1L)}, 0};
  const auto points = real_solve(comp, Rational(1, 1000000000000L));
  REQUIRE(points.size() == 2);
  CHECK(std::abs(points[0].value("x") + 1.4142135623730951) < 1e-10);
  CHECK(std::abs(points[1].value("x") - 1.4142135623730951) < 1e-10);
  for (const auto& pt : points) {
    CHECK(std::abs(pt.value("y") - 1.0) < 1e-10);
    for (const auto& g : comp.generators)
      CHECK(evaluate_on_box(g, pt.coordinates).contains_zero());
  }
}

TEST_CASE("no real solutions") {
  const Polynomial x = Polynomial::variable("x");
  const Polynomial y = Polynomial::variable("y");
  const ComponentSystem comp{{x * x + Polynomial(1L), y}, 0};
  CHECK(real_solve(comp).empty());
}

TEST_CASE("decomposition splits a curve from a point") {
  const Polynomial x = Polynomial::variable("x");
  const Polynomial y = Polynomial::variable("y");
  const auto comps = decompose_zero_dimensional({x * y, x * x});
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].dimension == 1);
  CHECK(comps[0].generators.size() == 1);
  CHECK(comps[0].generators[0] == x);
  CHECK(comps[1].dimension == 0);
  const auto points = real_solve(comps[1]);
  REQUIRE(points.size() == 1);
  CHECK(std::abs(points[0].value("x")) < 1e-10);
  CHECK(std::abs(points[0].value("y")) < 1e-10);
}

TEST_CASE("pure zero-dimensional input") {
  const Polynomial x = Polynomial::variable("x");
  const Polynomial y = Polynomial::variable("y");
  const auto comps = decompose_zero_dimensional({x * x - Polynomial(1L), y});
  REQUIRE(comps.size() == 1);
  CHECK(comps[0].dimension == 0);
  const auto points = real_solve(comps[0]);
  REQUIRE(points.size() == 2);
  CHECK(std::abs(points[0].value("x") + 1.0) < 1e-10);
  CHECK(std::abs(points[1].value("x") - 1.0) < 1e-10);
  CHECK(std::abs(points[0].value("y")) < 1e-10);
}

TEST_CASE("union of component varieties equals the input variety") {
  const Polynomial x = Polynomial::variable("x");
  const Polynomial y = Polynomial::variable("y");
  const std::vector<Polynomial> gens{x * y, x * x};
  const auto comps = decompose_zero_dimensional(gens);

  std::mt19937 gen(31);
  std::uniform_int_distribution<int> num(-20, 20);
  std::uniform_int_distribution<int> den(1, 9);
  int checked = 0;
  for (int trial = 0; trial < 200 && checked < 50; ++trial) {
    const Rational xv = Rational(num(gen)) / den(gen);
    const Rational yv = Rational(num(gen)) / den(gen);
    const std::map<std::string, Rational> pt{{"x", xv}, {"y", yv}};
    const bool in_input = std::all_of(gens.begin(), gens.end(), [&](const Polynomial& g) {
      return g.evaluate(pt) == 0;
    });
    bool in_union = false;
    for (const auto& comp : comps) {
      const bool in_comp = std::all_of(comp.generators.begin(), comp.generators.end(),
                                       [&](const Polynomial& g) { return g.evaluate(pt) == 0; });
      if (in_comp) in_union = true;
    }
    CHECK(in_input == in_union);
    ++checked;
    // hit the variety frequently: points on the line x = 0
    if (trial % 2 == 0) {
      const std::map<std::string, Rational> on_line{{"x", Rational(0)}, {"y", yv}};
      bool union_has = false;
      for (const auto& comp : comps) {
        if (std::all_of(comp.generators.begin(), comp.generators.end(),
                        [&](const Polynomial& g) { return g.evaluate(on_line) == 0; }))
          union_has = true;
      }
      CHECK(union_has);
    }
  }
}

TEST_CASE("zero ideal and over-wide systems rejected") {
  CHECK_THROWS_AS(decompose_zero_dimensional({Polynomial()}), scar::Error);
  const Polynomial x = Polynomial::variable("x");
  const Polynomial y = Polynomial::variable("y");
  const Polynomial z = Polynomial::variable("z");
  CHECK_THROWS_AS(decompose_zero_dimensional({x + y + z}), scar::Error);
}
