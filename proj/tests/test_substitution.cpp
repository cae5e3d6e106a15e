#include <doctest.h>

#include <random>

#include "scar/complex_poly.hpp"
#include "scar/consistency.hpp"

using namespace scar::algebra;

namespace {

ComplexRationalFunction circle_binding() {
  const Polynomial q = Polynomial::variable("q");
  const Polynomial one(Rational(1));
  return {ComplexPoly(one - q * q, Polynomial(Rational(2)) * q), q * q + one};
}

}  // namespace

TEST_CASE("substituting the circle parameterization into x^2") {
  const ComplexPoly p = ComplexPoly::variable("x").pow(2);
  std::map<std::string, ComplexRationalFunction> bindings{{"x", circle_binding()}};
  const auto result = substitute(p, bindings);

  const Polynomial q = Polynomial::variable("q");
  const Polynomial one(Rational(1));
  const Polynomial expected_re = (one - q * q).pow(2) - Polynomial(Rational(4)) * q * q;
  const Polynomial expected_im = Polynomial(Rational(4)) * q * (one - q * q);
  CHECK(result.numerator.re == expected_re);
  CHECK(result.numerator.im == expected_im);
  CHECK(result.denominator == (q * q + one).pow(2));
}

TEST_CASE("identity substitution s = alpha + beta i") {
  const ComplexPoly s = ComplexPoly::variable("s");
  std::map<std::string, ComplexRationalFunction> bindings;
  bindings["s"] = ComplexRationalFunction::polynomial(
      ComplexPoly(Polynomial::variable("alpha"), Polynomial::variable("beta")));
  const auto result = substitute(s, bindings);
  CHECK(result.numerator.re == Polynomial::variable("alpha"));
  CHECK(result.numerator.im == Polynomial::variable("beta"));
  CHECK(result.denominator == Polynomial(Rational(1)));
}

TEST_CASE("unbound variable is an error") {
  const ComplexPoly p = ComplexPoly::variable("x") + ComplexPoly::variable("y");
  std::map<std::string, ComplexRationalFunction> bindings{{"x", circle_binding()}};
  CHECK_THROWS_WITH_AS(substitute(p, bindings), "unknown variable: y", scar::Error);
}

TEST_CASE("characteristic substitution agrees with direct evaluation at random points") {
  // substituted numerator == Pi(s, dt, x(q)) * (1+q^2)^3 at 20 random rational points
  const auto lambda = rationalize_complex({-8.312, -8.569}, 1000000);
  const ComplexPoly pi = scar::pipeline::ConsistentFamily::symbolic_characteristic(lambda);

  std::map<std::string, ComplexRationalFunction> bindings;
  bindings["s"] = ComplexRationalFunction::polynomial(
      ComplexPoly(Polynomial::variable("alpha"), Polynomial::variable("beta")));
  bindings["dt"] = ComplexRationalFunction::polynomial(ComplexPoly::variable("dt"));
  bindings["x"] = circle_binding();
  const auto sub = substitute(pi, bindings);

  std::mt19937 gen(3);
  std::uniform_int_distribution<int> num(-8, 8);
  std::uniform_int_distribution<int> den(1, 9);
  for (int trial = 0; trial < 20; ++trial) {
    const Rational a = Rational(num(gen)) / den(gen);
    const Rational b = Rational(num(gen)) / den(gen);
    const Rational t = Rational(std::abs(num(gen)) + 1) / den(gen);
    const Rational qv = Rational(num(gen)) / den(gen);
    const std::map<std::string, Rational> pt{{"alpha", a}, {"beta", b}, {"dt", t}, {"q", qv}};

    // direct complex evaluation of Pi at s = a+bi, x = circle(qv)
    const Rational q2p1 = qv * qv + 1;
    const ComplexRational s{a, b};
    const ComplexRational x{Rational((1 - qv * qv) / q2p1), Rational(2 * qv / q2p1)};
    const ComplexRational lt{Rational(lambda.re * t), Rational(lambda.im * t)};
    const ComplexRational a1 = ComplexRational{s.re - Rational(3, 2), s.im} * lt;
    const ComplexRational a2 =
        ComplexRational{Rational(5, 2) - 2 * s.re, -2 * s.im} * lt;
    const ComplexRational a3 = s * lt;
    const ComplexRational x2 = x * x;
    const ComplexRational direct =
        a1 + a2 * x + a3 * x2 + x2 - x2 * x;

    const Rational den_val = (q2p1 * q2p1 * q2p1);
    const Rational sub_re = sub.numerator.re.evaluate(pt);
    const Rational sub_im = sub.numerator.im.evaluate(pt);
    CHECK(sub.denominator.evaluate(pt) == den_val);
    CHECK(sub_re == Rational(direct.re * den_val));
    CHECK(sub_im == Rational(direct.im * den_val));
  }
}
