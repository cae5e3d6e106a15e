#include <doctest.h>

#include "scar/rational.hpp"

using namespace scar::algebra;

TEST_CASE("rational from double is exact") {
  CHECK(rational_from_double(0.5) == Rational(1, 2));
  CHECK(rational_from_double(-0.25) == Rational(-1, 4));
  CHECK(to_double(rational_from_double(0.1)) == 0.1);
}

TEST_CASE("rationalize respects the denominator bound") {
  const Rational q = rationalize(-8.312, 1000000);
  CHECK(q == Rational(-1039, 125));
  const Rational pi_approx = rationalize(3.14159265358979, 1000000);
  CHECK(pi_approx.get_den() <= 1000000);
  CHECK(std::abs(to_double(pi_approx) - 3.14159265358979) < 1e-11);
  // small bound forces the classic convergents
  CHECK(rationalize(3.14159265358979, 10) == Rational(22, 7));
}

TEST_CASE("rational string parsing") {
  CHECK(rational_from_string("3/4") == Rational(3, 4));
  CHECK(rational_from_string("-8.312") == Rational(-1039, 125));
  CHECK(rational_from_string("17") == Rational(17));
  CHECK(to_string(Rational(-3, 7)) == "-3/7");
  CHECK(to_string(Rational(5)) == "5");
  CHECK_THROWS_AS(rational_from_string("x"), scar::Error);
  CHECK_THROWS_AS(rational_from_string(""), scar::Error);
}

TEST_CASE("complex rationalization") {
  const auto z = rationalize_complex({-8.312, -8.569}, 1000000);
  CHECK(z.re == Rational(-1039, 125));
  CHECK(z.im == Rational(-8569, 1000));
}
