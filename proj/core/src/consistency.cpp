#include "scar/consistency.hpp"

namespace scar::pipeline {

using algebra::ComplexPoly;
using algebra::ComplexRational;
using algebra::Polynomial;
using algebra::Rational;

ConsistentFamily::ConsistentFamily(Complex lambda) : lambda_(lambda) {
  if (!(lambda.real() < 0)) throw Error("unstable continuous dynamics");
}

std::array<Complex, 3> ConsistentFamily::coefficients(Complex s, double dt) const {
  const Complex ld = lambda_ * dt;
  return {(s - 1.5) * ld, -(2.0 * s - 2.5) * ld, s * ld};
}

std::array<ComplexPoly, 3> ConsistentFamily::symbolic_coefficients(const ComplexRational& lambda) {
  const ComplexPoly s = ComplexPoly::variable("s");
  const ComplexPoly dt = ComplexPoly::variable("dt");
  const ComplexPoly lam(lambda);
  const ComplexPoly ld = lam * dt;
  const auto c = [](long num, long den) {
    return ComplexPoly(Polynomial(Rational(num, den)));
  };
  std::array<ComplexPoly, 3> a;
  a[0] = (s - c(3, 2)) * ld;
  a[1] = (c(0, 1) - (c(2, 1) * s - c(5, 2))) * ld;
  a[2] = s * ld;
  return a;
}

ComplexPoly ConsistentFamily::symbolic_characteristic(const ComplexRational& lambda) {
  const auto a = symbolic_coefficients(lambda);
  const ComplexPoly x = ComplexPoly::variable("x");
  // Pi = a1 + a2 x + a3 x^2 + x^2 - x^3
  return a[0] + a[1] * x + (a[2] + ComplexPoly(Polynomial(Rational(1)))) * x.pow(2) - x.pow(3);
}

}  // namespace scar::pipeline
