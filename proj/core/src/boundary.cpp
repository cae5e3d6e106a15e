#include "scar/boundary.hpp"

#include "scar/poly_gcd.hpp"
#include "scar/resultant.hpp"

namespace scar::pipeline {

using algebra::ComplexPoly;
using algebra::ComplexRational;
using algebra::ComplexRationalFunction;
using algebra::Polynomial;
using algebra::Rational;

Polynomial boundary_surface(const ComplexRational& lambda) {
  if (!(lambda.re < 0)) throw Error("unstable continuous dynamics");

  const ComplexPoly pi = ConsistentFamily::symbolic_characteristic(lambda);

  // s = alpha + beta i; x = (1-q^2)/(1+q^2) + (2q/(1+q^2)) i; dt stays
  const Polynomial alpha = Polynomial::variable("alpha");
  const Polynomial beta = Polynomial::variable("beta");
  const Polynomial q = Polynomial::variable("q");
  const Polynomial one(Rational(1));
  const Polynomial q2p1 = q * q + one;

  std::map<std::string, ComplexRationalFunction> bindings;
  bindings["s"] = ComplexRationalFunction::polynomial(ComplexPoly(alpha, beta));
  bindings["dt"] = ComplexRationalFunction::polynomial(ComplexPoly::variable("dt"));
  bindings["x"] = ComplexRationalFunction{ComplexPoly(one - q * q, Polynomial(Rational(2)) * q), q2p1};

  const auto sub = substitute(pi, bindings);
  const ComplexPoly& g = sub.numerator;
  if (g.re.degree("q") <= 0 || g.im.degree("q") <= 0)
    throw Error("boundary_surface: degenerate circle parameterization");

  // integer-normalized inputs only rescale the resultant, which is
  // normalized below anyway, and keep the Bareiss sweep in Z
  const Polynomial res = algebra::resultant(algebra::clear_denominators(g.re),
                                            algebra::clear_denominators(g.im), "q");
  if (res.is_zero()) throw Error("boundary_surface: resultant vanished identically");

  // keep the squarefree product of the dt-dependent factors
  Polynomial r = algebra::squarefree_part_in(res, "dt");
  if (r.is_constant()) throw Error("boundary_surface: surface degenerates to a constant");
  return r.monic();
}

Polynomial boundary_surface(Complex lambda) {
  return boundary_surface(algebra::rationalize_complex(lambda, 1000000));
}

}  // namespace scar::pipeline
