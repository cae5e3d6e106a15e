#pragma once

#include <map>
#include <string>

#include "scar/polynomial.hpp"

namespace scar::algebra {

/// Polynomial with complex rational coefficients, stored as real and
/// imaginary parts over a shared real variable set. The imaginary unit is
/// never a variable.
struct ComplexPoly {
  Polynomial re;
  Polynomial im;

  ComplexPoly() = default;
  ComplexPoly(Polynomial r, Polynomial i) : re(std::move(r)), im(std::move(i)) {}
  explicit ComplexPoly(const Polynomial& r) : re(r) {}
  explicit ComplexPoly(const ComplexRational& c)
      : re(Polynomial(c.re)), im(Polynomial(c.im)) {}

  static ComplexPoly variable(const std::string& name) {
    return ComplexPoly(Polynomial::variable(name));
  }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }

  ComplexPoly operator+(const ComplexPoly& o) const { return {re + o.re, im + o.im}; }
  ComplexPoly operator-(const ComplexPoly& o) const { return {re - o.re, im - o.im}; }
  ComplexPoly operator*(const ComplexPoly& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  ComplexPoly operator*(const ComplexRational& c) const { return *this * ComplexPoly(c); }
  ComplexPoly& operator+=(const ComplexPoly& o) { return *this = *this + o; }
  ComplexPoly& operator-=(const ComplexPoly& o) { return *this = *this - o; }
  ComplexPoly pow(unsigned e) const;

  bool operator==(const ComplexPoly& o) const { return re == o.re && im == o.im; }
};

/// Complex rational function with a real denominator, the binding value
/// accepted by substitute().
struct ComplexRationalFunction {
  ComplexPoly numerator;
  Polynomial denominator{Rational(1)};

  static ComplexRationalFunction polynomial(ComplexPoly p) {
    return {std::move(p), Polynomial(Rational(1))};
  }
};

struct SubstitutionResult {
  ComplexPoly numerator;    // Re/Im of the substituted expression
  Polynomial denominator;   // cleared common denominator (real)
};

/// Substitutes rational-function bindings for every variable of p and
/// clears the common denominator exactly. Each variable of p must have a
/// binding; bindings for absent variables are ignored.
SubstitutionResult substitute(const ComplexPoly& p,
                              const std::map<std::string, ComplexRationalFunction>& bindings);

}  // namespace scar::algebra
