#pragma once

#include <gmpxx.h>

#include <complex>
#include <stdexcept>
#include <string>

namespace scar {

/// Library-wide error type. Message strings are part of the contract and
/// tested verbatim where callers dispatch on them.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

namespace algebra {

/// Arbitrary-precision rational scalar. GMP keeps the canonical form
/// (reduced fraction, positive denominator); every operation is exact.
using Rational = mpq_class;

/// Complex number with exact rational real/imaginary parts.
struct ComplexRational {
  Rational re{0};
  Rational im{0};

  ComplexRational() = default;
  ComplexRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  explicit ComplexRational(const Rational& r) : re(r), im(0) {}

  ComplexRational operator+(const ComplexRational& o) const { return {re + o.re, im + o.im}; }
  ComplexRational operator-(const ComplexRational& o) const { return {re - o.re, im - o.im}; }
  ComplexRational operator*(const ComplexRational& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  bool operator==(const ComplexRational& o) const { return re == o.re && im == o.im; }
};

/// Exact conversion: every finite double is a dyadic rational.
Rational rational_from_double(double x);

/// Best rational approximation with denominator <= max_den
/// (continued-fraction convergents/semiconvergents).
Rational rationalize(double x, unsigned long max_den);

/// Parses "num", "num/den", or a decimal literal such as "-8.312" exactly.
Rational rational_from_string(const std::string& text);

std::string to_string(const Rational& q);
double to_double(const Rational& q);

inline std::complex<double> to_complex(const ComplexRational& z) {
  return {to_double(z.re), to_double(z.im)};
}

/// Componentwise rationalization of a complex double, denominator <= max_den.
ComplexRational rationalize_complex(std::complex<double> z, unsigned long max_den);

}  // namespace algebra
}  // namespace scar
