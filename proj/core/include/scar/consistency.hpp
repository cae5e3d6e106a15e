#pragma once

#include <array>
#include <complex>

#include "scar/complex_poly.hpp"

namespace scar::pipeline {

using Complex = std::complex<double>;

/// The one-complex-parameter family of AR(3) coefficient functions that
/// satisfies both order-2 consistency identities for a given decay rate:
///   a1 = (s - 3/2) lambda dt,  a2 = -(2s - 5/2) lambda dt,  a3 = s lambda dt.
class ConsistentFamily {
 public:
  explicit ConsistentFamily(Complex lambda);

  Complex lambda() const { return lambda_; }

  /// Coefficients at a concrete family member.
  std::array<Complex, 3> coefficients(Complex s, double dt) const;

  /// Exact-coefficient family over formal variables "s" and "dt", using a
  /// rationalization of lambda (denominators <= max_den).
  static std::array<algebra::ComplexPoly, 3> symbolic_coefficients(
      const algebra::ComplexRational& lambda);

  /// Characteristic polynomial Pi(s, dt, x) of the family member, over
  /// formal variables "s", "dt", "x".
  static algebra::ComplexPoly symbolic_characteristic(const algebra::ComplexRational& lambda);

 private:
  Complex lambda_;
};

}  // namespace scar::pipeline
