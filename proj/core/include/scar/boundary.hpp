#pragma once

#include "scar/consistency.hpp"
#include "scar/polynomial.hpp"

namespace scar::pipeline {

/// Stability boundary surface of the consistent AR(3) family: an exact
/// polynomial r(alpha, beta, dt) that vanishes whenever the family member
/// at s = alpha + beta i has a characteristic root on the unit circle
/// away from x = 1. Built by the rational circle parameterization and a
/// Sylvester resultant in the circle parameter, then reduced to the
/// squarefree dt-dependent part.
algebra::Polynomial boundary_surface(const algebra::ComplexRational& lambda);

/// Convenience overload: rationalizes lambda (denominator <= 10^6) first.
algebra::Polynomial boundary_surface(Complex lambda);

}  // namespace scar::pipeline
