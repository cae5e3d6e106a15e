#pragma once

#include "scar/polynomial.hpp"

namespace scar::algebra {

/// Sylvester resultant of f and g with respect to var. Both inputs must
/// have positive degree in var; the result does not involve var and
/// vanishes exactly on the projections of their common roots.
Polynomial resultant(const Polynomial& f, const Polynomial& g, const std::string& var);

/// Determinant of a square polynomial matrix by fraction-free (Bareiss)
/// elimination; all intermediate divisions are exact.
Polynomial determinant(std::vector<std::vector<Polynomial>> m);

}  // namespace scar::algebra
