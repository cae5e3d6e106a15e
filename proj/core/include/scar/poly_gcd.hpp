#pragma once

#include "scar/polynomial.hpp"

namespace scar::algebra {

/// Pseudo-remainder of a by b viewed as univariate in var:
/// lc(b)^(deg a - deg b + 1) * a = q*b + prem.
Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, const std::string& var);

/// Scales p by the lcm of its coefficient denominators (integer
/// coefficients afterwards).
Polynomial clear_denominators(const Polynomial& p);

/// Content of p viewed as univariate in var: gcd of its coefficient
/// polynomials (monic-normalized).
Polynomial content_in(const Polynomial& p, const std::string& var);
Polynomial primitive_part_in(const Polynomial& p, const std::string& var);

/// Multivariate gcd over the rationals, normalized so the leading
/// coefficient in the canonical storage order is 1. gcd(0,0) = 0.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);
Polynomial poly_gcd(const std::vector<Polynomial>& ps);

/// Product of the distinct irreducible factors of p that involve var,
/// i.e. p / gcd(p, dp/dvar). Factors independent of var are dropped.
Polynomial squarefree_part_in(const Polynomial& p, const std::string& var);

/// Product of all distinct irreducible factors of p (monic); constants
/// map to 1.
Polynomial squarefree_full(const Polynomial& p);

}  // namespace scar::algebra
