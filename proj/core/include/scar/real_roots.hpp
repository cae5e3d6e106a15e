#pragma once

#include <optional>
#include <vector>

#include "scar/interval.hpp"
#include "scar/polynomial.hpp"

namespace scar::algebra {

/// Open search domain; unset endpoints mean unbounded.
struct RootDomain {
  std::optional<Rational> lo;
  std::optional<Rational> hi;

  static RootDomain all() { return {}; }
  static RootDomain positive() { return {Rational(0), std::nullopt}; }
};

/// All real roots of a univariate polynomial inside an open domain,
/// sorted ascending. Each root is returned as an exact-arithmetic
/// interval of width <= width that is certified by Sturm counting to
/// contain exactly one root of the squarefree part (so every root of p,
/// of any multiplicity, is located and none is missed).
std::vector<Interval> real_roots_univariate(const Polynomial& p, const RootDomain& domain,
                                            const Rational& width = Rational(1, 10000000000L));

/// Number of distinct real roots of p in the half-open interval (a, b].
int sturm_count(const Polynomial& p, const std::string& var, const Rational& a, const Rational& b);

}  // namespace scar::algebra
