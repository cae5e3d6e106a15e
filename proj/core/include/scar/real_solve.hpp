#pragma once

#include <vector>

#include "scar/groebner.hpp"
#include "scar/interval.hpp"
#include "scar/polynomial.hpp"
#include "scar/real_roots.hpp"

namespace scar::algebra {

/// One piece of a variety decomposition: a generating set plus the
/// dimension of its solution set (0 = finitely many points).
struct ComponentSystem {
  std::vector<Polynomial> generators;
  int dimension = 0;
};

/// Splits a system in at most two variables into a curve part (the gcd of
/// the generators) and a finite residual part. The union of the component
/// varieties equals the input variety.
std::vector<ComponentSystem> decompose_zero_dimensional(const std::vector<Polynomial>& generators,
                                                        const EliminationBudget& budget = {});

/// All real solutions of a zero-dimensional component, each coordinate a
/// certified interval of width <= width. Candidate boxes come from
/// per-variable eliminants (so no solution can be missed); boxes on which
/// some generator is bounded away from zero are excluded.
std::vector<RealPoint> real_solve(const ComponentSystem& component,
                                  const Rational& width = Rational(1, 10000000000L),
                                  const EliminationBudget& budget = {});

}  // namespace scar::algebra
