#include "scar/real_solve.hpp"

#include <algorithm>

#include "scar/poly_gcd.hpp"

namespace scar::algebra {

namespace {

std::vector<std::string> variable_union(const std::vector<Polynomial>& ps) {
  std::vector<std::string> vars;
  for (const auto& p : ps)
    for (const auto& v : p.variables())
      if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
  std::sort(vars.begin(), vars.end());
  return vars;
}

}  // namespace

std::vector<ComponentSystem> decompose_zero_dimensional(const std::vector<Polynomial>& generators,
                                                        const EliminationBudget& budget) {
  std::vector<Polynomial> gens;
  for (const auto& g : generators)
    if (!g.is_zero()) gens.push_back(g);
  if (gens.empty()) throw Error("decompose: zero ideal");
  const auto vars = variable_union(gens);
  if (vars.size() > 2) throw Error("decompose: more than two variables");

  std::vector<ComponentSystem> components;

  Polynomial g = poly_gcd(gens);
  const bool has_curve = !g.is_constant();
  if (has_curve)
    components.push_back({{squarefree_full(g)}, vars.size() == 2 ? 1 : 0});

  // residual system: cofactors by the gcd; its generators are coprime, so
  // the residual variety is finite (or empty when a cofactor is a unit)
  std::vector<Polynomial> residual;
  bool residual_empty = false;
  bool any_nonconstant = false;
  for (const auto& f : gens) {
    Polynomial h = has_curve ? f.divide_exact(g) : f;
    if (h.is_constant()) {
      if (h.constant_value() != 0) residual_empty = true;
      continue;
    }
    any_nonconstant = true;
    residual.push_back(h);
  }
  if (!residual_empty && any_nonconstant) {
    ComponentSystem finite{residual, 0};
    // dimension check by Groebner leading-term analysis
    const auto rvars = variable_union(residual);
    try {
      const auto basis = groebner_basis(residual, rvars, budget);
      bool unit = false;
      for (const auto& b : basis)
        if (b.is_constant() && !b.is_zero()) unit = true;
      if (unit) return components;  // residual variety empty
      if (!is_zero_dimensional(basis, rvars, rvars)) {
        // single nonconstant generator: a curve, not a finite set
        finite.dimension = static_cast<int>(rvars.size()) - 1;
      }
      finite.generators = basis;
    } catch (const BudgetExceeded&) {
      throw BudgetExceeded("decomposition budget exceeded", residual);
    }
    components.push_back(std::move(finite));
  }
  if (components.empty()) throw Error("decompose: empty decomposition");
  return components;
}

std::vector<RealPoint> real_solve(const ComponentSystem& component, const Rational& width,
                                  const EliminationBudget& budget) {
  if (component.dimension != 0) throw Error("real_solve: component is not zero-dimensional");
  const auto& gens = component.generators;
  if (gens.empty()) throw Error("real_solve: empty component");
  const auto vars = variable_union(gens);
  if (vars.empty()) return {};  // constants only: no points

  // univariate case: roots of the gcd of the generators
  if (vars.size() == 1) {
    Polynomial g = poly_gcd(gens);
    std::vector<RealPoint> out;
    for (const auto& r : real_roots_univariate(g, RootDomain::all(), width)) {
      RealPoint pt;
      pt.coordinates[vars[0]] = r;
      out.push_back(std::move(pt));
    }
    return out;
  }

  // eliminant in each variable via a lexicographic basis that ranks the
  // other variable highest
  std::vector<Polynomial> u(2);
  for (size_t i = 0; i < 2; ++i) {
    const std::string& keep = vars[i];
    const std::string& drop = vars[1 - i];
    const auto elim = groebner_elimination(gens, {drop}, budget);
    Polynomial best;
    for (const auto& e : elim)
      if (!e.is_zero() && (best.is_zero() || e.degree(keep) < best.degree(keep))) best = e;
    if (best.is_zero()) throw Error("real_solve: component is not zero-dimensional");
    u[i] = best;
  }

  const Rational iso_width = std::min(width, Rational(1, 1000000000000L)) / 2;
  const auto rx = real_roots_univariate(u[0], RootDomain::all(), iso_width);
  const auto ry = real_roots_univariate(u[1], RootDomain::all(), iso_width);

  std::vector<RealPoint> out;
  for (const auto& ix : rx) {
    for (const auto& iy : ry) {
      std::map<std::string, Interval> box{{vars[0], ix}, {vars[1], iy}};
      bool excluded = false;
      for (const auto& f : gens)
        if (!evaluate_on_box(f, box).contains_zero()) {
          excluded = true;
          break;
        }
      if (excluded) continue;
      RealPoint pt;
      pt.coordinates = std::move(box);
      out.push_back(std::move(pt));
    }
  }
  return out;
}

}  // namespace scar::algebra
