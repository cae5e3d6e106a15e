#include "scar/groebner.hpp"

#include <algorithm>
#include <chrono>
#include <deque>

namespace scar::algebra {

namespace {

using Clock = std::chrono::steady_clock;

// Internal term representation over a fixed variable list ordered by
// priority (index 0 = highest). Terms kept sorted descending in lex.
struct OrderedPoly {
  std::vector<std::pair<Monomial, Rational>> terms;  // descending

  bool zero() const { return terms.empty(); }
  const Monomial& lead_mono() const { return terms.front().first; }
  const Rational& lead_coef() const { return terms.front().second; }
};

bool lex_less(const Monomial& a, const Monomial& b) { return a < b; }

std::vector<std::string> full_variable_list(const std::vector<Polynomial>& gens,
                                            const std::vector<std::string>& priority) {
  std::vector<std::string> rest;
  for (const auto& g : gens)
    for (const auto& v : g.variables())
      if (std::find(priority.begin(), priority.end(), v) == priority.end() &&
          std::find(rest.begin(), rest.end(), v) == rest.end())
        rest.push_back(v);
  std::sort(rest.begin(), rest.end());
  std::vector<std::string> vars = priority;
  vars.insert(vars.end(), rest.begin(), rest.end());
  return vars;
}

OrderedPoly to_ordered(const Polynomial& p, const std::vector<std::string>& vars) {
  OrderedPoly out;
  const auto& pv = p.variables();
  std::vector<size_t> slot(pv.size());
  for (size_t i = 0; i < pv.size(); ++i) {
    const auto it = std::find(vars.begin(), vars.end(), pv[i]);
    if (it == vars.end()) throw Error("groebner: variable missing from order");
    slot[i] = static_cast<size_t>(it - vars.begin());
  }
  for (const auto& [m, c] : p.terms()) {
    Monomial mm(vars.size(), 0);
    for (size_t i = 0; i < pv.size(); ++i) mm[slot[i]] = m[i];
    out.terms.emplace_back(std::move(mm), c);
  }
  std::sort(out.terms.begin(), out.terms.end(),
            [](const auto& x, const auto& y) { return lex_less(y.first, x.first); });
  return out;
}

Polynomial from_ordered(const OrderedPoly& p, const std::vector<std::string>& vars) {
  Polynomial out;
  for (const auto& [m, c] : p.terms) {
    std::vector<std::string> tv;
    std::vector<unsigned> te;
    for (size_t i = 0; i < vars.size(); ++i)
      if (m[i] > 0) {
        tv.push_back(vars[i]);
        te.push_back(m[i]);
      }
    out += Polynomial::term(c, tv, te);
  }
  return out;
}

bool divides(const Monomial& a, const Monomial& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  Monomial out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

OrderedPoly add_scaled(const OrderedPoly& a, const OrderedPoly& b, const Monomial& shift,
                       const Rational& scale) {
  // a + scale * x^shift * b, merging sorted term lists
  OrderedPoly out;
  out.terms.reserve(a.terms.size() + b.terms.size());
  size_t i = 0, j = 0;
  const size_t n = shift.size();
  Monomial bm(n);
  while (i < a.terms.size() || j < b.terms.size()) {
    bool take_a;
    if (j >= b.terms.size())
      take_a = true;
    else {
      for (size_t k = 0; k < n; ++k) bm[k] = b.terms[j].first[k] + shift[k];
      if (i >= a.terms.size())
        take_a = false;
      else if (a.terms[i].first == bm) {
        Rational c = a.terms[i].second + scale * b.terms[j].second;
        if (c != 0) out.terms.emplace_back(a.terms[i].first, std::move(c));
        ++i;
        ++j;
        continue;
      } else
        take_a = lex_less(bm, a.terms[i].first);
    }
    if (take_a) {
      out.terms.push_back(a.terms[i]);
      ++i;
    } else {
      out.terms.emplace_back(bm, scale * b.terms[j].second);
      ++j;
    }
  }
  return out;
}

// Full reduction by the basis; result has no term divisible by any lead.
OrderedPoly reduce(OrderedPoly p, const std::vector<OrderedPoly>& basis, size_t max_terms) {
  OrderedPoly out;
  while (!p.zero()) {
    if (p.terms.size() + out.terms.size() > max_terms)
      throw Error("elimination budget exceeded");
    bool reduced = false;
    for (const auto& g : basis) {
      if (g.zero()) continue;
      if (divides(g.lead_mono(), p.lead_mono())) {
        Monomial shift(p.lead_mono().size());
        for (size_t k = 0; k < shift.size(); ++k)
          shift[k] = p.lead_mono()[k] - g.lead_mono()[k];
        const Rational scale = -p.lead_coef() / g.lead_coef();
        p = add_scaled(p, g, shift, scale);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      out.terms.push_back(p.terms.front());
      p.terms.erase(p.terms.begin());
    }
  }
  return out;
}

}  // namespace

std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& generators,
                                       const std::vector<std::string>& priority,
                                       const EliminationBudget& budget) {
  if (generators.empty()) throw Error("groebner: no generators");
  const auto vars = full_variable_list(generators, priority);
  const auto t0 = Clock::now();
  const auto out_of_time = [&] {
    return std::chrono::duration<double>(Clock::now() - t0).count() > budget.seconds;
  };

  std::vector<OrderedPoly> basis;
  for (const auto& g : generators) {
    if (g.is_zero()) continue;
    basis.push_back(to_ordered(g, vars));
  }
  if (basis.empty()) throw Error("groebner: all generators are zero");

  const auto partial = [&] {
    std::vector<Polynomial> ps;
    for (const auto& b : basis) ps.push_back(from_ordered(b, vars));
    return ps;
  };

  std::deque<std::pair<size_t, size_t>> pairs;
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);

  while (!pairs.empty()) {
    if (out_of_time() || basis.size() > budget.max_basis)
      throw BudgetExceeded("elimination budget exceeded", partial());
    auto [i, j] = pairs.front();
    pairs.pop_front();
    const auto& f = basis[i];
    const auto& g = basis[j];
    if (coprime(f.lead_mono(), g.lead_mono())) continue;  // Buchberger's first criterion
    const Monomial l = mono_lcm(f.lead_mono(), g.lead_mono());
    Monomial sf(l.size()), sg(l.size());
    for (size_t k = 0; k < l.size(); ++k) {
      sf[k] = l[k] - f.lead_mono()[k];
      sg[k] = l[k] - g.lead_mono()[k];
    }
    // s-poly = x^sf f / lc(f) - x^sg g / lc(g)
    OrderedPoly spoly = add_scaled(OrderedPoly{}, f, sf, Rational(1) / f.lead_coef());
    spoly = add_scaled(spoly, g, sg, -Rational(1) / g.lead_coef());
    OrderedPoly r;
    try {
      r = reduce(std::move(spoly), basis, budget.max_poly_terms);
    } catch (const Error&) {
      throw BudgetExceeded("elimination budget exceeded", partial());
    }
    if (r.zero()) continue;
    for (size_t k = 0; k < basis.size(); ++k) pairs.emplace_back(k, basis.size());
    basis.push_back(std::move(r));
  }

  // inter-reduce: reduced Groebner basis, monic, deterministic order
  std::vector<OrderedPoly> reduced_basis;
  for (size_t i = 0; i < basis.size(); ++i) {
    std::vector<OrderedPoly> others;
    for (size_t j = 0; j < basis.size(); ++j)
      if (j != i) others.push_back(basis[j]);
    bool lead_covered = false;
    for (const auto& o : others)
      if (!o.zero() && divides(o.lead_mono(), basis[i].lead_mono())) {
        lead_covered = true;
        break;
      }
    if (lead_covered) continue;
    OrderedPoly r = reduce(basis[i], others, budget.max_poly_terms);
    if (r.zero()) continue;
    const Rational lc = r.lead_coef();
    for (auto& [m, c] : r.terms) c /= lc;
    reduced_basis.push_back(std::move(r));
  }
  std::sort(reduced_basis.begin(), reduced_basis.end(),
            [](const OrderedPoly& a, const OrderedPoly& b) {
              return lex_less(a.lead_mono(), b.lead_mono());
            });
  std::vector<Polynomial> out;
  for (const auto& b : reduced_basis) out.push_back(from_ordered(b, vars));
  return out;
}

std::vector<Polynomial> groebner_elimination(const std::vector<Polynomial>& generators,
                                             const std::set<std::string>& eliminate,
                                             const EliminationBudget& budget) {
  if (generators.empty()) throw Error("groebner_elimination: no generators");
  std::vector<std::string> present;
  for (const auto& g : generators)
    for (const auto& v : g.variables())
      if (std::find(present.begin(), present.end(), v) == present.end()) present.push_back(v);
  for (const auto& v : eliminate)
    if (std::find(present.begin(), present.end(), v) == present.end())
      throw Error("groebner_elimination: variable '" + v + "' not present in generators");

  std::vector<std::string> priority(eliminate.begin(), eliminate.end());
  const auto basis = groebner_basis(generators, priority, budget);
  std::vector<Polynomial> out;
  for (const auto& b : basis) {
    bool free_of_eliminated = true;
    for (const auto& v : eliminate)
      if (b.depends_on(v)) {
        free_of_eliminated = false;
        break;
      }
    if (free_of_eliminated) out.push_back(b);
  }
  return out;
}

Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& basis,
                       const std::vector<std::string>& priority) {
  if (basis.empty()) return p;
  std::vector<Polynomial> all = basis;
  all.push_back(p);
  const auto vars = full_variable_list(all, priority);
  std::vector<OrderedPoly> ob;
  for (const auto& b : basis)
    if (!b.is_zero()) ob.push_back(to_ordered(b, vars));
  EliminationBudget budget;
  OrderedPoly r = reduce(to_ordered(p, vars), ob, budget.max_poly_terms);
  return from_ordered(r, vars);
}

bool is_zero_dimensional(const std::vector<Polynomial>& basis,
                         const std::vector<std::string>& vars,
                         const std::vector<std::string>& priority) {
  if (basis.empty()) return false;
  const auto full = full_variable_list(basis, priority);
  for (const auto& v : vars) {
    const auto slot = std::find(full.begin(), full.end(), v);
    if (slot == full.end()) return false;
    const size_t idx = static_cast<size_t>(slot - full.begin());
    bool pure_power_found = false;
    for (const auto& b : basis) {
      if (b.is_zero()) continue;
      const auto ob = to_ordered(b, full);
      const Monomial& lm = ob.lead_mono();
      bool pure = lm[idx] > 0;
      for (size_t k = 0; pure && k < lm.size(); ++k)
        if (k != idx && lm[k] > 0) pure = false;
      if (b.is_constant()) pure = true;  // unit ideal: empty variety
      if (pure) {
        pure_power_found = true;
        break;
      }
    }
    if (!pure_power_found) return false;
  }
  return true;
}

}  // namespace scar::algebra
