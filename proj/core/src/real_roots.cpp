#include "scar/real_roots.hpp"

#include <algorithm>

#include "scar/poly_gcd.hpp"

namespace scar::algebra {

namespace {

std::vector<Rational> dense_coeffs(const Polynomial& p, const std::string& var) {
  const auto cs = p.coefficients_in(var);
  std::vector<Rational> out(cs.size());
  for (size_t i = 0; i < cs.size(); ++i) out[i] = cs[i].constant_value();
  return out;
}

Rational eval_dense(const std::vector<Rational>& c, const Rational& x) {
  Rational acc(0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int sign_of(const Rational& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// Sturm chain of a squarefree dense polynomial.
std::vector<std::vector<Rational>> sturm_chain(std::vector<Rational> p0) {
  std::vector<std::vector<Rational>> chain;
  chain.push_back(p0);
  if (p0.size() <= 1) return chain;
  std::vector<Rational> p1(p0.size() - 1);
  for (size_t i = 1; i < p0.size(); ++i) p1[i - 1] = p0[i] * Rational(static_cast<long>(i));
  chain.push_back(p1);
  while (chain.back().size() > 1) {
    const auto& a = chain[chain.size() - 2];
    const auto& b = chain.back();
    // negative remainder of a by b
    std::vector<Rational> r = a;
    while (r.size() >= b.size()) {
      const Rational q = r.back() / b.back();
      const size_t shift = r.size() - b.size();
      for (size_t i = 0; i < b.size(); ++i) r[shift + i] -= q * b[i];
      while (!r.empty() && r.back() == 0) r.pop_back();
      if (r.empty()) break;
    }
    if (r.empty()) break;  // should not happen for squarefree input
    for (auto& c : r) c = -c;
    chain.push_back(std::move(r));
  }
  return chain;
}

int variations_at(const std::vector<std::vector<Rational>>& chain, const Rational& x) {
  int count = 0, prev = 0;
  for (const auto& p : chain) {
    const int s = sign_of(eval_dense(p, x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

}  // namespace

int sturm_count(const Polynomial& p, const std::string& var, const Rational& a, const Rational& b) {
  const Polynomial sf = squarefree_part_in(p, var);
  const auto chain = sturm_chain(dense_coeffs(sf, var));
  return variations_at(chain, a) - variations_at(chain, b);
}

std::vector<Interval> real_roots_univariate(const Polynomial& p, const RootDomain& domain,
                                            const Rational& width) {
  if (p.is_zero()) throw Error("degenerate polynomial");
  if (p.variables().size() > 1) throw Error("real_roots_univariate: polynomial is not univariate");
  if (p.is_constant()) return {};
  const std::string var = p.variables().front();

  const Polynomial sf = squarefree_part_in(p, var);
  const auto coeffs = dense_coeffs(sf, var);
  if (coeffs.size() <= 1) return {};
  const auto chain = sturm_chain(coeffs);

  // Cauchy bound: all roots inside [-B, B]
  Rational maxratio(0);
  for (size_t i = 0; i + 1 < coeffs.size(); ++i)
    maxratio = std::max(maxratio, Rational(abs(Rational(coeffs[i] / coeffs.back()))));
  const Rational bound = Rational(Rational(1) + maxratio);

  Rational lo = domain.lo ? std::max(*domain.lo, Rational(-bound)) : Rational(-bound);
  Rational hi = domain.hi ? std::min(*domain.hi, bound) : bound;
  if (lo >= hi) return {};

  const auto count = [&](const Rational& a, const Rational& b) {
    return variations_at(chain, a) - variations_at(chain, b);
  };

  // isolate on half-open cells (a, b], then refine
  std::vector<Interval> roots;
  std::vector<std::pair<Rational, Rational>> stack{{lo, hi}};
  while (!stack.empty()) {
    auto [a, b] = stack.back();
    stack.pop_back();
    const int n = count(a, b);
    if (n == 0) continue;
    if (n == 1) {
      // refine (a, b] by bisection on the Sturm count
      Rational l = a, h = b;
      while (h - l > width) {
        const Rational m = (l + h) / 2;
        if (count(l, m) == 1)
          h = m;
        else
          l = m;
      }
      // exclude roots sitting exactly on an open-domain endpoint
      if (domain.lo && h <= *domain.lo) continue;
      if (domain.hi && l >= *domain.hi) continue;
      roots.emplace_back(l, h);
      continue;
    }
    const Rational m = (a + b) / 2;
    if (eval_dense(coeffs, m) == 0) {
      // split just off the root so each cell keeps a clean count
      roots.push_back(Interval::exact(m));
      Rational eps = std::min(Rational(width / 2), Rational((b - a) / 8));
      while (count(m - eps, m + eps) != 1) eps /= 2;
      stack.emplace_back(a, m - eps);
      stack.emplace_back(m + eps, b);
    } else {
      stack.emplace_back(a, m);
      stack.emplace_back(m, b);
    }
  }

  std::sort(roots.begin(), roots.end(),
            [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
  // drop duplicates that can arise from an exact root found at a split point
  std::vector<Interval> out;
  for (const auto& r : roots) {
    if (!out.empty() && out.back().hi >= r.lo && count(out.back().lo, r.hi) <= 1) {
      if (r.width() < out.back().width()) out.back() = r;
      continue;
    }
    out.push_back(r);
  }
  // enforce the open domain exactly for endpoint roots: an isolating
  // interval holds one root of the squarefree part, so if an endpoint of
  // the open domain is itself a root and lies inside the interval, that
  // root is the endpoint and is excluded
  std::vector<Interval> filtered;
  for (const auto& r : out) {
    if (domain.lo && r.hi <= *domain.lo) continue;
    if (domain.hi && r.lo >= *domain.hi) continue;
    if (domain.lo && r.contains(*domain.lo) && eval_dense(coeffs, *domain.lo) == 0) continue;
    if (domain.hi && r.contains(*domain.hi) && eval_dense(coeffs, *domain.hi) == 0) continue;
    filtered.push_back(r);
  }
  return filtered;
}

}  // namespace scar::algebra
