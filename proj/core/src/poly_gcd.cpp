#include "scar/poly_gcd.hpp"

#include <algorithm>

namespace scar::algebra {

namespace {

// Euclid on Q[var]; remainders normalized monic to bound coefficient size.
Polynomial gcd_univariate(const Polynomial& a, const Polynomial& b, const std::string& var) {
  Polynomial f = a.monic(), g = b.monic();
  while (!g.is_zero()) {
    const long dg = g.degree(var);
    Polynomial r = f;
    while (!r.is_zero() && r.degree(var) >= dg) {
      const auto rc = r.coefficients_in(var);
      const auto gc = g.coefficients_in(var);
      const long dr = r.degree(var);
      const Rational q = rc.back().constant_value() / gc.back().constant_value();
      Polynomial t = Polynomial::term(q, {var}, {static_cast<unsigned>(dr - dg)});
      r = r - t * g;
    }
    f = g;
    g = r.is_zero() ? r : r.monic();
  }
  return f.monic();
}

Polynomial leading_coefficient_in(const Polynomial& p, const std::string& var) {
  return p.coefficients_in(var).back();
}

// Subresultant pseudo-remainder sequence (Knuth 4.6.1, Algorithm C) on
// primitive inputs; returns the primitive gcd of the primitive parts.
Polynomial subresultant_gcd(Polynomial u, Polynomial v, const std::string& var) {
  if (u.degree(var) < v.degree(var)) std::swap(u, v);
  Polynomial g(Rational(1)), h(Rational(1));
  while (true) {
    const long delta = u.degree(var) - v.degree(var);
    Polynomial r = pseudo_remainder(u, v, var);
    if (r.is_zero()) return primitive_part_in(v, var);
    if (r.degree(var) == 0) return Polynomial(Rational(1));
    u = v;
    const Polynomial divisor = g * h.pow(static_cast<unsigned>(delta));
    v = r.divide_exact(divisor);
    g = leading_coefficient_in(u, var);
    if (delta == 1)
      h = g;
    else if (delta > 1)
      h = g.pow(static_cast<unsigned>(delta)).divide_exact(h.pow(static_cast<unsigned>(delta - 1)));
  }
}

}  // namespace

Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, const std::string& var) {
  const long db = b.degree(var);
  if (b.is_zero() || db == 0) throw Error("pseudo_remainder: divisor degree must be positive");
  const Polynomial blc = b.coefficients_in(var).back();
  Polynomial r = a;
  long dr = r.degree(var);
  while (!r.is_zero() && dr >= db) {
    const auto rc = r.coefficients_in(var);
    const Polynomial rlc = rc.back();
    const Polynomial shift = Polynomial::term(Rational(1), {var}, {static_cast<unsigned>(dr - db)});
    r = blc * r - rlc * shift * b;
    const long ndr = r.degree(var);
    if (!r.is_zero() && ndr >= dr) throw Error("pseudo_remainder: no degree progress");
    dr = ndr;
  }
  return r;
}

Polynomial clear_denominators(const Polynomial& p) {
  if (p.is_zero()) return p;
  mpz_class l(1), n(0);
  for (const auto& [m, c] : p.terms()) {
    mpz_class den = c.get_den();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
    l = l / g * den;
    mpz_gcd(n.get_mpz_t(), n.get_mpz_t(), mpz_class(c.get_num()).get_mpz_t());
  }
  Rational scale(l, n);  // also strips the common integer content
  scale.canonicalize();
  if (scale < 0) scale = -scale;
  return p * scale;
}

Polynomial content_in(const Polynomial& p, const std::string& var) {
  const auto coeffs = p.coefficients_in(var);
  Polynomial c;
  for (const auto& q : coeffs) {
    c = poly_gcd(c, q);
    if (c.is_constant() && !c.is_zero()) return Polynomial(Rational(1));
  }
  return c;
}

Polynomial primitive_part_in(const Polynomial& p, const std::string& var) {
  if (p.is_zero()) return p;
  return p.divide_exact(content_in(p, var));
}

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Polynomial(Rational(1));

  // main variable: last shared variable in canonical order
  std::string var;
  {
    const auto& va = a.variables();
    const auto& vb = b.variables();
    for (auto it = va.rbegin(); it != va.rend() && var.empty(); ++it)
      if (std::binary_search(vb.begin(), vb.end(), *it)) var = *it;
    if (var.empty()) return Polynomial(Rational(1));  // disjoint variable sets
  }

  if (a.variables().size() == 1 && b.variables().size() == 1) return gcd_univariate(a, b, var);

  // integer coefficients keep the subresultant sequence cheap
  const Polynomial ai = clear_denominators(a);
  const Polynomial bi = clear_denominators(b);
  const Polynomial ca = content_in(ai, var);
  const Polynomial cb = content_in(bi, var);
  const Polynomial fa = ai.divide_exact(ca);
  const Polynomial fb = bi.divide_exact(cb);
  Polynomial pp;
  if (fa.degree(var) == 0 || fb.degree(var) == 0)
    pp = Polynomial(Rational(1));
  else
    pp = subresultant_gcd(fa, fb, var);
  return (poly_gcd(ca, cb) * pp).monic();
}

Polynomial poly_gcd(const std::vector<Polynomial>& ps) {
  Polynomial g;
  for (const auto& p : ps) {
    g = poly_gcd(g, p);
    if (g.is_constant() && !g.is_zero()) return Polynomial(Rational(1));
  }
  return g;
}

Polynomial squarefree_part_in(const Polynomial& p, const std::string& var) {
  if (p.is_zero()) throw Error("squarefree_part_in: zero polynomial");
  const Polynomial d = p.derivative(var);
  if (d.is_zero()) return Polynomial(Rational(1));  // p independent of var
  // split off the var-free content first; every factor of the primitive
  // part involves var, so one gcd against the derivative removes all
  // repeated factors
  const Polynomial cont = content_in(p, var);
  const Polynomial pp = p.divide_exact(cont);
  const Polynomial g = poly_gcd(pp, pp.derivative(var));
  return pp.divide_exact(g).monic();
}

Polynomial squarefree_full(const Polynomial& p) {
  if (p.is_zero()) throw Error("squarefree_full: zero polynomial");
  if (p.is_constant()) return Polynomial(Rational(1));
  const std::string var = p.variables().front();
  const Polynomial cont = content_in(p, var);
  const Polynomial pp = p.divide_exact(cont);
  const Polynomial sf = pp.divide_exact(poly_gcd(pp, pp.derivative(var)));
  return (sf * squarefree_full(cont)).monic();
}

}  // namespace scar::algebra
