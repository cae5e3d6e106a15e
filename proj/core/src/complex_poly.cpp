#include "scar/complex_poly.hpp"

#include <algorithm>

namespace scar::algebra {

ComplexPoly ComplexPoly::pow(unsigned e) const {
  ComplexPoly out(Polynomial(Rational(1)));
  ComplexPoly base = *this;
  while (e > 0) {
    if (e & 1u) out = out * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return out;
}

SubstitutionResult substitute(const ComplexPoly& p,
                              const std::map<std::string, ComplexRationalFunction>& bindings) {
  // union of the variables of both parts, in canonical order
  std::vector<std::string> vars = p.re.variables();
  for (const auto& v : p.im.variables())
    if (!std::binary_search(vars.begin(), vars.end(), v)) vars.push_back(v);
  std::sort(vars.begin(), vars.end());

  std::vector<const ComplexRationalFunction*> binding_of(vars.size(), nullptr);
  std::vector<long> max_deg(vars.size(), 0);
  for (size_t i = 0; i < vars.size(); ++i) {
    const auto it = bindings.find(vars[i]);
    if (it == bindings.end()) throw Error("unknown variable: " + vars[i]);
    if (it->second.denominator.is_zero())
      throw Error("substitute: binding denominator identically zero for " + vars[i]);
    binding_of[i] = &it->second;
    max_deg[i] = std::max(p.re.degree(vars[i]), p.im.degree(vars[i]));
  }

  // power tables num^k for k<=d and den^k for k<=d
  std::vector<std::vector<ComplexPoly>> num_pow(vars.size());
  std::vector<std::vector<Polynomial>> den_pow(vars.size());
  for (size_t i = 0; i < vars.size(); ++i) {
    num_pow[i].resize(static_cast<size_t>(max_deg[i]) + 1);
    den_pow[i].resize(static_cast<size_t>(max_deg[i]) + 1);
    num_pow[i][0] = ComplexPoly(Polynomial(Rational(1)));
    den_pow[i][0] = Polynomial(Rational(1));
    for (long k = 1; k <= max_deg[i]; ++k) {
      num_pow[i][static_cast<size_t>(k)] =
          num_pow[i][static_cast<size_t>(k - 1)] * binding_of[i]->numerator;
      den_pow[i][static_cast<size_t>(k)] =
          den_pow[i][static_cast<size_t>(k - 1)] * binding_of[i]->denominator;
    }
  }

  // term c * prod v^e maps to c * prod num_v^e * den_v^(d_v - e) over prod den_v^(d_v)
  const auto expand_part = [&](const Polynomial& part, bool imaginary) {
    ComplexPoly acc;
    for (const auto& [mono, coef] : part.terms()) {
      ComplexPoly t{Polynomial(coef)};
      if (imaginary) t = ComplexPoly(Polynomial(), Polynomial(coef));
      const auto& pvars = part.variables();
      // exponents of variables absent from this part are zero
      std::vector<unsigned> exp(vars.size(), 0);
      for (size_t j = 0; j < pvars.size(); ++j) {
        const auto it = std::lower_bound(vars.begin(), vars.end(), pvars[j]);
        exp[static_cast<size_t>(it - vars.begin())] = mono[j];
      }
      for (size_t i = 0; i < vars.size(); ++i) {
        t = t * num_pow[i][exp[i]];
        const long pad = max_deg[i] - static_cast<long>(exp[i]);
        if (pad > 0) t = ComplexPoly{t.re * den_pow[i][static_cast<size_t>(pad)],
                                     t.im * den_pow[i][static_cast<size_t>(pad)]};
      }
      acc += t;
    }
    return acc;
  };

  SubstitutionResult result;
  result.numerator = expand_part(p.re, false) + expand_part(p.im, true);
  result.denominator = Polynomial(Rational(1));
  for (size_t i = 0; i < vars.size(); ++i)
    result.denominator = result.denominator * den_pow[i][static_cast<size_t>(max_deg[i])];
  return result;
}

}  // namespace scar::algebra
