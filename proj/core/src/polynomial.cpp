#include "scar/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>

namespace scar::algebra {

namespace {

// Re-expresses a monomial over `from` variables in terms of `to` (a superset).
Monomial remap(const Monomial& m, const std::vector<std::string>& from,
               const std::vector<std::string>& to) {
  Monomial out(to.size(), 0);
  for (size_t i = 0; i < from.size(); ++i) {
    if (m[i] == 0) continue;
    const auto it = std::lower_bound(to.begin(), to.end(), from[i]);
    out[static_cast<size_t>(it - to.begin())] = m[i];
  }
  return out;
}

}  // namespace

Polynomial::Polynomial(const Rational& c) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

Polynomial Polynomial::variable(const std::string& name) {
  if (name.empty()) throw Error("polynomial variable name must be nonempty");
  Polynomial p;
  p.vars_ = {name};
  p.terms_.emplace(Monomial{1}, Rational(1));
  return p;
}

Polynomial Polynomial::term(const Rational& c, const std::vector<std::string>& vars,
                            const std::vector<unsigned>& exps) {
  if (vars.size() != exps.size()) throw Error("term: vars/exps size mismatch");
  Polynomial p(c);
  for (size_t i = 0; i < vars.size(); ++i) {
    if (exps[i] == 0) continue;
    Polynomial v = variable(vars[i]);
    p = p * v.pow(exps[i]);
  }
  return p;
}

Rational Polynomial::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) throw Error("constant_value: polynomial is not constant");
  return terms_.begin()->second;
}

long Polynomial::degree(const std::string& var) const {
  const auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
  if (it == vars_.end() || *it != var) return 0;
  const size_t idx = static_cast<size_t>(it - vars_.begin());
  long d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<long>(m[idx]));
  return d;
}

long Polynomial::total_degree() const {
  long d = 0;
  for (const auto& [m, c] : terms_) {
    long t = 0;
    for (unsigned e : m) t += e;
    d = std::max(d, t);
  }
  return d;
}

void Polynomial::normalize() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second == 0)
      it = terms_.erase(it);
    else
      ++it;
  }
  // drop variables not appearing in any term
  std::vector<bool> used(vars_.size(), false);
  for (const auto& [m, c] : terms_)
    for (size_t i = 0; i < m.size(); ++i)
      if (m[i] > 0) used[i] = true;
  if (std::all_of(used.begin(), used.end(), [](bool b) { return b; })) return;
  std::vector<std::string> nv;
  for (size_t i = 0; i < vars_.size(); ++i)
    if (used[i]) nv.push_back(vars_[i]);
  std::map<Monomial, Rational> nt;
  for (const auto& [m, c] : terms_) {
    Monomial nm;
    nm.reserve(nv.size());
    for (size_t i = 0; i < m.size(); ++i)
      if (used[i]) nm.push_back(m[i]);
    nt.emplace(std::move(nm), c);
  }
  vars_ = std::move(nv);
  terms_ = std::move(nt);
}

std::pair<Polynomial, Polynomial> Polynomial::aligned(const Polynomial& a, const Polynomial& b) {
  if (a.vars_ == b.vars_) return {a, b};
  std::vector<std::string> u;
  std::set_union(a.vars_.begin(), a.vars_.end(), b.vars_.begin(), b.vars_.end(),
                 std::back_inserter(u));
  Polynomial ra, rb;
  ra.vars_ = u;
  rb.vars_ = u;
  for (const auto& [m, c] : a.terms_) ra.terms_.emplace(remap(m, a.vars_, u), c);
  for (const auto& [m, c] : b.terms_) rb.terms_.emplace(remap(m, b.vars_, u), c);
  return {std::move(ra), std::move(rb)};
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  auto [a, b] = aligned(*this, o);
  for (const auto& [m, c] : b.terms_) {
    auto [it, inserted] = a.terms_.emplace(m, c);
    if (!inserted) it->second += c;
  }
  a.normalize();
  return a;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) return Polynomial();
  auto [a, b] = aligned(*this, o);
  Polynomial out;
  out.vars_ = a.vars_;
  const size_t n = a.vars_.size();
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m(n);
      for (size_t i = 0; i < n; ++i) m[i] = ma[i] + mb[i];
      Rational prod = ca * cb;
      auto [it, inserted] = out.terms_.emplace(std::move(m), prod);
      if (!inserted) it->second += prod;
    }
  }
  out.normalize();
  return out;
}

Polynomial Polynomial::operator*(const Rational& c) const {
  if (c == 0) return Polynomial();
  Polynomial out = *this;
  for (auto& [m, v] : out.terms_) v *= c;
  return out;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial out(Rational(1));
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) out = out * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return out;
}

Polynomial Polynomial::derivative(const std::string& var) const {
  const auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
  if (it == vars_.end() || *it != var) return Polynomial();
  const size_t idx = static_cast<size_t>(it - vars_.begin());
  Polynomial out;
  out.vars_ = vars_;
  for (const auto& [m, c] : terms_) {
    if (m[idx] == 0) continue;
    Monomial nm = m;
    nm[idx] -= 1;
    out.terms_.emplace(std::move(nm), c * Rational(m[idx]));
  }
  out.normalize();
  return out;
}

Polynomial Polynomial::substitute_values(const std::map<std::string, Rational>& values) const {
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    Rational coef = c;
    std::vector<std::string> keep_vars;
    std::vector<unsigned> keep_exps;
    for (size_t i = 0; i < vars_.size(); ++i) {
      if (m[i] == 0) continue;
      const auto it = values.find(vars_[i]);
      if (it == values.end()) {
        keep_vars.push_back(vars_[i]);
        keep_exps.push_back(m[i]);
      } else {
        Rational p(1);
        for (unsigned k = 0; k < m[i]; ++k) p *= it->second;
        coef *= p;
      }
    }
    out += term(coef, keep_vars, keep_exps);
  }
  return out;
}

Rational Polynomial::evaluate(const std::map<std::string, Rational>& values) const {
  const Polynomial r = substitute_values(values);
  if (!r.is_constant()) throw Error("evaluate: unbound variable remains");
  return r.constant_value();
}

double Polynomial::evaluate_double(const std::map<std::string, double>& values) const {
  std::vector<double> xs(vars_.size());
  for (size_t i = 0; i < vars_.size(); ++i) {
    const auto it = values.find(vars_[i]);
    if (it == values.end()) throw Error("evaluate_double: unbound variable " + vars_[i]);
    xs[i] = it->second;
  }
  double acc = 0.0;
  for (const auto& [m, c] : terms_) {
    double t = to_double(c);
    for (size_t i = 0; i < m.size(); ++i)
      for (unsigned k = 0; k < m[i]; ++k) t *= xs[i];
    acc += t;
  }
  return acc;
}

std::vector<Polynomial> Polynomial::coefficients_in(const std::string& var) const {
  const long d = degree(var);
  std::vector<Polynomial> out(static_cast<size_t>(d) + 1);
  const auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
  if (it == vars_.end() || *it != var) {
    out[0] = *this;
    return out;
  }
  const size_t idx = static_cast<size_t>(it - vars_.begin());
  for (const auto& [m, c] : terms_) {
    std::vector<std::string> kv;
    std::vector<unsigned> ke;
    for (size_t i = 0; i < vars_.size(); ++i) {
      if (i == idx || m[i] == 0) continue;
      kv.push_back(vars_[i]);
      ke.push_back(m[i]);
    }
    out[m[idx]] += term(c, kv, ke);
  }
  return out;
}

Polynomial Polynomial::from_coefficients(const std::string& var,
                                         const std::vector<Polynomial>& coeffs) {
  Polynomial out;
  const Polynomial x = variable(var);
  for (size_t k = 0; k < coeffs.size(); ++k)
    out += coeffs[k] * x.pow(static_cast<unsigned>(k));
  return out;
}

Polynomial Polynomial::divide_exact(const Polynomial& o) const {
  if (o.is_zero()) throw Error("divide_exact: division by zero polynomial");
  if (is_zero()) return Polynomial();
  if (o.is_constant()) return *this * (Rational(1) / o.constant_value());
  auto [a, b] = aligned(*this, o);
  const size_t n = a.vars_.size();
  // Leading-term division on raw term maps in the shared variable space.
  // The storage order (lex on exponent vectors) is an admissible monomial
  // order, so the leading monomial of rem decreases strictly each step.
  std::map<Monomial, Rational> rem = a.terms_;
  std::map<Monomial, Rational> quot;
  const Monomial lb = b.terms_.rbegin()->first;
  const Rational cb = b.terms_.rbegin()->second;
  while (!rem.empty()) {
    const auto lead = std::prev(rem.end());
    const Monomial& lr = lead->first;
    Monomial q(n);
    bool divisible = true;
    for (size_t i = 0; i < n; ++i) {
      if (lr[i] < lb[i]) {
        divisible = false;
        break;
      }
      q[i] = lr[i] - lb[i];
    }
    if (!divisible) throw Error("divide_exact: not divisible");
    const Rational qc = lead->second / cb;
    for (const auto& [mb, cbt] : b.terms_) {
      Monomial m(n);
      for (size_t i = 0; i < n; ++i) m[i] = q[i] + mb[i];
      auto [it, inserted] = rem.emplace(std::move(m), -qc * cbt);
      if (!inserted) {
        it->second -= qc * cbt;
        if (it->second == 0) rem.erase(it);
      }
    }
    quot.emplace(std::move(q), qc);
  }
  Polynomial out;
  out.vars_ = a.vars_;
  out.terms_ = std::move(quot);
  out.normalize();
  return out;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return *this * (Rational(1) / terms_.rbegin()->second);
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // descending storage order for a stable leading-term-first rendering
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << algebra::to_string(it->second);
    for (size_t i = 0; i < vars_.size(); ++i) {
      if (it->first[i] == 0) continue;
      os << "*" << vars_[i];
      if (it->first[i] > 1) os << "^" << it->first[i];
    }
  }
  return os.str();
}

Polynomial Polynomial::parse(const std::string& text) {
  Polynomial out;
  size_t pos = 0;
  const auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos >= text.size()) throw Error("parse: empty polynomial text");
  bool first_term = true;
  while (pos < text.size()) {
    skip_ws();
    int sign = 1;
    if (!first_term) {
      if (text[pos] == '+')
        ++pos;
      else if (text[pos] == '-') {
        sign = -1;
        ++pos;
      } else
        throw Error("parse: expected '+' or '-' between terms");
      skip_ws();
    }
    first_term = false;
    // coefficient (required by the canonical form, optional sign inside)
    size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    while (pos < text.size() &&
           (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/' || text[pos] == '.'))
      ++pos;
    if (pos == start) throw Error("parse: expected coefficient");
    Rational coef = rational_from_string(text.substr(start, pos - start));
    if (sign < 0) coef = -coef;
    std::vector<std::string> vars;
    std::vector<unsigned> exps;
    skip_ws();
    while (pos < text.size() && text[pos] == '*') {
      ++pos;
      skip_ws();
      start = pos;
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
        ++pos;
      if (pos == start) throw Error("parse: expected variable name after '*'");
      vars.push_back(text.substr(start, pos - start));
      unsigned e = 1;
      skip_ws();
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        skip_ws();
        start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw Error("parse: expected exponent after '^'");
        e = static_cast<unsigned>(std::stoul(text.substr(start, pos - start)));
      }
      exps.push_back(e);
      skip_ws();
    }
    out += term(coef, vars, exps);
    skip_ws();
  }
  return out;
}

}  // namespace scar::algebra
