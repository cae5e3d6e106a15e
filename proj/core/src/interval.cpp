#include "scar/interval.hpp"

#include <algorithm>

namespace scar::algebra {

Interval::Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
  if (lo > hi) throw Error("interval: lo > hi");
}

Interval Interval::operator*(const Interval& o) const {
  const Rational a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
  return Interval(std::min(std::min(a, b), std::min(c, d)),
                  std::max(std::max(a, b), std::max(c, d)));
}

Interval Interval::operator*(const Rational& c) const {
  if (c >= 0) return Interval(lo * c, hi * c);
  return Interval(hi * c, lo * c);
}

Interval Interval::pow(unsigned e) const {
  if (e == 0) return Interval::exact(Rational(1));
  if (e == 1) return *this;
  if (e % 2 == 1) {
    // odd power is monotone
    Rational l = lo, h = hi;
    Rational lp(1), hp(1);
    for (unsigned k = 0; k < e; ++k) {
      lp *= l;
      hp *= h;
    }
    return Interval(lp, hp);
  }
  // even power: minimum at 0 when the interval straddles it
  const auto ipow = [](const Rational& v, unsigned k) {
    Rational r(1);
    for (unsigned i = 0; i < k; ++i) r *= v;
    return r;
  };
  const Rational pl = ipow(abs(lo), e), ph = ipow(abs(hi), e);
  if (contains_zero()) return Interval(Rational(0), std::max(pl, ph));
  return Interval(std::min(pl, ph), std::max(pl, ph));
}

Interval evaluate_on_box(const Polynomial& p, const std::map<std::string, Interval>& box) {
  const auto& vars = p.variables();
  std::vector<const Interval*> iv(vars.size());
  for (size_t i = 0; i < vars.size(); ++i) {
    const auto it = box.find(vars[i]);
    if (it == box.end()) throw Error("evaluate_on_box: unbound variable " + vars[i]);
    iv[i] = &it->second;
  }
  Interval acc = Interval::exact(Rational(0));
  for (const auto& [mono, coef] : p.terms()) {
    Interval t = Interval::exact(coef);
    for (size_t i = 0; i < mono.size(); ++i)
      if (mono[i] > 0) t = t * iv[i]->pow(mono[i]);
    acc = acc + t;
  }
  return acc;
}

double RealPoint::value(const std::string& var) const {
  const auto it = coordinates.find(var);
  if (it == coordinates.end()) throw Error("RealPoint: missing coordinate " + var);
  return to_double(it->second.mid());
}

}  // namespace scar::algebra
