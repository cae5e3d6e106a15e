#pragma once

#include <map>
#include <string>

#include "scar/polynomial.hpp"

namespace scar::algebra {

/// Closed interval with exact rational endpoints. All operations are
/// exact, so enclosures need no outward rounding.
struct Interval {
  Rational lo{0};
  Rational hi{0};

  Interval() = default;
  Interval(Rational l, Rational h);
  static Interval exact(const Rational& v) { return Interval(v, v); }

  Rational mid() const { return (lo + hi) / 2; }
  Rational radius() const { return (hi - lo) / 2; }
  Rational width() const { return hi - lo; }
  bool contains_zero() const { return lo <= 0 && hi >= 0; }
  bool contains(const Rational& v) const { return lo <= v && hi >= v; }

  Interval operator+(const Interval& o) const { return Interval(lo + o.lo, hi + o.hi); }
  Interval operator-(const Interval& o) const { return Interval(lo - o.hi, hi - o.lo); }
  Interval operator-() const { return Interval(-hi, -lo); }
  Interval operator*(const Interval& o) const;
  Interval operator*(const Rational& c) const;
  Interval pow(unsigned e) const;
};

/// Interval enclosure of p over an axis-aligned box; every variable of p
/// must appear in the box.
Interval evaluate_on_box(const Polynomial& p, const std::map<std::string, Interval>& box);

/// A point located by certified intervals, one per coordinate.
struct RealPoint {
  std::map<std::string, Interval> coordinates;

  double value(const std::string& var) const;
};

}  // namespace scar::algebra
