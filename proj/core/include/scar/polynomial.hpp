#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "scar/rational.hpp"

namespace scar::algebra {

/// Exponent vector aligned to a polynomial's variable list.
using Monomial = std::vector<unsigned>;

/// Sparse multivariate polynomial with exact rational coefficients over
/// named variables.
///
/// Canonical form maintained by every operation: variables sorted by name
/// and duplicate-free, no zero coefficients stored, variables that appear
/// in no term dropped. Two polynomials are equal iff their canonical forms
/// are identical.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(const Rational& c);
  explicit Polynomial(long c) : Polynomial(Rational(c)) {}

  static Polynomial variable(const std::string& name);
  static Polynomial constant(const Rational& c) { return Polynomial(c); }
  /// Builds c * prod(vars[i]^exps[i]); vars need not be sorted.
  static Polynomial term(const Rational& c, const std::vector<std::string>& vars,
                         const std::vector<unsigned>& exps);

  const std::vector<std::string>& variables() const { return vars_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && vars_.empty()); }
  /// Constant value; requires is_constant().
  Rational constant_value() const;

  size_t term_count() const { return terms_.size(); }
  long degree(const std::string& var) const;
  long total_degree() const;
  bool depends_on(const std::string& var) const { return degree(var) > 0; }

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial operator*(const Rational& c) const;
  Polynomial pow(unsigned e) const;
  bool operator==(const Polynomial& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  Polynomial derivative(const std::string& var) const;

  /// Substitutes exact rational values for a subset of the variables.
  Polynomial substitute_values(const std::map<std::string, Rational>& values) const;
  /// Full evaluation; every variable must be bound.
  Rational evaluate(const std::map<std::string, Rational>& values) const;
  double evaluate_double(const std::map<std::string, double>& values) const;

  /// Extracts the coefficient polynomials of var^0..var^deg, i.e. views the
  /// polynomial as univariate in `var` over the remaining variables.
  std::vector<Polynomial> coefficients_in(const std::string& var) const;
  /// Inverse of coefficients_in: sum coeffs[k] * var^k.
  static Polynomial from_coefficients(const std::string& var, const std::vector<Polynomial>& coeffs);

  /// Exact division; throws Error if o does not divide *this.
  Polynomial divide_exact(const Polynomial& o) const;

  /// Divides all coefficients by the leading coefficient in the storage
  /// order, making the polynomial monic (deterministic normalization).
  Polynomial monic() const;

  /// Canonical serialization: terms in descending storage order, each as
  /// `coeff*var^e*...`; rationals as num/den. parse() round-trips exactly.
  std::string to_string() const;
  static Polynomial parse(const std::string& text);

 private:
  void normalize();
  static std::pair<Polynomial, Polynomial> aligned(const Polynomial& a, const Polynomial& b);
  friend struct PolyOps;

  std::vector<std::string> vars_;      // sorted, duplicate-free
  std::map<Monomial, Rational> terms_; // exponents aligned to vars_; no zeros
};

inline Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

}  // namespace scar::algebra
