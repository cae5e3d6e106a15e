#include "scar/rational.hpp"

#include <cmath>
#include <cstdlib>

namespace scar::algebra {

Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw Error("rational_from_double: non-finite input");
  Rational q;
  mpq_set_d(q.get_mpq_t(), x);
  return q;
}

Rational rationalize(double x, unsigned long max_den) {
  if (!std::isfinite(x)) throw Error("rationalize: non-finite input");
  if (max_den == 0) throw Error("rationalize: max_den must be positive");
  const Rational exact = rational_from_double(x);
  if (exact.get_den() <= max_den) return exact;

  // Stern-Brocot style continued fraction walk on |x|.
  const bool neg = x < 0;
  Rational target = neg ? Rational(-exact) : exact;

  mpz_class p0(0), q0(1), p1(1), q1(0);  // convergents p/q
  Rational rem = target;
  mpz_class best_num(0), best_den(1);
  while (true) {
    mpz_class a = rem.get_num() / rem.get_den();  // floor (rem >= 0)
    mpz_class p2 = a * p1 + p0;
    mpz_class q2 = a * q1 + q0;
    if (q2 > max_den) {
      // largest semiconvergent with denominator within bound
      mpz_class k = (mpz_class(max_den) - q0) / q1;
      mpz_class ps = k * p1 + p0;
      mpz_class qs = k * q1 + q0;
      Rational cand1(ps, qs), cand2(p1, q1);
      cand1.canonicalize();
      cand2.canonicalize();
      Rational e1 = abs(cand1 - target), e2 = abs(cand2 - target);
      if (q1 <= max_den && e2 <= e1) {
        best_num = p1;
        best_den = q1;
      } else {
        best_num = ps;
        best_den = qs;
      }
      break;
    }
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    Rational frac = rem - Rational(a);
    if (frac == 0) {
      best_num = p1;
      best_den = q1;
      break;
    }
    rem = Rational(1) / frac;
  }
  Rational out(neg ? mpz_class(-best_num) : best_num, best_den);
  out.canonicalize();
  return out;
}

Rational rational_from_string(const std::string& text) {
  if (text.empty()) throw Error("rational_from_string: empty input");
  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
      throw Error("rational_from_string: malformed rational '" + text + "'");
    q.canonicalize();
    if (q.get_den() == 0) throw Error("rational_from_string: zero denominator");
    return q;
  }
  const auto dot = text.find('.');
  if (dot == std::string::npos) {
    mpz_class n;
    if (mpz_set_str(n.get_mpz_t(), text.c_str(), 10) != 0)
      throw Error("rational_from_string: malformed integer '" + text + "'");
    return Rational(n);
  }
  // decimal literal: sign? digits '.' digits
  std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  const size_t frac_len = text.size() - dot - 1;
  mpz_class n;
  if (digits.empty() || mpz_set_str(n.get_mpz_t(), digits.c_str(), 10) != 0)
    throw Error("rational_from_string: malformed decimal '" + text + "'");
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
  Rational q(n, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

double to_double(const Rational& q) { return q.get_d(); }

ComplexRational rationalize_complex(std::complex<double> z, unsigned long max_den) {
  return {rationalize(z.real(), max_den), rationalize(z.imag(), max_den)};
}

}  // namespace scar::algebra
