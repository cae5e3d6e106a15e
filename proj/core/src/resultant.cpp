#include "scar/resultant.hpp"

namespace scar::algebra {

Polynomial determinant(std::vector<std::vector<Polynomial>> m) {
  const size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw Error("determinant: matrix not square");
  if (n == 0) return Polynomial(Rational(1));

  int sign = 1;
  Polynomial prev_pivot(Rational(1));
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      size_t swap_row = k;
      for (size_t i = k + 1; i < n; ++i)
        if (!m[i][k].is_zero()) {
          swap_row = i;
          break;
        }
      if (swap_row == k) return Polynomial();  // singular
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        Polynomial num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = num.divide_exact(prev_pivot);
      }
      m[i][k] = Polynomial();
    }
    prev_pivot = m[k][k];
  }
  Polynomial det = m[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

Polynomial resultant(const Polynomial& f, const Polynomial& g, const std::string& var) {
  const long df = f.degree(var);
  const long dg = g.degree(var);
  if (df <= 0 || dg <= 0) throw Error("nothing to eliminate");

  const auto fc = f.coefficients_in(var);  // ascending powers
  const auto gc = g.coefficients_in(var);
  const size_t n = static_cast<size_t>(df + dg);
  std::vector<std::vector<Polynomial>> m(n, std::vector<Polynomial>(n));
  // dg rows of f coefficients (descending), then df rows of g
  for (size_t i = 0; i < static_cast<size_t>(dg); ++i)
    for (size_t j = 0; j <= static_cast<size_t>(df); ++j)
      m[i][i + j] = fc[static_cast<size_t>(df) - j];
  for (size_t i = 0; i < static_cast<size_t>(df); ++i)
    for (size_t j = 0; j <= static_cast<size_t>(dg); ++j)
      m[static_cast<size_t>(dg) + i][i + j] = gc[static_cast<size_t>(dg) - j];
  return determinant(std::move(m));
}

}  // namespace scar::algebra
