#pragma once

#include <set>
#include <vector>

#include "scar/polynomial.hpp"

namespace scar::algebra {

/// Resource cap for symbolic elimination. Exceeding it raises
/// BudgetExceeded carrying the partial basis so callers can fall back to
/// the numeric path.
struct EliminationBudget {
  double seconds = 30.0;
  size_t max_basis = 256;
  size_t max_poly_terms = 100000;
};

class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::vector<Polynomial> partial_basis)
      : Error(what), partial(std::move(partial_basis)) {}
  std::vector<Polynomial> partial;
};

/// Reduced Groebner basis for the lexicographic order induced by
/// `priority` (earlier entries rank higher). Variables of the input not
/// listed in `priority` are appended in canonical order below it.
std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& generators,
                                       const std::vector<std::string>& priority,
                                       const EliminationBudget& budget = {});

/// Generators of the elimination ideal: Groebner basis with the
/// eliminated variables ranked highest, filtered to the polynomials free
/// of them.
std::vector<Polynomial> groebner_elimination(const std::vector<Polynomial>& generators,
                                             const std::set<std::string>& eliminate,
                                             const EliminationBudget& budget = {});

/// Remainder of p on full reduction by the basis (lex order as above).
Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& basis,
                       const std::vector<std::string>& priority);

/// Leading-term criterion on a Groebner basis: the ideal is
/// zero-dimensional iff some leading term is a pure power of each
/// variable. `vars` is the full variable set of the ring.
bool is_zero_dimensional(const std::vector<Polynomial>& basis,
                         const std::vector<std::string>& vars,
                         const std::vector<std::string>& priority);

}  // namespace scar::algebra
