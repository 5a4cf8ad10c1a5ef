#pragma once

#include <vector>

#include "jack/kappa_field.hpp"
#include "jack/supersymmetrize.hpp"

namespace jack {

/// Row 1 without the corner, largest first, and column 1 with the corner, largest first.
struct MuNotation {
  std::vector<int> mu;
  std::vector<int> mu_tilde;
};
MuNotation mu_notation(const LabeledTableau& tableau);

/// (N - 2m - 1)/2 for family 0 and (N - 2m + 1)/2 for family 1.
Rational gamma_shift(int n, int m, Family family);

/// Sum of squares over the cells, written through the (mu, mu_tilde) description.
KField cst_eigenvalue(const LabeledTableau& tableau);
/// sum_i (lambda_i + kappa (c(i,E) - gamma))^2
KField cst_eigenvalue_content(const Composition& lambda, const HookLabel& label);
/// (1/6) m (m+1) ((2m+1)(1+kappa) - 3 kappa N) + (kappa^2/12) N (N^2 - 1)
KField ground_state_eigenvalue(int n, int m);
/// Lowest-degree column-strict tableau of family 0: corner and row zero, column 1..m.
LabeledTableau ground_state_tableau(int n, int m);

/// sum_i (U_i - 1 - kappa gamma)^2 p, with p the supersymmetric polynomial of (lambda, E).
SuperPoly shifted_square_sum(const SuperPoly& p, const Rational& gamma);
bool hamiltonian_eigencheck(const Composition& lambda, const HookLabel& label);

}  // namespace jack
