#include "jack/cst_spectra.hpp"

#include <algorithm>

#include "jack/errors.hpp"

namespace jack {

namespace {

KField square(const KField& v) { return v * v; }

// entry + kappa * shift
KField cell_term(int entry, const Rational& shift) { return KField::linear(Rational(entry), shift); }

}  // namespace

MuNotation mu_notation(const LabeledTableau& tableau) {
  if (!tableau.column_strict()) raise("NotColumnStrict", "labeled tableau is not column-strict");
  MuNotation out;
  out.mu.assign(tableau.row.begin() + 1, tableau.row.end());
  std::reverse(out.mu.begin(), out.mu.end());
  out.mu_tilde.push_back(tableau.corner());
  out.mu_tilde.insert(out.mu_tilde.end(), tableau.col.begin(), tableau.col.end());
  std::reverse(out.mu_tilde.begin(), out.mu_tilde.end());
  return out;
}

Rational gamma_shift(int n, int m, Family family) {
  const int top = family == Family::Zero ? n - 2 * m - 1 : n - 2 * m + 1;
  Rational g(top, 2);
  g.canonicalize();
  return g;
}

KField cst_eigenvalue(const LabeledTableau& tableau) {
  const MuNotation mn = mu_notation(tableau);
  Rational middle(tableau.n + 1, 2);
  middle.canonicalize();
  KField total;
  for (std::size_t i = 0; i < mn.mu_tilde.size(); ++i) {
    total += square(cell_term(mn.mu_tilde[i], Rational(static_cast<long>(i + 1)) - middle));
  }
  for (std::size_t i = 0; i < mn.mu.size(); ++i) {
    total += square(cell_term(mn.mu[i], middle - Rational(static_cast<long>(i + 1))));
  }
  return total;
}

KField cst_eigenvalue_content(const Composition& lambda, const HookLabel& label) {
  if (lambda.size() != label.n()) raise("SizeMismatch", "partition length differs from N");
  if (!labeled_tableau(lambda, label).column_strict()) {
    raise("NotColumnStrict", "labeled tableau is not column-strict");
  }
  const Rational gamma = gamma_shift(label.n(), label.m, label.family);
  KField total;
  for (int i = 1; i <= lambda.size(); ++i) {
    total += square(cell_term(lambda.at(i), Rational(content(label, i)) - gamma));
  }
  return total;
}

KField ground_state_eigenvalue(int n, int m) {
  if (n < 1 || m < 0 || m > n - 1) raise("InvalidDegree", "need 0 <= m <= N - 1");
  const KField kappa = KField::kappa();
  const KField bracket = KField(static_cast<long>(2 * m + 1)) * (KField(1L) + kappa) -
                         KField(static_cast<long>(3 * n)) * kappa;
  Rational lead(m * (m + 1), 6);
  lead.canonicalize();
  Rational tail(n * (n * n - 1), 12);
  tail.canonicalize();
  return KField(lead) * bracket + KField(tail) * kappa * kappa;
}

LabeledTableau ground_state_tableau(int n, int m) {
  if (n < 1 || m < 0 || m > n - 1) raise("InvalidDegree", "need 0 <= m <= N - 1");
  LabeledTableau t{Family::Zero, n, m, std::vector<int>(static_cast<std::size_t>(n - m), 0), {}};
  for (int i = 1; i <= m; ++i) t.col.push_back(i);
  return t;
}

SuperPoly shifted_square_sum(const SuperPoly& p, const Rational& gamma) {
  const KField shift = KField::linear(Rational(1), gamma);
  SuperPoly total(p.n(), p.m());
  for (int i = 1; i <= p.n(); ++i) {
    const SuperPoly once = cherednik_U(i, p) - p * shift;
    total += cherednik_U(i, once) - once * shift;
  }
  return total;
}

bool hamiltonian_eigencheck(const Composition& lambda, const HookLabel& label) {
  const SuperPoly p = build_supersymmetric(lambda, label);
  const KField eigenvalue = cst_eigenvalue_content(lambda, label);
  return shifted_square_sum(p, gamma_shift(label.n(), label.m, label.family)) == p * eigenvalue;
}

}  // namespace jack
