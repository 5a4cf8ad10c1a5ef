#pragma once

#include <map>
#include <optional>

#include "jack/hook_tableaux.hpp"
#include "jack/superpoly.hpp"

namespace jack {

/// Evaluates <f, g> through <x_i f, g> = <f, D_i g> with the right argument fixed;
/// lowered images D^beta g are memoized so many left arguments can share them.
class PairingTable {
 public:
  explicit PairingTable(SuperPoly g);
  KField pair(const SuperPoly& f);
  const SuperPoly& lowered(const Composition& beta);

 private:
  SuperPoly g_;
  std::map<Composition, SuperPoly> memo_;
};

/// Symmetric bilinear form with orthonormal phi_E in degree 0 and Dunkl adjoints.
KField pairing_oracle(const SuperPoly& f, const SuperPoly& g);

/// prod_i (1 + kappa c_i)_{lambda_i} * prod_{i<j} prod_{l=1}^{lambda_i - lambda_j} (1 - (kappa/(l + kappa(c_i - c_j)))^2)
KField P_product(const Composition& lambda, const HookLabel& label);
/// prod over i < j with alpha_i < alpha_j of (1 + (-1)^z kappa / (alpha_j - alpha_i + kappa(c(r(j)) - c(r(i)))))
KField R_product(int z, const Composition& alpha, const HookLabel& label);
/// prod over the family's inversion pairs below N of (1 + (-1)^z / (c_i - c_j))
Rational C_product(int z, const HookLabel& label);
/// (1 - kappa/(n + d kappa)) prod_{l=1}^{n-1} (1 - (kappa/(l + d kappa))^2)
KField pi0(int n, int d);
/// Same value as P(lambda,E)/R_0(reverse lambda, E), written as a product of pi0 factors.
KField P_over_R0_telescoped(const Composition& lambda, const HookLabel& label);

struct NormReport {
  KField value;
  std::optional<KField> oracle;
  std::optional<Rational> constant;
  std::optional<KField> kappa_part;
  bool oracle_agrees() const { return oracle && *oracle == value; }
};

NormReport jack_norm(const Composition& alpha, const HookLabel& label, bool with_oracle = false);
KField torus_norm(const Composition& alpha, const HookLabel& label);
NormReport supersym_norm(const Composition& lambda, const HookLabel& label, bool with_oracle = false);

/// Norm of the minimal supersymmetric polynomial attached to (N, m, s, k): the
/// kappa-dependent product is reported in kappa_part, the rational prefactor in constant.
struct MinimalNormCase {
  Composition lambda;
  HookLabel label;
  NormReport report;
};
MinimalNormCase minimal_norm(int n, int m, int s, int k);

}  // namespace jack
