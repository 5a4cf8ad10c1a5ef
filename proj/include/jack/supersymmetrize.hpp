#pragma once

#include <vector>

#include "jack/hook_tableaux.hpp"
#include "jack/superpoly.hpp"

namespace jack {

/// Hook tableau of Y_E with entry i replaced by alpha^+_i. row includes the corner.
struct LabeledTableau {
  Family family = Family::Zero;
  int n = 0;
  int m = 0;
  std::vector<int> row;
  std::vector<int> col;

  int corner() const { return row.front(); }
  /// Strictly increasing down column 1, corner included.
  bool column_strict() const;
  /// Strictly increasing along row 1, corner included.
  bool row_strict() const;
  friend bool operator==(const LabeledTableau& a, const LabeledTableau& b) = default;
};

LabeledTableau labeled_tableau(const Composition& alpha, const HookLabel& label);

struct OrbitMember {
  Composition alpha;
  HookLabel label;
};

/// Labels F of the same family with the same labeled tableau for lambda.
std::vector<HookLabel> orbit_labels(const Composition& lambda, const HookLabel& label);
/// Every (beta, F) with beta^+ = lambda and F in orbit_labels.
std::vector<OrbitMember> orbit(const Composition& lambda, const HookLabel& label);

struct RootSink {
  HookLabel root;
  HookLabel sink;
};
RootSink root_sink(const Composition& lambda, const HookLabel& label);

/// Assigns positions to a column-strict tableau; root chooses the root label of
/// its orbit, otherwise the sink.
struct Realization {
  Composition lambda;
  HookLabel label;
};
Realization realize_tableau(const LabeledTableau& tableau, bool root = true);

/// Order of the subgroup of the stabilizer of lambda fixing T_{E_R}.
Integer stabilizer_order(const Composition& lambda, const HookLabel& root);

enum class Normalization { Orbit, Monic };

/// Sum over the orbit of R_1(alpha,F)/C_1(F) J_{alpha,F}. Monic rescales so the
/// coefficient of J_{lambda,E_R} is 1.
SuperPoly build_supersymmetric(const Composition& lambda, const HookLabel& label,
                               Normalization normalization = Normalization::Orbit);

/// Antisymmetric element of M(lambda, E): the supersymmetric polynomial of the
/// complementary label at -kappa, sent through the duality map.
SuperPoly build_antisymmetric(const Composition& lambda, const HookLabel& label);

struct Superpartition {
  std::vector<int> strict;
  std::vector<int> weak;
  friend bool operator==(const Superpartition& a, const Superpartition& b) = default;
};
Superpartition superpartition_of(const LabeledTableau& tableau);

/// Tableaux with column entries 0, 1, ..., and row entries bounded by the column length.
std::vector<LabeledTableau> candidate_generators(int n, int m, Family family);

/// Products m_mu(x) * p_j of monomial symmetric polynomials with the candidate
/// generators in one bosonic degree, their rank at kappa = kappa0, and the
/// number of column-strict tableaux of that degree.
struct GeneratorEvidence {
  std::size_t products = 0;
  std::size_t rank = 0;
  Integer expected = 0;
  bool consistent() const { return rank == products && Integer(static_cast<unsigned long>(products)) == expected; }
};
GeneratorEvidence generator_evidence(int n, int m, Family family, int degree, const Rational& kappa0);

}  // namespace jack
