#pragma once

#include <vector>

#include "jack/fermionic_basis.hpp"

namespace jack {

enum class Family { Zero = 0, One = 1 };

inline int family_index(Family f) { return f == Family::Zero ? 0 : 1; }
Family family_from_int(int k);

/// Standard hook tableau label: family 0 uses #E = m+1 with N in E,
/// family 1 uses #E = m-1 with N outside E.
struct HookLabel {
  Family family = Family::Zero;
  int m = 0;
  SubsetE set;

  int n() const { return set.n(); }
  static HookLabel make(Family family, int m, const SubsetE& set);
  friend bool operator==(const HookLabel& a, const HookLabel& b) = default;
};

/// All labels of one family, in construction order.
std::vector<SubsetE> labels_of(int n, int m, Family family);
HookLabel root_label(int n, int m, Family family);

/// Row 1 includes the corner (always N); col holds column 1 below the corner.
struct HookTableau {
  std::vector<int> row;
  std::vector<int> col;
  friend bool operator==(const HookTableau& a, const HookTableau& b) = default;
};

HookTableau tableau_of(const HookLabel& label);
HookLabel label_from_tableau(Family family, int n, const HookTableau& tableau);
int content(const HookLabel& label, int i);
std::vector<int> content_vector(const HookLabel& label);

/// Cached; family 1 is produced from the family 0 construction for N-m via duality.
FermionPoly build_T(const HookLabel& label);
/// Family 1 through its own lowering recursion from eta; family 0 as build_T.
FermionPoly build_T_recursive(const HookLabel& label);

struct TStep {
  HookLabel next;
  FermionPoly value;
};
/// T_{s_i E} = s_i T_E - (c(i,E) - c(i+1,E))^{-1} T_E when the move is admissible
/// for the family; raises UnsupportedMove otherwise.
TStep T_step(const HookLabel& label, const FermionPoly& t, int i);

/// Sum over j > i of the transposition (i, j).
FermionPoly jucys_murphy(int i, const FermionPoly& p);
Rational T_norm_sq(const HookLabel& label);

}  // namespace jack
