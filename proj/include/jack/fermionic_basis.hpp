#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "jack/kappa_field.hpp"

namespace jack {

inline constexpr int kMaxN = 16;

/// Subset of {1..n}; position i is bit (i-1) of the mask.
class SubsetE {
 public:
  SubsetE() = default;
  SubsetE(int n, std::uint32_t mask);
  static SubsetE from_positions(int n, const std::vector<int>& positions);
  static SubsetE from_positions(int n, std::initializer_list<int> positions);
  /// {lo, lo+1, ..., hi}; empty when hi < lo
  static SubsetE interval(int n, int lo, int hi);

  int n() const { return n_; }
  std::uint32_t mask() const { return mask_; }
  int size() const;
  bool contains(int pos) const { return (mask_ >> (pos - 1)) & 1U; }
  SubsetE complement() const;
  SubsetE with(int pos) const;
  SubsetE without(int pos) const;
  /// Swap membership of i and i+1.
  SubsetE swapped(int i) const;
  std::vector<int> positions() const;
  std::string to_string() const;

  friend bool operator==(const SubsetE& a, const SubsetE& b) = default;
  friend auto operator<=>(const SubsetE& a, const SubsetE& b) = default;

 private:
  int n_ = 0;
  std::uint32_t mask_ = 0;
};

/// #{(i, j) in E x E^C : i < j}
int inv_count(const SubsetE& e);
/// #{(i, j) in E^C x E : i < j}
int inv_prime_count(const SubsetE& e);
/// #{i in E : j < i}
int s_count(int j, const SubsetE& e);
/// #{i in E : i < j}
int below_count(int j, const SubsetE& e);
inline int sigma(int n) { return (n % 2 == 0) ? 1 : -1; }

struct SignedSet {
  int sign = 0;  // 0 means the product vanished
  SubsetE set;
};

/// phi_E * theta_j
SignedSet mul_theta(const SubsetE& e, int j);
/// Transposition (i, j) acting on phi_E.
SignedSet transposition_on_phi(int i, int j, const SubsetE& e);

/// One-line notation, 1-based: perm[k-1] = w(k).
using Permutation = std::vector<int>;
Permutation identity_permutation(int n);
Permutation inverse_permutation(const Permutation& w);
/// (a * b)(k) = a(b(k))
Permutation compose(const Permutation& a, const Permutation& b);
void check_permutation(const Permutation& w, int n);
/// w phi_E = theta_{w(i1)} ... theta_{w(im)} rewritten on the basis.
SignedSet permute_phi(const Permutation& w, const SubsetE& e);
/// Adjacent transpositions s_{b1}, s_{b2}, ... with w = ... s_{b2} s_{b1}.
std::vector<int> adjacent_factorization(const Permutation& w);

/// Homogeneous element of the exterior algebra of fixed degree m.
class FermionPoly {
 public:
  FermionPoly() = default;
  FermionPoly(int n, int m);
  static FermionPoly basis(const SubsetE& e);

  int n() const { return n_; }
  int m() const { return m_; }
  const std::map<std::uint32_t, KField>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  KField coeff(const SubsetE& e) const;
  void add_term(const SubsetE& e, const KField& c);

  FermionPoly& operator+=(const FermionPoly& o);
  FermionPoly& operator-=(const FermionPoly& o);
  FermionPoly& operator*=(const KField& c);
  friend FermionPoly operator+(FermionPoly a, const FermionPoly& b) { return a += b; }
  friend FermionPoly operator-(FermionPoly a, const FermionPoly& b) { return a -= b; }
  friend FermionPoly operator*(FermionPoly a, const KField& c) { return a *= c; }
  friend FermionPoly operator*(const KField& c, FermionPoly a) { return a *= c; }
  FermionPoly operator-() const;
  friend bool operator==(const FermionPoly& a, const FermionPoly& b) {
    return a.n_ == b.n_ && a.m_ == b.m_ && a.terms_ == b.terms_;
  }

  FermionPoly negate_kappa() const;
  std::string to_string() const;

 private:
  void check_compatible(const FermionPoly& o) const;
  int n_ = 0;
  int m_ = 0;
  std::map<std::uint32_t, KField> terms_;
};

FermionPoly apply_transposition(int i, int j, const FermionPoly& p);
/// Evaluated through the adjacent-transposition factorization of w.
FermionPoly apply_group(const Permutation& w, const FermionPoly& p);
/// phi_E -> sigma(inv E) phi_{E^C}
FermionPoly delta_dual(const FermionPoly& p);
/// Sum over j in E of sigma(s(j,E)) phi_{E \ {j}}; requires #E = m + 1.
FermionPoly psi_vector(const SubsetE& e, int m);
/// Sum over j not in E of sigma(s(j,E)) phi_{E + {j}}; requires #E = m - 1.
FermionPoly eta_vector(const SubsetE& e, int m);
/// Sum of the raising operators.
FermionPoly raising_M(const FermionPoly& p);
/// Sum of the lowering (derivation) operators.
FermionPoly lowering_D(const FermionPoly& p);
/// target 0: (1/N) D M, onto the kernel of D. target 1: (1/N) M D.
FermionPoly project(const FermionPoly& p, int target);
/// Bilinear form for which the phi_E are orthonormal.
KField fermion_dot(const FermionPoly& a, const FermionPoly& b);

}  // namespace jack
