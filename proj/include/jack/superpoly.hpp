#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "jack/fermionic_basis.hpp"

namespace jack {

inline constexpr int kMaxExponent = 255;

/// Exponent vector (alpha_1, ..., alpha_N), accessed 1-based.
class Composition {
 public:
  Composition() = default;
  explicit Composition(const std::vector<int>& parts);
  static Composition zeros(int n);

  int size() const { return n_; }
  int at(int i) const { return parts_[static_cast<std::size_t>(i - 1)]; }
  void set(int i, int value);
  int degree() const;
  bool is_zero() const { return degree() == 0; }
  bool is_partition() const;
  Composition swapped(int i, int j) const;
  std::vector<int> to_vector() const;
  std::string to_string() const;

  friend bool operator==(const Composition& a, const Composition& b) = default;
  friend auto operator<=>(const Composition& a, const Composition& b) = default;

 private:
  std::array<std::uint8_t, kMaxN> parts_{};
  int n_ = 0;
};

/// Nonincreasing rearrangement.
Composition sorted_decreasing(const Composition& a);
/// Nondecreasing rearrangement.
Composition sorted_increasing(const Composition& a);
/// All compositions of the given degree with n parts, lexicographically ascending.
std::vector<Composition> compositions_of(int n, int degree);
/// Distinct rearrangements of a, lexicographically ascending.
std::vector<Composition> rearrangements(const Composition& a);

struct MonoKey {
  Composition alpha;
  std::uint32_t mask = 0;
  friend bool operator==(const MonoKey& a, const MonoKey& b) = default;
  friend auto operator<=>(const MonoKey& a, const MonoKey& b) = default;
};

/// Sparse polynomial in x_1..x_N and theta_1..theta_N of fixed fermionic degree m.
/// Terms are kept ordered by (alpha lexicographically, subset mask).
class SuperPoly {
 public:
  SuperPoly() = default;
  SuperPoly(int n, int m);
  /// x^alpha * p
  static SuperPoly from_fermion(const Composition& alpha, const FermionPoly& p);

  int n() const { return n_; }
  int m() const { return m_; }
  const std::map<MonoKey, KField>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  void add_term(const Composition& alpha, std::uint32_t mask, const KField& c);
  KField coeff(const Composition& alpha, const SubsetE& e) const;
  /// Coefficient of x^alpha as an element of the exterior algebra.
  FermionPoly fermion_part(const Composition& alpha) const;
  /// Bosonic degree when homogeneous; -1 for zero, raises otherwise.
  int bosonic_degree() const;

  SuperPoly& operator+=(const SuperPoly& o);
  SuperPoly& operator-=(const SuperPoly& o);
  SuperPoly& operator*=(const KField& c);
  friend SuperPoly operator+(SuperPoly a, const SuperPoly& b) { return a += b; }
  friend SuperPoly operator-(SuperPoly a, const SuperPoly& b) { return a -= b; }
  friend SuperPoly operator*(SuperPoly a, const KField& c) { return a *= c; }
  friend SuperPoly operator*(const KField& c, SuperPoly a) { return a *= c; }
  SuperPoly operator-() const;
  friend bool operator==(const SuperPoly& a, const SuperPoly& b) {
    return a.n_ == b.n_ && a.m_ == b.m_ && a.terms_ == b.terms_;
  }

  SuperPoly negate_kappa() const;
  /// Human-readable form such as "(1 - 2κ)/(1 + κ)·x1^2 x3 θ2θ4".
  std::string to_string() const;

 private:
  void check_compatible(const SuperPoly& o) const;
  int n_ = 0;
  int m_ = 0;
  std::map<MonoKey, KField> terms_;
};

SuperPoly sp_apply_transposition(int i, int j, const SuperPoly& p);
SuperPoly sp_apply_si(int i, const SuperPoly& p);
/// (w p)(x, theta) = p(x w, theta w)
SuperPoly sp_apply_perm(const Permutation& w, const SuperPoly& p);
SuperPoly mul_x(int i, const SuperPoly& p);
SuperPoly dunkl_D(int i, const SuperPoly& p);
SuperPoly cherednik_U(int i, const SuperPoly& p);
/// p -> x_N p(x_N, x_1, ..., x_{N-1}; theta_N, theta_1, ..., theta_{N-1})
SuperPoly affine_shift(const SuperPoly& p);
SuperPoly sp_delta_dual(const SuperPoly& p);
/// Sum over all N! permutations of w p.
SuperPoly symmetrize_sum(const SuperPoly& p);

}  // namespace jack
