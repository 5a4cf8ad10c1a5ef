#pragma once

#include <string>
#include <vector>

#include "jack/fermionic_basis.hpp"
#include "jack/hook_tableaux.hpp"
#include "jack/kappa_field.hpp"

namespace jack {

/// Power series in q with integer coefficients, truncated after degree `trunc`.
class QSeries {
 public:
  explicit QSeries(int trunc = 0);
  static QSeries one(int trunc);
  static QSeries monomial(int power, int trunc);

  int trunc() const { return trunc_; }
  Integer coeff(int power) const;
  void set_coeff(int power, const Integer& value);
  std::vector<Integer> coeffs() const { return coeffs_; }
  /// Highest power with a nonzero coefficient, or -1 for zero.
  int degree() const;
  /// Coefficient sum; meaningful for polynomials that fit below the truncation.
  Integer at_one() const;

  QSeries& operator+=(const QSeries& other);
  QSeries& operator-=(const QSeries& other);
  QSeries& operator*=(const QSeries& other);
  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
  friend QSeries operator*(QSeries a, const QSeries& b) { return a *= b; }
  friend bool operator==(const QSeries& a, const QSeries& b);

  QSeries shifted(int power) const;
  /// Multiply by 1/(1 - q^k).
  QSeries divided_by_one_minus(int k) const;
  /// Multiply by (1 - q^k).
  QSeries times_one_minus(int k) const;
  QSeries retruncated(int trunc) const;

  std::string to_string() const;

 private:
  int trunc_;
  std::vector<Integer> coeffs_;
};

/// (q;q)_n = prod_{i=1}^n (1 - q^i), truncated.
QSeries q_pochhammer(int n, int trunc);
/// 1 / (q;q)_n, truncated.
QSeries inverse_q_pochhammer(int n, int trunc);

/// [a choose b]_q, truncated after degree trunc.
QSeries gaussian_binomial(int a, int b, int trunc);
/// Sum over family-zero labels of q^inv(E).
QSeries inv_generating(int n, int m);
/// q^{m(m+1)/2} [N-1 choose m]_q.
QSeries Q_series(int n, int m, int trunc);

/// Generating series of column-strict hook tableaux with entries >= 0 for the
/// isotype of (family, m): q^{c(c-1)/2} / ((1 - q^N) (q;q)_{c-1} (q;q)_{r-1})
/// where c and r are the column and row lengths including the corner.
QSeries hook_series(int n, int m, Family family, int trunc);
/// Column-strict tableaux of the given degree, enumerated directly.
Integer count_column_strict(int n, int m, Family family, int degree);

/// Nondecreasing parts j_u <= k to the subset F with inv(F) = sum j_u.
SubsetE partition_to_subset(int k, int l, const std::vector<int>& parts);
std::vector<int> subset_to_partition(int k, int l, const SubsetE& subset);

}  // namespace jack
