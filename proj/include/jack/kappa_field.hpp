#pragma once

#include <gmpxx.h>

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace jack {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense polynomial in kappa with rational coefficients, constant term first.
/// Zero is the empty coefficient list.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> coeffs);
  static RatPoly constant(const Rational& c);
  static RatPoly kappa();

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int k) const;
  Rational eval(const Rational& x) const;

  friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  RatPoly operator-() const;
  friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

struct EvalResult {
  Rational value;
  bool non_generic = false;
};

enum class ArithOp { Add, Sub, Mul, Div };

/// Element of Q(kappa) kept in a unique reduced form:
///   value = scale * num / den
/// with num and den primitive integer polynomials of positive leading
/// coefficient and gcd(num, den) = 1. Zero has scale 0 and num = den = 1.
class KField {
 public:
  KField();
  KField(long v);  // NOLINT(google-explicit-constructor)
  explicit KField(const Rational& v);
  static KField kappa();
  /// a + b*kappa
  static KField linear(const Rational& a, const Rational& b);
  static KField from_polys(const RatPoly& num, const RatPoly& den);

  RatPoly num() const;
  RatPoly den() const;
  const Rational& scale() const { return scale_; }

  bool is_zero() const { return sgn(scale_) == 0; }
  bool is_constant() const { return num_.size() == 1 && den_.size() == 1; }
  bool is_polynomial() const { return den_.size() == 1; }
  std::optional<Rational> as_rational() const;

  KField& operator+=(const KField& o);
  KField& operator-=(const KField& o);
  KField& operator*=(const KField& o);
  KField& operator/=(const KField& o);
  friend KField operator+(KField a, const KField& b) { return a += b; }
  friend KField operator-(KField a, const KField& b) { return a -= b; }
  friend KField operator*(KField a, const KField& b) { return a *= b; }
  friend KField operator/(KField a, const KField& b) { return a /= b; }
  KField operator-() const;
  friend bool operator==(const KField& a, const KField& b) {
    return a.scale_ == b.scale_ && a.num_ == b.num_ && a.den_ == b.den_;
  }

  KField inverse() const;
  /// Image under kappa -> -kappa.
  KField negate_kappa() const;
  EvalResult eval(const Rational& at, int ambient_n = 0) const;

  friend KField kf_normalize(const RatPoly& num, const RatPoly& den);
  std::string to_string() const;

 private:
  Rational scale_;
  std::vector<Integer> num_;
  std::vector<Integer> den_;
};

KField kf_normalize(const RatPoly& num, const RatPoly& den);
KField kf_arith(const KField& a, const KField& b, ArithOp op);
/// Raises PoleAtPoint when the denominator vanishes. The flag marks kappa = p/q
/// with 1 <= q <= ambient_n (only checked when ambient_n > 0).
EvalResult kf_eval(const KField& x, const Rational& at, int ambient_n = 0);
/// (x)_n = x (x+1) ... (x+n-1)
KField kf_rising(const KField& x, unsigned n);

std::string rational_string(const Rational& q);
/// Writes "c·monomial" as a summand: sign pulled out, sums parenthesized, unit coefficients dropped.
void append_term(std::ostream& out, const KField& c, const std::string& monomial, bool first);
Rational parse_rational(const std::string& text);

}  // namespace jack
