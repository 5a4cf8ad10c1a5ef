#include "jack/kappa_field.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "jack/errors.hpp"

namespace jack {

namespace {

using ZPoly = std::vector<Integer>;

void trim(ZPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

bool is_unit(const ZPoly& p) { return p.size() == 1 && p[0] == 1; }

const ZPoly& unit_poly() {
  static const ZPoly one{Integer(1)};
  return one;
}

Integer content(const ZPoly& p) {
  Integer g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

// Divides out the content with the sign that leaves a positive leading
// coefficient and returns that signed content.
Integer make_primitive(ZPoly& p) {
  Integer g = content(p);
  if (sgn(p.back()) < 0) g = -g;
  if (g != 1) {
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
  return g;
}

ZPoly mul(const ZPoly& a, const ZPoly& b) {
  if (is_unit(a)) return b;
  if (is_unit(b)) return a;
  ZPoly r(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  return r;
}

ZPoly divexact(const ZPoly& a, const ZPoly& b) {
  if (is_unit(b)) return a;
  if (b.size() > a.size()) raise_internal("polynomial division with larger divisor");
  ZPoly r = a;
  ZPoly q(a.size() - b.size() + 1, Integer(0));
  const std::size_t db = b.size() - 1;
  const Integer& lb = b.back();
  for (std::size_t k = q.size(); k-- > 0;) {
    Integer& top = r[k + db];
    if (sgn(top) == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) {
      raise_internal("inexact polynomial division");
    }
    mpz_divexact(q[k].get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    for (std::size_t j = 0; j <= db; ++j) {
      mpz_submul(r[k + j].get_mpz_t(), q[k].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  for (std::size_t j = 0; j < db; ++j) {
    if (sgn(r[j]) != 0) raise_internal("inexact polynomial division");
  }
  return q;
}

ZPoly pseudo_remainder(ZPoly a, const ZPoly& b) {
  const std::size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    Integer la = a.back();
    Integer lb = b.back();
    Integer g = gcd(la, lb);
    la /= g;
    lb /= g;
    const std::size_t shift = a.size() - b.size();
    for (auto& c : a) c *= lb;
    for (std::size_t j = 0; j <= db; ++j) {
      mpz_submul(a[shift + j].get_mpz_t(), la.get_mpz_t(), b[j].get_mpz_t());
    }
    trim(a);
  }
  return a;
}

// Both arguments primitive with positive leading coefficient.
ZPoly gcd_primitive(const ZPoly& x, const ZPoly& y) {
  if (x.size() == 1 || y.size() == 1) return unit_poly();
  if (x == y) return x;
  ZPoly a = x;
  ZPoly b = y;
  if (a.size() < b.size()) std::swap(a, b);
  while (true) {
    ZPoly r = pseudo_remainder(std::move(a), b);
    if (r.empty()) return b;
    if (r.size() == 1) return unit_poly();
    make_primitive(r);
    a = std::move(b);
    b = std::move(r);
  }
}

// Writes p as scale * prim with prim primitive in Z[kappa], positive leading coefficient.
void split_rational(const RatPoly& p, Rational& scale, ZPoly& prim) {
  Integer lcm_den = 1;
  for (const auto& c : p.coeffs()) {
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
  }
  prim.clear();
  prim.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    prim.push_back(c.get_num() * (lcm_den / c.get_den()));
  }
  Integer g = make_primitive(prim);
  scale = Rational(g, lcm_den);
  scale.canonicalize();
}

// s1*p1 + s2*p2 written as S / L with S integral.
ZPoly combine(const Rational& s1, const ZPoly& p1, const Rational& s2, const ZPoly& p2,
              Integer& lcm_den) {
  mpz_lcm(lcm_den.get_mpz_t(), s1.get_den_mpz_t(), s2.get_den_mpz_t());
  const Integer k1 = s1.get_num() * (lcm_den / s1.get_den());
  const Integer k2 = s2.get_num() * (lcm_den / s2.get_den());
  ZPoly s(std::max(p1.size(), p2.size()), Integer(0));
  for (std::size_t i = 0; i < p1.size(); ++i) {
    mpz_addmul(s[i].get_mpz_t(), k1.get_mpz_t(), p1[i].get_mpz_t());
  }
  for (std::size_t i = 0; i < p2.size(); ++i) {
    mpz_addmul(s[i].get_mpz_t(), k2.get_mpz_t(), p2[i].get_mpz_t());
  }
  trim(s);
  return s;
}

std::string plain_rational(const Rational& q) { return q.get_str(); }

template <typename Coeff>
std::string poly_string(const std::vector<Coeff>& coeffs) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (sgn(coeffs[k]) == 0) continue;
    Rational c(coeffs[k]);
    const bool negative = sgn(c) < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      out << plain_rational(c);
      continue;
    }
    if (c != 1) out << plain_rational(c);
    out << "κ";
    if (k > 1) out << "^" << k;
  }
  if (first) out << "0";
  return out.str();
}

template <typename Coeff>
std::size_t term_count(const std::vector<Coeff>& coeffs) {
  return static_cast<std::size_t>(
      std::count_if(coeffs.begin(), coeffs.end(), [](const Coeff& c) { return sgn(c) != 0; }));
}

template <typename Coeff>
std::string wrapped(const std::vector<Coeff>& coeffs) {
  std::string s = poly_string(coeffs);
  return term_count(coeffs) > 1 ? "(" + s + ")" : s;
}

Rational horner(const ZPoly& p, const Rational& x) {
  Rational acc = 0;
  for (std::size_t k = p.size(); k-- > 0;) {
    acc = acc * x + Rational(p[k]);
  }
  return acc;
}

void negate_odd(ZPoly& p) {
  for (std::size_t k = 1; k < p.size(); k += 2) p[k] = -p[k];
}

}  // namespace

// ---------------------------------------------------------------- RatPoly

RatPoly::RatPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

RatPoly RatPoly::constant(const Rational& c) { return RatPoly(std::vector<Rational>{c}); }

RatPoly RatPoly::kappa() { return RatPoly(std::vector<Rational>{Rational(0), Rational(1)}); }

void RatPoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational RatPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rational(0);
  return coeffs_[static_cast<std::size_t>(k)];
}

Rational RatPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + coeffs_[k];
  return acc;
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
  std::vector<Rational> r(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) r[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) r[i] += b.coeffs_[i];
  return RatPoly(std::move(r));
}

RatPoly RatPoly::operator-() const {
  std::vector<Rational> r = coeffs_;
  for (auto& c : r) c = -c;
  return RatPoly(std::move(r));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) { return a + (-b); }

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return RatPoly();
  std::vector<Rational> r(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return RatPoly(std::move(r));
}

// ----------------------------------------------------------------- KField

KField::KField() : scale_(0), num_(unit_poly()), den_(unit_poly()) {}

KField::KField(long v) : scale_(v), num_(unit_poly()), den_(unit_poly()) {}

KField::KField(const Rational& v) : scale_(v), num_(unit_poly()), den_(unit_poly()) {
  scale_.canonicalize();
}

KField KField::kappa() {
  KField k(1L);
  k.num_ = ZPoly{Integer(0), Integer(1)};
  return k;
}

KField KField::linear(const Rational& a, const Rational& b) {
  return kf_normalize(RatPoly(std::vector<Rational>{a, b}), RatPoly::constant(1));
}

KField KField::from_polys(const RatPoly& num, const RatPoly& den) { return kf_normalize(num, den); }

KField kf_normalize(const RatPoly& num, const RatPoly& den) {
  if (den.is_zero()) raise("ZeroDenominator", "denominator polynomial is zero");
  KField out;
  if (num.is_zero()) return out;
  Rational sn;
  Rational sd;
  ZPoly pn;
  ZPoly pd;
  split_rational(num, sn, pn);
  split_rational(den, sd, pd);
  ZPoly g = gcd_primitive(pn, pd);
  KField r;
  r.scale_ = sn / sd;
  r.num_ = divexact(pn, g);
  r.den_ = divexact(pd, g);
  return r;
}

RatPoly KField::num() const {
  if (is_zero()) return RatPoly();
  std::vector<Rational> c;
  c.reserve(num_.size());
  for (const auto& k : num_) c.emplace_back(scale_ * Rational(k));
  return RatPoly(std::move(c));
}

RatPoly KField::den() const {
  std::vector<Rational> c;
  c.reserve(den_.size());
  for (const auto& k : den_) c.emplace_back(k);
  return RatPoly(std::move(c));
}

std::optional<Rational> KField::as_rational() const {
  if (!is_constant()) return std::nullopt;
  return scale_;
}

KField& KField::operator+=(const KField& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) {
    *this = o;
    return *this;
  }
  if (den_ == o.den_) {
    if (num_ == o.num_) {
      scale_ += o.scale_;
      if (sgn(scale_) == 0) *this = KField();
      return *this;
    }
    Integer lcm_den;
    ZPoly s = combine(scale_, num_, o.scale_, o.num_, lcm_den);
    if (s.empty()) {
      *this = KField();
      return *this;
    }
    Integer g = make_primitive(s);
    scale_ = Rational(g, lcm_den);
    scale_.canonicalize();
    if (!is_unit(den_)) {
      ZPoly h = gcd_primitive(s, den_);
      if (!is_unit(h)) {
        s = divexact(s, h);
        den_ = divexact(den_, h);
      }
    }
    num_ = std::move(s);
    return *this;
  }
  ZPoly g = gcd_primitive(den_, o.den_);
  ZPoly e1 = divexact(den_, g);
  ZPoly e2 = divexact(o.den_, g);
  Integer lcm_den;
  ZPoly s = combine(scale_, mul(num_, e2), o.scale_, mul(o.num_, e1), lcm_den);
  if (s.empty()) {
    *this = KField();
    return *this;
  }
  Integer c = make_primitive(s);
  ZPoly d = mul(den_, e2);
  if (!is_unit(g)) {
    ZPoly h = gcd_primitive(s, g);
    if (!is_unit(h)) {
      s = divexact(s, h);
      d = divexact(d, h);
    }
  }
  scale_ = Rational(c, lcm_den);
  scale_.canonicalize();
  num_ = std::move(s);
  den_ = std::move(d);
  return *this;
}

KField KField::operator-() const {
  KField r = *this;
  r.scale_ = -r.scale_;
  return r;
}

KField& KField::operator-=(const KField& o) { return *this += -o; }

KField& KField::operator*=(const KField& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) {
    *this = KField();
    return *this;
  }
  scale_ *= o.scale_;
  if (o.is_constant()) return *this;
  if (is_constant()) {
    num_ = o.num_;
    den_ = o.den_;
    return *this;
  }
  ZPoly g1 = gcd_primitive(num_, o.den_);
  ZPoly g2 = gcd_primitive(o.num_, den_);
  ZPoly n = mul(divexact(num_, g1), divexact(o.num_, g2));
  ZPoly d = mul(divexact(den_, g2), divexact(o.den_, g1));
  num_ = std::move(n);
  den_ = std::move(d);
  return *this;
}

KField KField::inverse() const {
  if (is_zero()) raise("DivisionByZero", "inverse of zero in Q(kappa)");
  KField r;
  r.scale_ = 1 / scale_;
  r.num_ = den_;
  r.den_ = num_;
  return r;
}

KField& KField::operator/=(const KField& o) { return *this *= o.inverse(); }

KField KField::negate_kappa() const {
  if (is_zero()) return *this;
  KField r = *this;
  negate_odd(r.num_);
  negate_odd(r.den_);
  if (sgn(r.num_.back()) < 0) {
    for (auto& c : r.num_) c = -c;
    r.scale_ = -r.scale_;
  }
  if (sgn(r.den_.back()) < 0) {
    for (auto& c : r.den_) c = -c;
    r.scale_ = -r.scale_;
  }
  return r;
}

EvalResult KField::eval(const Rational& at, int ambient_n) const {
  EvalResult out;
  Rational d = horner(den_, at);
  if (sgn(d) == 0) raise("PoleAtPoint", "denominator vanishes at kappa = " + at.get_str());
  out.value = is_zero() ? Rational(0) : scale_ * horner(num_, at) / d;
  if (ambient_n > 0) {
    Rational reduced = at;
    reduced.canonicalize();
    out.non_generic = reduced.get_den() <= ambient_n;
  }
  return out;
}

std::string KField::to_string() const {
  if (is_zero()) return "0";
  ZPoly n = num_;
  ZPoly d = den_;
  Rational s = scale_;
  auto lowest_negative = [](const ZPoly& poly) {
    for (const auto& c : poly) {
      if (sgn(c) != 0) return sgn(c) < 0;
    }
    return false;
  };
  if (d.size() > 1 && lowest_negative(d)) {
    for (auto& c : n) c = -c;
    for (auto& c : d) c = -c;
  }
  if (n.size() > 1 && lowest_negative(n)) {
    for (auto& c : n) c = -c;
    s = -s;
  }
  if (n.size() > 1 && s == -1) {
    for (auto& c : n) c = -c;
    s = 1;
  }
  std::string top;
  if (n.size() == 1) {
    top = plain_rational(s * Rational(n[0]));
  } else if (s == 1) {
    top = is_unit(d) ? poly_string(n) : wrapped(n);
  } else {
    top = plain_rational(s) + "·" + wrapped(n);
  }
  if (is_unit(d)) return top;
  return top + "/" + wrapped(d);
}

KField kf_arith(const KField& a, const KField& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
  }
  raise_internal("unknown arithmetic operation");
}

EvalResult kf_eval(const KField& x, const Rational& at, int ambient_n) { return x.eval(at, ambient_n); }

KField kf_rising(const KField& x, unsigned n) {
  KField acc(1L);
  for (unsigned i = 0; i < n; ++i) acc *= x + KField(static_cast<long>(i));
  return acc;
}

std::string rational_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0 || sgn(q.get_den()) == 0) {
    raise("ParseError", "malformed rational '" + text + "'");
  }
  q.canonicalize();
  return q;
}

void append_term(std::ostream& out, const KField& c, const std::string& monomial, bool first) {
  std::string coeff = c.to_string();
  const bool sum_like = c.is_polynomial() && coeff.find(' ') != std::string::npos;
  const bool negative = !sum_like && coeff[0] == '-';
  if (negative) coeff = coeff.substr(1);
  if (sum_like) coeff = "(" + coeff + ")";
  out << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
  if (monomial.empty()) {
    out << coeff;
  } else if (coeff == "1") {
    out << monomial;
  } else {
    out << coeff << "·" << monomial;
  }
}

}  // namespace jack
