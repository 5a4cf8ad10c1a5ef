#include "jack/kappa_field.hpp"

#include "support.hpp"

using namespace jack;
using namespace jack::testing;

TEST_CASE("normalization reduces common factors and fixes the denominator sign") {
  const RatPoly two_k2({0, 0, 2});
  const RatPoly four_k({0, 4});
  const KField reduced = kf_normalize(two_k2, four_k);
  CHECK(reduced == kKappa / KField(2L));
  CHECK(reduced.den() == RatPoly::constant(1));

  const KField zero = kf_normalize(RatPoly(), RatPoly({1, 1}));
  CHECK(zero.is_zero());
  CHECK(zero == KField());

  const RatPoly num({1, -2});
  const RatPoly den({-2, 4});
  const KField half = kf_normalize(num, den);
  CHECK(half == KField(Rational(-1, 2)));
  CHECK(half.num() * den == num * half.den());
  CHECK(sgn(half.den().coeffs().back()) > 0);

  CHECK(error_name([] { kf_normalize(RatPoly({1}), RatPoly()); }) == "ZeroDenominator");
}

TEST_CASE("normalizing with a common nonzero factor is invisible") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const RatPoly num = random_poly(rng, 3);
    RatPoly den = random_poly(rng, 3);
    RatPoly factor = random_poly(rng, 2);
    if (den.is_zero() || factor.is_zero()) continue;
    CHECK(kf_normalize(num * factor, den * factor) == kf_normalize(num, den));
    const KField x = kf_normalize(num, den);
    CHECK(kf_normalize(x.num(), x.den()) == x);
  }
}

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 60; ++trial) {
    const KField a = random_kfield(rng);
    const KField b = random_kfield(rng);
    const KField c = random_kfield(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + KField() == a);
    CHECK(a - a == KField());
    CHECK(a * KField(1L) == a);
    if (!a.is_zero()) {
      CHECK(a / a == KField(1L));
      CHECK(a * a.inverse() == KField(1L));
    }
    CHECK(kf_arith(a, b, ArithOp::Sub) == a - b);
    CHECK((a * b).negate_kappa() == a.negate_kappa() * b.negate_kappa());
    CHECK(a.negate_kappa().negate_kappa() == a);
  }
  CHECK(error_name([] { (void)(KField(1L) / KField()); }) == "DivisionByZero");
}

TEST_CASE("arithmetic examples") {
  const KField pole = KField(1L) / lin(1, -2);
  CHECK(pole * lin(1, -2) == KField(1L));
  const KField norm = KField(3L) * lin(1, -3) * lin(1, 2) * lin(1, -1) / (lin(1, 1) * lin(1, -2));
  const KField expanded = KField::from_polys(norm.num(), norm.den());
  CHECK(expanded == norm);
  CHECK(kf_eval(norm / KField(3L), Rational(0)).value == 1);
}

TEST_CASE("evaluation") {
  CHECK(kf_eval(kKappa / lin(1, 1), Rational(1, 3)).value == Rational(1, 4));
  CHECK(error_name([] { kf_eval(KField(1L) / lin(1, -2), Rational(1, 2)); }) == "PoleAtPoint");
  CHECK(kf_eval(kKappa, Rational(2, 3), 4).non_generic);
  CHECK_FALSE(kf_eval(kKappa, Rational(2, 7), 4).non_generic);
}

TEST_CASE("evaluation is a ring homomorphism away from poles") {
  std::mt19937_64 rng(99);
  int checked = 0;
  for (int trial = 0; trial < 80; ++trial) {
    const KField a = random_kfield(rng);
    const KField b = random_kfield(rng);
    const Rational at = random_rational(rng, 11);
    try {
      const Rational va = kf_eval(a, at).value;
      const Rational vb = kf_eval(b, at).value;
      CHECK(kf_eval(a + b, at).value == va + vb);
      CHECK(kf_eval(a * b, at).value == va * vb);
      ++checked;
    } catch (const Error& e) {
      CHECK(e.name() == "PoleAtPoint");
    }
  }
  CHECK(checked > 40);
}

TEST_CASE("rising factorial") {
  CHECK(kf_rising(lin(1, 1), 0) == KField(1L));
  CHECK(kf_rising(lin(1, -2), 2) == lin(1, -2) * lin(2, -2));
  const Rational value = kf_eval(kf_rising(lin(1, 3), 3), Rational(1, 5)).value;
  CHECK(value == Rational(8, 5) * Rational(13, 5) * Rational(18, 5));
}

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(parse_rational("5") == 5);
  CHECK(rational_string(Rational(-3, 2)) == "-3/2");
  CHECK(error_name([] { parse_rational("1/0"); }) != "");
  CHECK(error_name([] { parse_rational("abc"); }) != "");
  CHECK(KField().to_string() == "0");
}
