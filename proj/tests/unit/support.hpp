#pragma once

#include <functional>
#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "jack/errors.hpp"
#include "jack/hook_tableaux.hpp"
#include "jack/kappa_field.hpp"
#include "jack/superpoly.hpp"

namespace doctest {
template <>
struct StringMaker<jack::KField> {
  static String convert(const jack::KField& x) { return x.to_string().c_str(); }
};
template <>
struct StringMaker<jack::FermionPoly> {
  static String convert(const jack::FermionPoly& x) { return x.to_string().c_str(); }
};
template <>
struct StringMaker<jack::SuperPoly> {
  static String convert(const jack::SuperPoly& x) { return x.to_string().c_str(); }
};
template <>
struct StringMaker<jack::Rational> {
  static String convert(const jack::Rational& x) { return x.get_str().c_str(); }
};
}  // namespace doctest

namespace jack::testing {

inline const KField kKappa = KField::kappa();

inline KField lin(long constant, long kappa_coeff) {
  return KField::linear(Rational(constant), Rational(kappa_coeff));
}

inline SubsetE set_of(int n, std::initializer_list<int> positions) { return SubsetE::from_positions(n, positions); }

inline Composition comp(std::initializer_list<int> parts) { return Composition(std::vector<int>(parts)); }

inline std::string error_name(const std::function<void()>& action) {
  try {
    action();
  } catch (const Error& e) {
    return e.name();
  }
  return "";
}

inline Rational random_rational(std::mt19937_64& rng, int span = 5) {
  std::uniform_int_distribution<int> top(-span, span);
  std::uniform_int_distribution<int> bottom(1, span);
  Rational r(top(rng), bottom(rng));
  r.canonicalize();
  return r;
}

inline RatPoly random_poly(std::mt19937_64& rng, int max_degree) {
  std::uniform_int_distribution<int> degree(0, max_degree);
  std::vector<Rational> coeffs;
  const int d = degree(rng);
  for (int k = 0; k <= d; ++k) coeffs.push_back(random_rational(rng));
  return RatPoly(coeffs);
}

inline KField random_kfield(std::mt19937_64& rng, int max_degree = 2) {
  RatPoly den = random_poly(rng, max_degree);
  while (den.is_zero()) den = random_poly(rng, max_degree);
  return KField::from_polys(random_poly(rng, max_degree), den);
}

/// Random element of sP_m with monomials of degree at most max_degree.
inline SuperPoly random_superpoly(std::mt19937_64& rng, int n, int m, int max_degree, int terms) {
  std::vector<std::uint32_t> masks;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    if (SubsetE(n, mask).size() == m) masks.push_back(mask);
  }
  std::uniform_int_distribution<std::size_t> pick_mask(0, masks.size() - 1);
  std::uniform_int_distribution<int> exponent(0, max_degree);
  std::uniform_int_distribution<int> coefficient(-3, 3);
  SuperPoly out(n, m);
  for (int t = 0; t < terms; ++t) {
    Composition alpha = Composition::zeros(n);
    int budget = max_degree;
    for (int i = 1; i <= n && budget > 0; ++i) {
      const int e = std::min(budget, exponent(rng) / 2);
      alpha.set(i, e);
      budget -= e;
    }
    const int c = coefficient(rng);
    if (c != 0) out.add_term(alpha, masks[pick_mask(rng)], KField(static_cast<long>(c)) + kKappa * KField(static_cast<long>(t % 2)));
  }
  return out;
}

inline std::vector<HookLabel> all_labels(int n, int m, Family family) {
  std::vector<HookLabel> out;
  for (const SubsetE& e : labels_of(n, m, family)) out.push_back(HookLabel::make(family, m, e));
  return out;
}

}  // namespace jack::testing
