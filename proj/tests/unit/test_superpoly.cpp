#include "jack/superpoly.hpp"

#include "support.hpp"

using namespace jack;
using namespace jack::testing;

namespace {

SuperPoly s(int i, const SuperPoly& p) { return sp_apply_si(i, p); }

SuperPoly sample(std::mt19937_64& rng, int n, int m) { return random_superpoly(rng, n, m, 3, 6); }

}  // namespace

TEST_CASE("compositions") {
  const Composition a = comp({1, 2, 0, 5, 4, 5});
  CHECK(a.degree() == 17);
  CHECK_FALSE(a.is_partition());
  CHECK(sorted_decreasing(a) == comp({5, 5, 4, 2, 1, 0}));
  CHECK(sorted_increasing(a) == comp({0, 1, 2, 4, 5, 5}));
  CHECK(compositions_of(3, 2).size() == 6);
  CHECK(rearrangements(comp({2, 1, 1})).size() == 3);
  CHECK(rearrangements(comp({2, 1, 1})).front() == comp({1, 1, 2}));
  CHECK(error_name([] { comp({1, -1}); }) != "");
  CHECK(error_name([] { Composition::zeros(3).set(1, kMaxExponent + 1); }) != "");
}

TEST_CASE("symmetric group relations on superpolynomials") {
  std::mt19937_64 rng(5);
  for (int n = 2; n <= 4; ++n) {
    for (int m = 0; m <= n; ++m) {
      const SuperPoly p = sample(rng, n, m);
      for (int i = 1; i < n; ++i) {
        CHECK(s(i, s(i, p)) == p);
        if (i + 1 < n) CHECK(s(i, s(i + 1, s(i, p))) == s(i + 1, s(i, s(i + 1, p))));
      }
      Permutation w = identity_permutation(n);
      std::shuffle(w.begin(), w.end(), rng);
      Permutation v = identity_permutation(n);
      std::shuffle(v.begin(), v.end(), rng);
      CHECK(sp_apply_perm(compose(w, v), p) == sp_apply_perm(w, sp_apply_perm(v, p)));
    }
  }
}

TEST_CASE("equal exponents on a pair inside E give a sign") {
  SuperPoly p(4, 2);
  p.add_term(comp({1, 1, 0, 2}), set_of(4, {1, 2}).mask(), KField(1L));
  CHECK(s(1, p) == -p);
}

TEST_CASE("Dunkl operators") {
  std::mt19937_64 rng(17);
  for (int n = 2; n <= 4; ++n) {
    for (int m = 0; m <= n; ++m) {
      const SuperPoly p = sample(rng, n, m);
      for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) CHECK(dunkl_D(i, dunkl_D(j, p)) == dunkl_D(j, dunkl_D(i, p)));
        if (i < n) CHECK(s(i, dunkl_D(i, s(i, p))) == dunkl_D(i + 1, p));
        SuperPoly commutator = dunkl_D(i, mul_x(i, p)) - mul_x(i, dunkl_D(i, p));
        SuperPoly expected = p;
        for (int j = 1; j <= n; ++j) {
          if (j != i) expected += sp_apply_transposition(i, j, p) * kKappa;
        }
        CHECK(commutator == expected);
        const SuperPoly dual_side = dunkl_D(i, sp_delta_dual(p).negate_kappa()).negate_kappa();
        CHECK(sp_delta_dual(dunkl_D(i, p)) == dual_side);
      }
    }
  }
}

TEST_CASE("Cherednik operators") {
  std::mt19937_64 rng(23);
  for (int n = 2; n <= 4; ++n) {
    for (int m = 0; m <= n; ++m) {
      const SuperPoly p = sample(rng, n, m);
      for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) CHECK(cherednik_U(i, cherednik_U(j, p)) == cherednik_U(j, cherednik_U(i, p)));
        if (i < n) CHECK(s(i, cherednik_U(i, s(i, p))) == cherednik_U(i + 1, p) + s(i, p) * kKappa);
      }
    }
  }
}

TEST_CASE("duality map on superpolynomials") {
  std::mt19937_64 rng(29);
  for (int n = 2; n <= 4; ++n) {
    for (int m = 0; m <= n; ++m) {
      const SuperPoly p = sample(rng, n, m);
      const SuperPoly dual = sp_delta_dual(p);
      CHECK(dual.m() == n - m);
      CHECK(sp_delta_dual(dual) == p * KField(static_cast<long>(sigma(m * (n - m)))));
      for (int i = 1; i < n; ++i) CHECK(sp_delta_dual(s(i, p)) == -s(i, dual));
    }
  }
}

TEST_CASE("affine shift substitutes cyclically and multiplies by the last variable") {
  SuperPoly p(3, 1);
  p.add_term(comp({2, 0, 1}), set_of(3, {3}).mask(), KField(1L));
  SuperPoly expected(3, 1);
  expected.add_term(comp({0, 1, 3}), set_of(3, {2}).mask(), KField(1L));
  CHECK(affine_shift(p) == expected);
}

TEST_CASE("symmetrization is invariant") {
  std::mt19937_64 rng(31);
  const SuperPoly p = symmetrize_sum(sample(rng, 3, 1));
  for (int i = 1; i < 3; ++i) CHECK(s(i, p) == p);
}

TEST_CASE("term bookkeeping") {
  SuperPoly p(3, 1);
  p.add_term(comp({1, 0, 0}), set_of(3, {2}).mask(), KField(2L));
  p.add_term(comp({1, 0, 0}), set_of(3, {2}).mask(), KField(-2L));
  CHECK(p.is_zero());
  CHECK(p.bosonic_degree() == -1);
  p.add_term(comp({1, 1, 0}), set_of(3, {2}).mask(), lin(1, -2));
  p.add_term(comp({2, 0, 0}), set_of(3, {1}).mask(), KField(1L));
  CHECK(p.bosonic_degree() == 2);
  CHECK(p.coeff(comp({1, 1, 0}), set_of(3, {2})) == lin(1, -2));
  CHECK(p.fermion_part(comp({2, 0, 0})) == FermionPoly::basis(set_of(3, {1})));
  p.add_term(comp({0, 0, 0}), set_of(3, {1}).mask(), KField(1L));
  CHECK(error_name([&] { p.bosonic_degree(); }) != "");
  CHECK_THROWS_AS(p.add_term(comp({0, 0, 0}), set_of(3, {1, 2}).mask(), KField(1L)), Error);
  CHECK_THROWS_AS(p += SuperPoly(4, 1), Error);
}
