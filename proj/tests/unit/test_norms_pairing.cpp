#include "jack/norms_pairing.hpp"

#include "jack/jack_graph.hpp"
#include "jack/supersymmetrize.hpp"
#include "support.hpp"

using namespace jack;
using namespace jack::testing;

namespace {

struct Node {
  Composition alpha;
  HookLabel label;
};

std::vector<Node> nodes_of(int n, int m, int degree) {
  std::vector<Node> out;
  for (Family f : {Family::Zero, Family::One}) {
    for (const HookLabel& l : all_labels(n, m, f)) {
      for (const Composition& a : compositions_of(n, degree)) out.push_back(Node{a, l});
    }
  }
  return out;
}

Composition reversed(const Composition& a) {
  std::vector<int> v = a.to_vector();
  std::reverse(v.begin(), v.end());
  return Composition(v);
}

}  // namespace

TEST_CASE("pairing is symmetric and invariant under the symmetric group") {
  std::mt19937_64 rng(41);
  for (int n = 2; n <= 4; ++n) {
    for (int m = 0; m <= n; ++m) {
      const SuperPoly f = random_superpoly(rng, n, m, 3, 5);
      const SuperPoly g = random_superpoly(rng, n, m, 3, 5);
      CHECK(pairing_oracle(f, g) == pairing_oracle(g, f));
      for (int i = 1; i < n; ++i) CHECK(pairing_oracle(sp_apply_si(i, f), sp_apply_si(i, g)) == pairing_oracle(f, g));
      for (int i = 1; i <= n; ++i) CHECK(pairing_oracle(mul_x(i, f), g) == pairing_oracle(f, dunkl_D(i, g)));
    }
  }
}

TEST_CASE("degree zero pairing is the orthonormal form") {
  const SuperPoly a = SuperPoly::from_fermion(Composition::zeros(3), FermionPoly::basis(set_of(3, {1})));
  const SuperPoly b = SuperPoly::from_fermion(Composition::zeros(3), FermionPoly::basis(set_of(3, {2})));
  CHECK(pairing_oracle(a, a) == KField(1L));
  CHECK(pairing_oracle(a, b).is_zero());
  CHECK(pairing_oracle(a, SuperPoly(3, 2)).is_zero());
}

TEST_CASE("product building blocks") {
  const HookLabel label = HookLabel::make(Family::Zero, 2, set_of(4, {2, 3, 4}));
  CHECK(P_product(Composition::zeros(4), label) == KField(1L));
  CHECK(R_product(0, comp({2, 1, 1, 0}), label) == KField(1L));
  CHECK(R_product(1, comp({3, 3, 0, 0}), label) == KField(1L));
  CHECK(C_product(0, root_label(4, 2, Family::Zero)) == 1);
  CHECK(pi0(1, -1) == lin(1, -2) / lin(1, -1));
  CHECK(pi0(2, 0) == lin(2, -1) / KField(2L) * (KField(1L) - kKappa * kKappa));
  CHECK(error_name([] { pi0(0, 1); }) != "");
}

TEST_CASE("telescoped form of P over R0") {
  for (int n = 2; n <= 4; ++n) {
    for (int m = 1; m < n; ++m) {
      for (int d = 0; d <= 4; ++d) {
        for (const Composition& a : compositions_of(n, d)) {
          if (!a.is_partition()) continue;
          for (Family f : {Family::Zero, Family::One}) {
            for (const HookLabel& l : all_labels(n, m, f)) {
              CHECK(P_over_R0_telescoped(a, l) == P_product(a, l) / R_product(0, reversed(a), l));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("worked norm") {
  const HookLabel label = HookLabel::make(Family::Zero, 2, set_of(4, {2, 3, 4}));
  const NormReport r = jack_norm(comp({0, 1, 1, 0}), label, true);
  CHECK(r.value == KField(3L) * lin(1, -3) * lin(1, 2) * lin(1, -1) / (lin(1, 1) * lin(1, -2)));
  CHECK(r.oracle_agrees());
  CHECK(jack_norm(Composition::zeros(4), label).value == KField(T_norm_sq(label)));
  const KField pochhammer = kf_rising(lin(1, content(label, 1)), 1) * kf_rising(lin(1, content(label, 2)), 1);
  CHECK(pochhammer == lin(1, 1) * lin(1, -2));
  CHECK(torus_norm(comp({0, 1, 1, 0}), label) == r.value / pochhammer);
}

TEST_CASE("closed norms agree with the pairing and distinct nodes are orthogonal") {
  for (int n = 2; n <= 3; ++n) {
    for (int m = 1; m < n; ++m) {
      for (int d = 0; d <= 3; ++d) {
        const auto nodes = nodes_of(n, m, d);
        std::vector<SuperPoly> polys;
        for (const Node& node : nodes) polys.push_back(build_jack(node.alpha, node.label));
        for (std::size_t a = 0; a < nodes.size(); ++a) {
          PairingTable table(polys[a]);
          CHECK(table.pair(polys[a]) == jack_norm(nodes[a].alpha, nodes[a].label).value);
          for (std::size_t b = a + 1; b < nodes.size(); ++b) CHECK(table.pair(polys[b]).is_zero());
        }
      }
    }
  }
}

TEST_CASE("norms are positive for small kappa") {
  for (const Node& node : nodes_of(4, 2, 3)) {
    const KField norm = jack_norm(node.alpha, node.label).value;
    for (const Rational& at : {Rational(0), Rational(1, 9), Rational(-1, 9)}) CHECK(kf_eval(norm, at).value > 0);
  }
}

TEST_CASE("supersymmetric norm of the four variable example") {
  const NormReport r = supersym_norm(comp({2, 1, 1, 0}), HookLabel::make(Family::Zero, 2, set_of(4, {1, 3, 4})), true);
  REQUIRE(r.constant);
  REQUIRE(r.kappa_part);
  CHECK(*r.kappa_part * KField(*r.constant) == r.value);
  CHECK(r.value == KField(*r.constant) * lin(1, -2) * lin(2, -3) * lin(1, -4));
  CHECK(*r.constant == 24);
  CHECK(r.oracle_agrees());
  CHECK(error_name([] { supersym_norm(comp({2, 1, 1, 0}), HookLabel::make(Family::Zero, 2, set_of(4, {2, 3, 4}))); }) ==
        "NotColumnStrict");
}

TEST_CASE("minimal norms match the pairing") {
  for (int n = 3; n <= 4; ++n) {
    for (int m = 1; n - m >= 2; ++m) {
      for (int s = 0; s <= m - 1; ++s) {
        for (int k = 0; k <= n - m - 2; ++k) {
          const MinimalNormCase c = minimal_norm(n, m, s, k);
          const SuperPoly p = build_supersymmetric(c.lambda, c.label);
          CHECK(pairing_oracle(p, p) == c.report.value);
          CHECK(supersym_norm(c.lambda, c.label).value == c.report.value);
        }
      }
    }
  }
  CHECK(error_name([] { minimal_norm(4, 3, 0, 0); }) == "InvalidArgument");
  CHECK(error_name([] { minimal_norm(5, 2, 2, 0); }) == "InvalidArgument");
}
