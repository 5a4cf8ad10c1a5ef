#include "jack/jack_graph.hpp"

#include <filesystem>

#include "support.hpp"

using namespace jack;
using namespace jack::testing;

namespace {

struct Node {
  Composition alpha;
  HookLabel label;
};

std::vector<Node> nodes_up_to(int max_n, int max_degree) {
  std::vector<Node> out;
  for (int n = 2; n <= max_n; ++n) {
    for (int m = 1; m < n; ++m) {
      for (Family f : {Family::Zero, Family::One}) {
        for (const HookLabel& l : all_labels(n, m, f)) {
          for (int d = 0; d <= max_degree; ++d) {
            for (const Composition& a : compositions_of(n, d)) out.push_back(Node{a, l});
          }
        }
      }
    }
  }
  return out;
}

const HookLabel kExampleLabel = HookLabel::make(Family::Zero, 2, set_of(4, {2, 3, 4}));
const Composition kExampleAlpha = comp({0, 1, 1, 0});

}  // namespace

TEST_CASE("rank function") {
  CHECK(rank_function(comp({1, 2, 0, 5, 4, 5})) == std::vector<int>{5, 4, 6, 1, 3, 2});
  CHECK(rank_function(comp({3, 2, 2, 0})) == std::vector<int>{1, 2, 3, 4});
  CHECK(rank_function(Composition::zeros(5)) == std::vector<int>{1, 2, 3, 4, 5});
  for (const Composition& a : compositions_of(4, 3)) {
    const auto r = rank_function(a);
    const Composition plus = sorted_decreasing(a);
    for (int i = 1; i <= 4; ++i) CHECK(plus.at(r[static_cast<std::size_t>(i - 1)]) == a.at(i));
  }
}

TEST_CASE("orders on compositions") {
  CHECK(dominance_leq(comp({1, 1, 1}), comp({3, 0, 0})));
  CHECK_FALSE(dominance_leq(comp({3, 0, 0}), comp({1, 1, 1})));
  CHECK(order_below(comp({1, 1, 0}), comp({2, 0, 0})));
  CHECK(order_below(comp({0, 2, 0}), comp({2, 0, 0})));
  CHECK_FALSE(order_below(comp({2, 0, 0}), comp({2, 0, 0})));
}

TEST_CASE("spectral vector and step coefficients") {
  const auto z = spectral_vector(kExampleAlpha, kExampleLabel);
  const std::vector<KField> expected{lin(1, -1), lin(2, 1), lin(2, -2), lin(1, 0)};
  for (std::size_t i = 0; i < 4; ++i) CHECK(z[i].value() == expected[i]);
  CHECK(b_coeff(kExampleAlpha, kExampleLabel, 1) == -kKappa / lin(1, 2));

  for (const HookLabel& l : all_labels(5, 2, Family::Zero)) {
    const auto z0 = spectral_vector(Composition::zeros(5), l);
    for (int i = 1; i <= 5; ++i) CHECK(z0[static_cast<std::size_t>(i - 1)].value() == lin(1, content(l, i)));
    for (int i = 1; i < 5; ++i) {
      const int d = content(l, i) - content(l, i + 1);
      CHECK(b_coeff(Composition::zeros(5), l, i) == KField(Rational(1, d)));
    }
  }
}

TEST_CASE("worked example") {
  const SuperPoly j = build_jack(kExampleAlpha, kExampleLabel);
  CHECK(verify_eigen(j, kExampleAlpha, kExampleLabel));
  CHECK(j.coeff(comp({0, 1, 0, 1}), set_of(4, {1, 4})) == -kKappa / lin(1, -2));
  CHECK(j.coeff(comp({0, 0, 1, 1}), set_of(4, {1, 2})) == kKappa * lin(1, -1) / (lin(1, -2) * lin(1, 1)));
  CHECK(j.size() == 11);
}

TEST_CASE("canonical path reaches its target") {
  for (const Composition& a : compositions_of(4, 4)) {
    Composition at = Composition::zeros(4);
    for (const Move& mv : canonical_path(a)) {
      at = mv.kind == MoveKind::Affine ? affine_image(at) : at.swapped(mv.index, mv.index + 1);
    }
    CHECK(at == a);
  }
  CHECK(canonical_path(Composition::zeros(3)).empty());
}

TEST_CASE("every node is a simultaneous eigenfunction with a triangular expansion") {
  for (const Node& node : nodes_up_to(4, 3)) {
    const SuperPoly j = build_jack(node.alpha, node.label);
    CHECK(verify_eigen(j, node.alpha, node.label));
    CHECK(j.bosonic_degree() == node.alpha.degree());
    CHECK(j.fermion_part(node.alpha) == leading_block(node.alpha, node.label).fermion_part(node.alpha));
    bool triangular = true;
    for (const auto& [key, c] : j.terms()) triangular = triangular && (key.alpha == node.alpha || order_below(key.alpha, node.alpha));
    CHECK(triangular);
  }
}

TEST_CASE("steps and affine moves relate neighbouring nodes") {
  for (const Node& node : nodes_up_to(4, 2)) {
    const SuperPoly j = build_jack(node.alpha, node.label);
    CHECK(affine_shift(j) == build_jack(affine_image(node.alpha), node.label));
    for (int i = 1; i < node.alpha.size(); ++i) {
      if (node.alpha.at(i) >= node.alpha.at(i + 1)) continue;
      const KField b = b_coeff(node.alpha, node.label, i);
      const SuperPoly stepped = sp_apply_si(i, j) - j * b;
      CHECK(stepped == build_jack(node.alpha.swapped(i, i + 1), node.label));
      const SuperPoly back = sp_apply_si(i, stepped) + stepped * b;
      CHECK(back == j * (KField(1L) - b * b));
    }
  }
}

TEST_CASE("equal neighbouring exponents") {
  int jumps = 0;
  int signs = 0;
  for (const Node& node : nodes_up_to(4, 3)) {
    const SuperPoly j = build_jack(node.alpha, node.label);
    for (int i = 1; i < node.alpha.size(); ++i) {
      if (node.alpha.at(i) != node.alpha.at(i + 1)) {
        CHECK(error_name([&] { classify_equal_pair(node.alpha, node.label, i); }) == "UnsupportedMove");
        continue;
      }
      const EqualPairCase kind = classify_equal_pair(node.alpha, node.label, i);
      if (kind == EqualPairCase::SignPlus || kind == EqualPairCase::SignMinus) {
        const long sign = kind == EqualPairCase::SignPlus ? 1 : -1;
        CHECK(sp_apply_si(i, j) == j * KField(sign));
        CHECK(error_name([&] { apply_jump(j, node.alpha, node.label, i); }) == "UnsupportedMove");
        ++signs;
      } else {
        const JumpResult jump = apply_jump(j, node.alpha, node.label, i);
        CHECK(jump.value == build_jack(node.alpha, jump.label));
        CHECK(verify_eigen(jump.value, node.alpha, jump.label));
        ++jumps;
      }
    }
  }
  CHECK(jumps > 0);
  CHECK(signs > 0);
}

TEST_CASE("degenerate spectral gaps are reported") {
  const HookLabel label = HookLabel::make(Family::Zero, 1, set_of(3, {2, 3}));
  CHECK(error_name([&] { b_coeff(comp({0, 0, 0}), label, 3); }) != "");
}

TEST_CASE("node cache") {
  clear_jack_cache();
  set_jack_cache_capacity(8);
  const SuperPoly first = build_jack(kExampleAlpha, kExampleLabel);
  const JackCacheStats after_build = jack_cache_stats();
  CHECK(after_build.capacity == 8);
  CHECK(after_build.entries <= 8);
  CHECK(after_build.misses > 0);
  CHECK(build_jack(kExampleAlpha, kExampleLabel) == first);
  CHECK(jack_cache_stats().hits > after_build.hits);
  set_jack_cache_capacity(4096);
  clear_jack_cache();
  CHECK(jack_cache_stats().entries == 0);
}

TEST_CASE("disk cache returns identical nodes") {
  const auto dir = std::filesystem::temp_directory_path() / "jack_unit_disk_cache";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  set_jack_disk_cache(dir.string());
  clear_jack_cache();
  const Composition alpha = comp({2, 0, 1});
  const HookLabel label = HookLabel::make(Family::One, 2, set_of(3, {1}));
  const SuperPoly fresh = build_jack(alpha, label);
  CHECK_FALSE(std::filesystem::is_empty(dir));
  clear_jack_cache();
  CHECK(build_jack(alpha, label) == fresh);
  set_jack_disk_cache("");
  std::filesystem::remove_all(dir);
}
