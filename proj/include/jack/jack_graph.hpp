#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "jack/hook_tableaux.hpp"
#include "jack/superpoly.hpp"

namespace jack {

/// r(i) = #{j : alpha_j > alpha_i} + #{j <= i : alpha_j = alpha_i}; 1-based values.
std::vector<int> rank_function(const Composition& alpha);

/// Dominance on compositions of equal degree (partial sums from the left).
bool dominance_leq(const Composition& a, const Composition& b);
/// beta strictly below alpha in the triangularity order.
bool order_below(const Composition& beta, const Composition& alpha);

/// zeta_i = degree_part + kappa * content_part
struct SpectralEntry {
  int degree_part = 0;
  int content_part = 0;
  KField value() const;
};

std::vector<SpectralEntry> spectral_vector(const Composition& alpha, const HookLabel& label);
/// kappa / (zeta_i - zeta_{i+1}); raises DegenerateSpectralGap when zeta_i = zeta_{i+1}.
KField b_coeff(const Composition& alpha, const HookLabel& label, int i);

enum class MoveKind { Affine, Step };
struct Move {
  MoveKind kind = MoveKind::Affine;
  int index = 0;
};
/// Moves leading from the zero composition to alpha (same label throughout).
std::vector<Move> canonical_path(const Composition& alpha);
/// (a_2, ..., a_N, a_1 + 1)
Composition affine_image(const Composition& alpha);

/// x^alpha * (r_alpha^{-1} T_E)
SuperPoly leading_block(const Composition& alpha, const HookLabel& label);

/// Nonsymmetric eigenfunction indexed by (alpha, E); memoized.
SuperPoly build_jack(const Composition& alpha, const HookLabel& label);
/// U_i p = zeta_i p for every i.
bool verify_eigen(const SuperPoly& p, const Composition& alpha, const HookLabel& label);

/// How s_i acts when alpha_i = alpha_{i+1}.
enum class EqualPairCase { SignMinus, SignPlus, JumpForward, JumpBackward };
EqualPairCase classify_equal_pair(const Composition& alpha, const HookLabel& label, int i);

struct JumpResult {
  HookLabel label;
  SuperPoly value;
};
/// For alpha_i = alpha_{i+1} with a genuine label change: (s_i - b) J_{alpha,E}
/// normalized to J_{alpha, s_j E}. Raises UnsupportedMove for the sign cases.
JumpResult apply_jump(const SuperPoly& j, const Composition& alpha, const HookLabel& label, int i);

struct JackCacheStats {
  std::size_t entries = 0;
  std::size_t capacity = 0;
  std::size_t hits = 0;
  std::size_t misses = 0;
};
void set_jack_cache_capacity(std::size_t capacity);
void clear_jack_cache();
JackCacheStats jack_cache_stats();
/// Empty string disables the on-disk store.
void set_jack_disk_cache(const std::string& directory);

}  // namespace jack
