#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "jack/kappa_field.hpp"

namespace jack {

inline bool is_zero_entry(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero_entry(const KField& x) { return x.is_zero(); }

/// Rank by Gaussian elimination over an exact field (Rational or KField).
template <typename Field>
std::size_t matrix_rank(std::vector<std::vector<Field>> rows) {
  std::size_t rank = 0;
  const std::size_t width = rows.empty() ? 0 : rows.front().size();
  for (std::size_t col = 0; col < width && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && is_zero_entry(rows[pivot][col])) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (is_zero_entry(rows[r][col])) continue;
      const Field factor = rows[r][col] / rows[rank][col];
      for (std::size_t c = col; c < width; ++c) rows[r][c] -= factor * rows[rank][c];
    }
    ++rank;
  }
  return rank;
}

}  // namespace jack
