#include "jack/hook_tableaux.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <tuple>

#include "jack/errors.hpp"

namespace jack {

namespace {

void check_dims(int n, int m) {
  if (n < 2 || n > kMaxN) raise("InvalidSize", "N must lie in 2.." + std::to_string(kMaxN));
  if (m < 1 || m > n - 1) raise("InvalidDegree", "m must lie in 1..N-1");
}

using TTable = std::map<std::uint32_t, FermionPoly>;

TTable build_family_zero(int n, int m) {
  TTable table;
  const auto order = labels_of(n, m, Family::Zero);
  for (const SubsetE& f : order) {
    if (table.empty()) {
      table.emplace(f.mask(), psi_vector(f, m));
      continue;
    }
    int step = 0;
    for (int i = 1; i + 1 < n; ++i) {
      if (f.contains(i) && !f.contains(i + 1)) {
        step = i;
        break;
      }
    }
    if (step == 0) raise_internal("no predecessor for family 0 label " + f.to_string());
    const SubsetE e = f.swapped(step);
    const auto it = table.find(e.mask());
    if (it == table.end()) raise_internal("predecessor not yet built");
    TStep next = T_step(HookLabel::make(Family::Zero, m, e), it->second, step);
    table.emplace(f.mask(), std::move(next.value));
  }
  return table;
}

TTable build_family_one_recursive(int n, int m) {
  TTable table;
  const auto order = labels_of(n, m, Family::One);
  for (const SubsetE& f : order) {
    if (table.empty()) {
      table.emplace(f.mask(), eta_vector(f, m));
      continue;
    }
    int step = 0;
    for (int i = 1; i < n; ++i) {
      if (!f.contains(i) && f.contains(i + 1)) {
        step = i;
        break;
      }
    }
    if (step == 0) raise_internal("no predecessor for family 1 label " + f.to_string());
    const SubsetE e = f.swapped(step);
    const auto it = table.find(e.mask());
    if (it == table.end()) raise_internal("predecessor not yet built");
    TStep next = T_step(HookLabel::make(Family::One, m, e), it->second, step);
    table.emplace(f.mask(), std::move(next.value));
  }
  return table;
}

const TTable& family_zero_table(int n, int m) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, TTable> cache;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find({n, m});
    if (it != cache.end()) return it->second;
  }
  TTable built = build_family_zero(n, m);
  std::lock_guard<std::mutex> lock(mutex);
  return cache.try_emplace({n, m}, std::move(built)).first->second;
}

}  // namespace

Family family_from_int(int k) {
  if (k == 0) return Family::Zero;
  if (k == 1) return Family::One;
  raise("InvalidFamily", "family must be 0 or 1");
}

HookLabel HookLabel::make(Family family, int m, const SubsetE& set) {
  check_dims(set.n(), m);
  const int n = set.n();
  if (family == Family::Zero) {
    if (set.size() != m + 1) raise("WrongCardinality", "family 0 label needs m+1 elements");
    if (!set.contains(n)) raise("InvalidLabel", "family 0 label must contain N");
  } else {
    if (set.size() != m - 1) raise("WrongCardinality", "family 1 label needs m-1 elements");
    if (set.contains(n)) raise("InvalidLabel", "family 1 label must not contain N");
  }
  return HookLabel{family, m, set};
}

std::vector<SubsetE> labels_of(int n, int m, Family family) {
  check_dims(n, m);
  std::vector<SubsetE> out;
  const int want = family == Family::Zero ? m + 1 : m - 1;
  const std::uint32_t top = 1U << (n - 1);
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    if (std::popcount(mask) != want) continue;
    const bool has_n = (mask & top) != 0;
    if (has_n != (family == Family::Zero)) continue;
    out.emplace_back(n, mask);
  }
  std::stable_sort(out.begin(), out.end(), [family](const SubsetE& a, const SubsetE& b) {
    const int ia = inv_count(a);
    const int ib = inv_count(b);
    if (ia != ib) return family == Family::Zero ? ia < ib : ia > ib;
    return a.mask() < b.mask();
  });
  return out;
}

HookLabel root_label(int n, int m, Family family) {
  check_dims(n, m);
  if (family == Family::Zero) return HookLabel::make(family, m, SubsetE::interval(n, n - m, n));
  return HookLabel::make(family, m, SubsetE::interval(n, 1, m - 1));
}

HookTableau tableau_of(const HookLabel& label) {
  HookTableau t;
  const SubsetE& e = label.set;
  std::vector<int> in = e.positions();
  std::vector<int> out = e.complement().positions();
  std::reverse(in.begin(), in.end());
  std::reverse(out.begin(), out.end());
  if (label.family == Family::Zero) {
    t.row.push_back(label.n());
    t.row.insert(t.row.end(), out.begin(), out.end());
    t.col.assign(in.begin() + 1, in.end());
  } else {
    t.row = out;
    t.col = in;
  }
  return t;
}

HookLabel label_from_tableau(Family family, int n, const HookTableau& tableau) {
  if (tableau.row.empty() || tableau.row.front() != n) raise("InvalidTableau", "corner must hold N");
  std::vector<int> cells = tableau.row;
  cells.insert(cells.end(), tableau.col.begin(), tableau.col.end());
  std::sort(cells.begin(), cells.end());
  for (int k = 0; k < static_cast<int>(cells.size()); ++k) {
    if (cells[static_cast<std::size_t>(k)] != k + 1 || static_cast<int>(cells.size()) != n) {
      raise("InvalidTableau", "entries must be 1..N once each");
    }
  }
  auto decreasing = [](const std::vector<int>& v) {
    return std::adjacent_find(v.begin(), v.end(), std::less_equal<int>()) == v.end();
  };
  std::vector<int> column{n};
  column.insert(column.end(), tableau.col.begin(), tableau.col.end());
  if (!decreasing(tableau.row) || !decreasing(column)) {
    raise("InvalidTableau", "entries must decrease along row and column");
  }
  const int col_len = static_cast<int>(tableau.col.size());
  if (family == Family::Zero) {
    return HookLabel::make(family, col_len, SubsetE::from_positions(n, column));
  }
  return HookLabel::make(family, col_len + 1, SubsetE::from_positions(n, tableau.col));
}

int content(const HookLabel& label, int i) {
  const SubsetE& e = label.set;
  if (label.family == Family::Zero) {
    return e.contains(i) ? -s_count(i, e) : s_count(i, e.complement()) + 1;
  }
  return e.contains(i) ? -1 - s_count(i, e) : s_count(i, e.complement());
}

std::vector<int> content_vector(const HookLabel& label) {
  std::vector<int> c;
  for (int i = 1; i <= label.n(); ++i) c.push_back(content(label, i));
  return c;
}

TStep T_step(const HookLabel& label, const FermionPoly& t, int i) {
  const int n = label.n();
  const SubsetE& e = label.set;
  if (i < 1 || i + 1 >= n) raise("UnsupportedMove", "step index must satisfy i+1 < N");
  const bool admissible = label.family == Family::Zero ? (!e.contains(i) && e.contains(i + 1))
                                                       : (e.contains(i) && !e.contains(i + 1));
  if (!admissible) raise("UnsupportedMove", "transposition does not produce a new standard label");
  const int gap = content(label, i) - content(label, i + 1);
  FermionPoly value = apply_transposition(i, i + 1, t) - t * KField(Rational(1, gap));
  return TStep{HookLabel::make(label.family, label.m, e.swapped(i)), std::move(value)};
}

FermionPoly build_T(const HookLabel& label) {
  const int n = label.n();
  if (label.family == Family::Zero) {
    const TTable& table = family_zero_table(n, label.m);
    auto it = table.find(label.set.mask());
    if (it == table.end()) raise_internal("label missing from family 0 table");
    return it->second;
  }
  const SubsetE dual = label.set.complement();
  const TTable& table = family_zero_table(n, n - label.m);
  auto it = table.find(dual.mask());
  if (it == table.end()) raise_internal("dual label missing from family 0 table");
  const int sign = sigma(n - label.m) * sigma(inv_count(dual));
  return delta_dual(it->second) * KField(static_cast<long>(sign));
}

FermionPoly build_T_recursive(const HookLabel& label) {
  if (label.family == Family::Zero) return build_T(label);
  TTable table = build_family_one_recursive(label.n(), label.m);
  return table.at(label.set.mask());
}

FermionPoly jucys_murphy(int i, const FermionPoly& p) {
  FermionPoly r(p.n(), p.m());
  for (int j = i + 1; j <= p.n(); ++j) r += apply_transposition(i, j, p);
  return r;
}

Rational T_norm_sq(const HookLabel& label) {
  const int n = label.n();
  const SubsetE& e = label.set;
  const bool zero = label.family == Family::Zero;
  Rational acc = zero ? label.m + 1 : n - label.m + 1;
  for (int i = 1; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const bool pair = zero ? (e.contains(i) && !e.contains(j)) : (!e.contains(i) && e.contains(j));
      if (!pair) continue;
      const int d = content(label, i) - content(label, j);
      acc *= 1 - Rational(1, d * d);
    }
  }
  return acc;
}

}  // namespace jack
