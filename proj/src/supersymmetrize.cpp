#include "jack/supersymmetrize.hpp"

#include <algorithm>
#include <map>

#include "jack/errors.hpp"
#include "jack/hilbert_series.hpp"
#include "jack/linalg.hpp"
#include "jack/jack_graph.hpp"
#include "jack/norms_pairing.hpp"

namespace jack {

namespace {

bool strictly_increasing(const std::vector<int>& v) {
  return std::adjacent_find(v.begin(), v.end(), std::greater_equal<int>()) == v.end();
}

void require_partition(const Composition& lambda, const HookLabel& label) {
  if (lambda.size() != label.n()) raise("SizeMismatch", "partition length differs from N");
  if (!lambda.is_partition()) raise("NotPartition", "entries must be nonincreasing");
}

}  // namespace

bool LabeledTableau::column_strict() const {
  std::vector<int> column{corner()};
  column.insert(column.end(), col.begin(), col.end());
  return strictly_increasing(column);
}

bool LabeledTableau::row_strict() const { return strictly_increasing(row); }

LabeledTableau labeled_tableau(const Composition& alpha, const HookLabel& label) {
  if (alpha.size() != label.n()) raise("SizeMismatch", "composition length differs from N");
  const Composition plus = sorted_decreasing(alpha);
  const HookTableau y = tableau_of(label);
  LabeledTableau t{label.family, label.n(), label.m, {}, {}};
  for (int v : y.row) t.row.push_back(plus.at(v));
  for (int v : y.col) t.col.push_back(plus.at(v));
  return t;
}

std::vector<HookLabel> orbit_labels(const Composition& lambda, const HookLabel& label) {
  const LabeledTableau target = labeled_tableau(lambda, label);
  std::vector<HookLabel> out;
  for (const SubsetE& f : labels_of(label.n(), label.m, label.family)) {
    const HookLabel candidate = HookLabel::make(label.family, label.m, f);
    if (labeled_tableau(lambda, candidate) == target) out.push_back(candidate);
  }
  std::sort(out.begin(), out.end(),
            [](const HookLabel& a, const HookLabel& b) { return a.set.mask() < b.set.mask(); });
  return out;
}

std::vector<OrbitMember> orbit(const Composition& lambda, const HookLabel& label) {
  const Composition plus = sorted_decreasing(lambda);
  std::vector<OrbitMember> out;
  const auto betas = rearrangements(plus);
  for (const HookLabel& f : orbit_labels(plus, label)) {
    for (const Composition& beta : betas) out.push_back(OrbitMember{beta, f});
  }
  return out;
}

RootSink root_sink(const Composition& lambda, const HookLabel& label) {
  const auto labels = orbit_labels(lambda, label);
  auto by_inv = [](const HookLabel& a, const HookLabel& b) {
    const int ia = inv_count(a.set);
    const int ib = inv_count(b.set);
    return ia != ib ? ia < ib : a.set.mask() < b.set.mask();
  };
  const HookLabel low = *std::min_element(labels.begin(), labels.end(), by_inv);
  const HookLabel high = *std::max_element(labels.begin(), labels.end(), by_inv);
  if (label.family == Family::Zero) return RootSink{low, high};
  return RootSink{high, low};
}

Realization realize_tableau(const LabeledTableau& tableau, bool root) {
  const int n = tableau.n;
  const int m = tableau.m;
  const bool zero = tableau.family == Family::Zero;
  const int row_len = zero ? n - m : n - m + 1;
  const int col_len = zero ? m : m - 1;
  if (static_cast<int>(tableau.row.size()) != row_len || static_cast<int>(tableau.col.size()) != col_len) {
    raise("InvalidTableau", "tableau shape does not match the family");
  }
  if (!std::is_sorted(tableau.row.begin(), tableau.row.end())) {
    raise("InvalidTableau", "row 1 must be nondecreasing");
  }
  if (!tableau.column_strict()) raise("NotColumnStrict", "labeled tableau is not column-strict");

  std::vector<int> values = tableau.row;
  values.insert(values.end(), tableau.col.begin(), tableau.col.end());
  std::sort(values.begin(), values.end(), std::greater<int>());
  // Interval [first, last] of positions holding each value.
  std::map<int, std::pair<int, int>> span;
  for (int i = 1; i <= n; ++i) {
    const int v = values[static_cast<std::size_t>(i - 1)];
    auto [it, inserted] = span.try_emplace(v, i, i);
    if (!inserted) it->second.second = i;
  }
  // The root of family 0 keeps column entries large; family 1 the reverse.
  const bool column_takes_top = (zero == root);
  std::map<int, std::pair<int, int>> free_range = span;
  HookTableau y;
  y.col.resize(tableau.col.size());
  for (std::size_t r = 0; r < tableau.col.size(); ++r) {
    auto& range = free_range.at(tableau.col[r]);
    if (column_takes_top) {
      y.col[r] = range.second--;
    } else {
      y.col[r] = range.first++;
    }
  }
  for (int v : tableau.row) {
    auto& range = free_range.at(v);
    y.row.push_back(range.second--);
  }
  Realization out{Composition(values), label_from_tableau(tableau.family, n, y)};
  if (labeled_tableau(out.lambda, out.label) != tableau) raise_internal("tableau realization mismatch");
  return out;
}

Integer stabilizer_order(const Composition& lambda, const HookLabel& root) {
  require_partition(lambda, root);
  SubsetE column_cells = root.set;
  if (root.family == Family::Zero) column_cells = column_cells.without(root.n());
  Integer order = 1;
  int a = 1;
  const int n = lambda.size();
  while (a <= n) {
    int b = a;
    while (b < n && lambda.at(b + 1) == lambda.at(a)) ++b;
    bool touches_column = false;
    for (int i = a; i <= b; ++i) touches_column = touches_column || column_cells.contains(i);
    const int length = touches_column ? b - a : b - a + 1;
    for (int t = 2; t <= length; ++t) order *= t;
    a = b + 1;
  }
  return order;
}

SuperPoly build_supersymmetric(const Composition& lambda, const HookLabel& label, Normalization normalization) {
  require_partition(lambda, label);
  if (!labeled_tableau(lambda, label).column_strict()) {
    raise("NotColumnStrict", "labeled tableau is not column-strict");
  }
  SuperPoly total(label.n(), label.m);
  for (const OrbitMember& member : orbit(lambda, label)) {
    const KField weight = R_product(1, member.alpha, member.label) / KField(C_product(1, member.label));
    total += build_jack(member.alpha, member.label) * weight;
  }
  if (normalization == Normalization::Monic) {
    const RootSink rs = root_sink(lambda, label);
    total *= KField(C_product(1, rs.root)) / R_product(1, lambda, rs.root);
  }
  return total;
}

SuperPoly build_antisymmetric(const Composition& lambda, const HookLabel& label) {
  require_partition(lambda, label);
  if (!labeled_tableau(lambda, label).row_strict()) raise("NotRowStrict", "labeled tableau is not row-strict");
  const int n = label.n();
  const Family dual_family = label.family == Family::Zero ? Family::One : Family::Zero;
  const HookLabel dual = HookLabel::make(dual_family, n - label.m, label.set.complement());
  return sp_delta_dual(build_supersymmetric(lambda, dual).negate_kappa());
}

Superpartition superpartition_of(const LabeledTableau& tableau) {
  const int n = tableau.n;
  const int m = tableau.m;
  std::vector<int> column{tableau.corner()};
  column.insert(column.end(), tableau.col.begin(), tableau.col.end());
  auto col_at = [&](int r) { return column.at(static_cast<std::size_t>(r - 1)); };
  auto row_at = [&](int c) { return tableau.row.at(static_cast<std::size_t>(c - 1)); };
  Superpartition sp;
  if (tableau.family == Family::Zero) {
    for (int i = 1; i <= m; ++i) sp.strict.push_back(col_at(m + 2 - i));
    for (int i = m + 1; i <= n; ++i) sp.weak.push_back(row_at(n + 1 - i));
  } else {
    for (int i = 1; i <= m; ++i) sp.strict.push_back(col_at(m + 1 - i));
    for (int i = m + 1; i <= n; ++i) sp.weak.push_back(row_at(n + 2 - i));
  }
  return sp;
}

std::vector<LabeledTableau> candidate_generators(int n, int m, Family family) {
  const bool zero = family == Family::Zero;
  const int col_len = zero ? m : m - 1;
  const int free_cells = zero ? n - m - 1 : n - m;
  if (n < 2 || m < 1 || m > n - 1) raise("InvalidDegree", "m must lie in 1..N-1");
  std::vector<LabeledTableau> out;
  std::vector<int> cells(static_cast<std::size_t>(free_cells), 0);
  while (true) {
    LabeledTableau t{family, n, m, {0}, {}};
    t.row.insert(t.row.end(), cells.begin(), cells.end());
    for (int i = 1; i <= col_len; ++i) t.col.push_back(i);
    out.push_back(t);
    int pos = free_cells - 1;
    while (pos >= 0 && cells[static_cast<std::size_t>(pos)] == col_len) --pos;
    if (pos < 0) break;
    const int v = cells[static_cast<std::size_t>(pos)] + 1;
    for (int q = pos; q < free_cells; ++q) cells[static_cast<std::size_t>(q)] = v;
  }
  return out;
}

GeneratorEvidence generator_evidence(int n, int m, Family family, int degree, const Rational& kappa0) {
  std::vector<SuperPoly> products;
  for (const LabeledTableau& tab : candidate_generators(n, m, family)) {
    const Realization real = realize_tableau(tab);
    const int rest = degree - real.lambda.degree();
    if (rest < 0) continue;
    const SuperPoly p = build_supersymmetric(real.lambda, real.label);
    for (const Composition& mu : compositions_of(n, rest)) {
      if (!mu.is_partition()) continue;
      SuperPoly product(n, m);
      for (const Composition& beta : rearrangements(mu)) {
        for (const auto& [key, c] : p.terms()) {
          Composition raised = key.alpha;
          for (int i = 1; i <= n; ++i) raised.set(i, raised.at(i) + beta.at(i));
          product.add_term(raised, key.mask, c);
        }
      }
      products.push_back(std::move(product));
    }
  }
  std::map<MonoKey, std::size_t> column;
  for (const SuperPoly& p : products) {
    for (const auto& [key, c] : p.terms()) column.try_emplace(key, column.size());
  }
  std::vector<std::vector<Rational>> rows;
  for (const SuperPoly& p : products) {
    std::vector<Rational> row(column.size());
    for (const auto& [key, c] : p.terms()) row[column.at(key)] = kf_eval(c, kappa0).value;
    rows.push_back(std::move(row));
  }
  GeneratorEvidence out;
  out.products = products.size();
  out.rank = matrix_rank(std::move(rows));
  out.expected = count_column_strict(n, m, family, degree);
  return out;
}

}  // namespace jack
