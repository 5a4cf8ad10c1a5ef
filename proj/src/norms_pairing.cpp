#include "jack/norms_pairing.hpp"

#include <algorithm>

#include "jack/errors.hpp"
#include "jack/jack_graph.hpp"
#include "jack/supersymmetrize.hpp"

namespace jack {

namespace {

KField shifted_kappa(long constant, long kappa_coeff) {
  return KField::linear(Rational(constant), Rational(kappa_coeff));
}

// 1 - (kappa / (l + d kappa))^2
KField squared_defect(long l, long d) {
  const KField t = KField::kappa() / shifted_kappa(l, d);
  return KField(1L) - t * t;
}

void require_partition(const Composition& lambda, const HookLabel& label) {
  if (lambda.size() != label.n()) raise("SizeMismatch", "partition length differs from N");
  if (!lambda.is_partition()) raise("NotPartition", "entries must be nonincreasing");
}

Composition reversed(const Composition& a) {
  std::vector<int> v = a.to_vector();
  std::reverse(v.begin(), v.end());
  return Composition(v);
}

Integer factorial(int n) {
  Integer f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

// ----------------------------------------------------------- PairingTable

PairingTable::PairingTable(SuperPoly g) : g_(std::move(g)) {}

const SuperPoly& PairingTable::lowered(const Composition& beta) {
  if (beta.is_zero()) return g_;
  auto it = memo_.find(beta);
  if (it != memo_.end()) return it->second;
  int last = beta.size();
  while (beta.at(last) == 0) --last;
  Composition prev = beta;
  prev.set(last, beta.at(last) - 1);
  SuperPoly value = dunkl_D(last, lowered(prev));
  return memo_.emplace(beta, std::move(value)).first->second;
}

KField PairingTable::pair(const SuperPoly& f) {
  if (f.n() != g_.n()) raise("SizeMismatch", "pairing of polynomials with different N");
  KField acc;
  if (f.m() != g_.m()) return acc;
  const Composition zero = Composition::zeros(f.n());
  auto it = f.terms().begin();
  while (it != f.terms().end()) {
    const Composition alpha = it->first.alpha;
    const SuperPoly& low = lowered(alpha);
    for (; it != f.terms().end() && it->first.alpha == alpha; ++it) {
      const KField c = low.coeff(zero, SubsetE(f.n(), it->first.mask));
      if (!c.is_zero()) acc += it->second * c;
    }
  }
  return acc;
}

KField pairing_oracle(const SuperPoly& f, const SuperPoly& g) {
  PairingTable table(g);
  return table.pair(f);
}

// --------------------------------------------------------------- products

KField P_product(const Composition& lambda, const HookLabel& label) {
  require_partition(lambda, label);
  const auto c = content_vector(label);
  const int n = lambda.size();
  KField acc(1L);
  for (int i = 1; i <= n; ++i) {
    acc *= kf_rising(shifted_kappa(1, c[static_cast<std::size_t>(i - 1)]),
                     static_cast<unsigned>(lambda.at(i)));
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const int d = c[static_cast<std::size_t>(i - 1)] - c[static_cast<std::size_t>(j - 1)];
      for (int l = 1; l <= lambda.at(i) - lambda.at(j); ++l) acc *= squared_defect(l, d);
    }
  }
  return acc;
}

KField R_product(int z, const Composition& alpha, const HookLabel& label) {
  if (alpha.size() != label.n()) raise("SizeMismatch", "composition length differs from N");
  const auto r = rank_function(alpha);
  const int n = alpha.size();
  const long sign = (z % 2 == 0) ? 1 : -1;
  KField acc(1L);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (alpha.at(i) >= alpha.at(j)) continue;
      const int dc = content(label, r[static_cast<std::size_t>(j - 1)]) -
                     content(label, r[static_cast<std::size_t>(i - 1)]);
      const KField frac = KField::kappa() / shifted_kappa(alpha.at(j) - alpha.at(i), dc);
      acc *= KField(1L) + frac * KField(sign);
    }
  }
  return acc;
}

Rational C_product(int z, const HookLabel& label) {
  const int n = label.n();
  const SubsetE& e = label.set;
  const bool zero = label.family == Family::Zero;
  const int sign = (z % 2 == 0) ? 1 : -1;
  Rational acc = 1;
  for (int i = 1; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const bool pair = zero ? (e.contains(i) && !e.contains(j)) : (!e.contains(i) && e.contains(j));
      if (!pair) continue;
      Rational step(sign, content(label, i) - content(label, j));
      step.canonicalize();
      acc *= 1 + step;
    }
  }
  return acc;
}

KField pi0(int n, int d) {
  if (n < 1) raise("InvalidArgument", "pi0 needs n >= 1");
  KField acc = KField(1L) - KField::kappa() / shifted_kappa(n, d);
  for (int l = 1; l < n; ++l) acc *= squared_defect(l, d);
  return acc;
}

KField P_over_R0_telescoped(const Composition& lambda, const HookLabel& label) {
  require_partition(lambda, label);
  const auto c = content_vector(label);
  const int n = lambda.size();
  KField acc(1L);
  for (int i = 1; i <= n; ++i) {
    acc *= kf_rising(shifted_kappa(1, c[static_cast<std::size_t>(i - 1)]),
                     static_cast<unsigned>(lambda.at(i)));
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (lambda.at(i) <= lambda.at(j)) continue;
      acc *= pi0(lambda.at(i) - lambda.at(j), c[static_cast<std::size_t>(i - 1)] - c[static_cast<std::size_t>(j - 1)]);
    }
  }
  return acc;
}

// ------------------------------------------------------------------ norms

NormReport jack_norm(const Composition& alpha, const HookLabel& label, bool with_oracle) {
  const Composition plus = sorted_decreasing(alpha);
  NormReport report;
  report.value = KField(T_norm_sq(label)) * P_product(plus, label) /
                 (R_product(0, alpha, label) * R_product(1, alpha, label));
  if (with_oracle) {
    const SuperPoly j = build_jack(alpha, label);
    report.oracle = pairing_oracle(j, j);
  }
  return report;
}

KField torus_norm(const Composition& alpha, const HookLabel& label) {
  const Composition plus = sorted_decreasing(alpha);
  KField denom(1L);
  for (int i = 1; i <= plus.size(); ++i) {
    denom *= kf_rising(shifted_kappa(1, content(label, i)), static_cast<unsigned>(plus.at(i)));
  }
  return jack_norm(alpha, label).value / denom;
}

NormReport supersym_norm(const Composition& lambda, const HookLabel& label, bool with_oracle) {
  require_partition(lambda, label);
  if (!labeled_tableau(lambda, label).column_strict()) {
    raise("NotColumnStrict", "labeled tableau is not column-strict");
  }
  const RootSink rs = root_sink(lambda, label);
  const int n = label.n();
  const int nu = label.family == Family::Zero ? label.m + 1 : n - label.m + 1;
  const Rational constant = Rational(nu * factorial(n)) * C_product(0, rs.root) /
                            (Rational(stabilizer_order(lambda, rs.root)) * C_product(1, rs.sink));
  NormReport report;
  report.kappa_part = P_product(lambda, rs.root) / R_product(0, reversed(lambda), rs.root);
  report.constant = constant;
  report.value = KField(constant) * *report.kappa_part;
  if (with_oracle) {
    const SuperPoly p = build_supersymmetric(lambda, label, Normalization::Orbit);
    report.oracle = pairing_oracle(p, p);
  }
  return report;
}

MinimalNormCase minimal_norm(int n, int m, int s, int k) {
  const int big_m = n - m;
  if (n < 3 || n > kMaxN || m < 1 || big_m < 2) raise("InvalidArgument", "need N >= 3, m >= 1, N - m >= 2");
  if (s < 0 || s > m - 1) raise("InvalidArgument", "need 0 <= s <= m - 1");
  if (k < 0 || k > big_m - 2) raise("InvalidArgument", "need 0 <= k <= N - m - 2");

  LabeledTableau tab;
  tab.family = Family::Zero;
  tab.n = n;
  tab.m = m;
  tab.row.push_back(0);
  for (int i = big_m - 1; i >= 1; --i) tab.row.push_back(i <= k ? s + 1 : s);
  for (int i = 1; i <= m; ++i) tab.col.push_back(i);
  const Realization real = realize_tableau(tab, true);

  auto pochhammer = [](long constant, long kappa_coeff, int length) {
    return kf_rising(KField::linear(Rational(constant), Rational(kappa_coeff)), static_cast<unsigned>(length));
  };
  KField part(factorial(s).get_si());
  for (int i = 1; i <= k - 1; ++i) part *= KField::linear(1, i);
  for (int j = 1; j <= big_m - k - 2; ++j) part *= pochhammer(1, j, s);
  for (int l = big_m - k - 1; l <= big_m - 2; ++l) part *= pochhammer(2, l, s);
  for (int i = 2; i <= m; ++i) part *= pochhammer(1, -i, i - 1);
  part *= pochhammer(1, -n, m - s - 1);
  part *= pochhammer(m - s + 1, -(m + 1), s);
  part *= KField::linear(m - s, -(n - k));

  const RootSink rs = root_sink(real.lambda, real.label);
  const Rational constant = Rational((m + 1) * factorial(n)) * C_product(0, rs.root) /
                            (Rational(stabilizer_order(real.lambda, rs.root)) * C_product(1, rs.sink));
  MinimalNormCase out{real.lambda, real.label, NormReport{}};
  out.report.kappa_part = part;
  out.report.constant = constant;
  out.report.value = KField(constant) * part;
  return out;
}

}  // namespace jack
