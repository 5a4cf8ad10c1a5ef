#include "jack/acceptance.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <exception>
#include <iomanip>
#include <map>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>
#include <tuple>

#include "jack/cst_spectra.hpp"
#include "jack/errors.hpp"
#include "jack/hilbert_series.hpp"
#include "jack/jack_graph.hpp"
#include "jack/norms_pairing.hpp"
#include "jack/supersymmetrize.hpp"

namespace jack {

void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& body) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  const unsigned width = std::min<unsigned>(jobs, static_cast<unsigned>(count));
  for (unsigned t = 0; t < width; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

namespace {

using Clock = std::chrono::steady_clock;

const KField kKappa = KField::kappa();

KField lin(long constant, long kappa_coeff) { return KField::linear(Rational(constant), Rational(kappa_coeff)); }

SubsetE set_of(int n, std::initializer_list<int> positions) { return SubsetE::from_positions(n, positions); }

struct Node {
  Composition alpha;
  HookLabel label;
};

std::vector<Node> eigen_suite_nodes(int max_n, int max_degree) {
  std::vector<Node> nodes;
  for (int n = 2; n <= max_n; ++n) {
    for (int m = 1; m < n; ++m) {
      for (Family f : {Family::Zero, Family::One}) {
        for (const SubsetE& e : labels_of(n, m, f)) {
          const HookLabel label = HookLabel::make(f, m, e);
          for (int d = 0; d <= max_degree; ++d) {
            for (const Composition& a : compositions_of(n, d)) nodes.push_back(Node{a, label});
          }
        }
      }
    }
  }
  return nodes;
}

std::vector<SuperPoly> build_all(const std::vector<Node>& nodes, unsigned jobs) {
  std::vector<SuperPoly> out(nodes.size());
  parallel_for(nodes.size(), jobs, [&](std::size_t i) { out[i] = build_jack(nodes[i].alpha, nodes[i].label); });
  return out;
}

bool all_adjacent_swaps(const SuperPoly& p, bool antisymmetric) {
  for (int i = 1; i < p.n(); ++i) {
    const SuperPoly moved = sp_apply_si(i, p);
    if (antisymmetric ? !(moved == -p) : !(moved == p)) return false;
  }
  return true;
}

SuperPoly sum_U_squared(const SuperPoly& p) {
  SuperPoly total(p.n(), p.m());
  for (int i = 1; i <= p.n(); ++i) total += cherednik_U(i, cherednik_U(i, p));
  return total;
}

// ---------------------------------------------------------------- criteria

SuperPoly worked_expansion() {
  const int n = 4;
  const int m = 2;
  auto phi = [&](std::initializer_list<int> pos) { return SuperPoly::from_fermion(Composition::zeros(n), FermionPoly::basis(set_of(n, pos))); };
  auto mono = [&](std::vector<int> alpha, const SuperPoly& f, const KField& c) {
    SuperPoly out(n, m);
    for (const auto& [key, value] : f.terms()) out.add_term(Composition(alpha), key.mask, value * c);
    return out;
  };
  const SuperPoly theta_a = phi({1, 3}) * KField(-1L) + phi({1, 4}) - phi({3, 4});
  const KField g = kKappa / (lin(1, -2) * lin(1, 1));
  const SuperPoly theta_b = phi({1, 2}) * lin(1, -1) - (phi({1, 3}) - phi({2, 3})) * lin(1, -2) -
                            (phi({1, 4}) - phi({2, 4})) * kKappa;
  return mono({0, 1, 1, 0}, theta_a, KField(1L)) + mono({0, 1, 0, 1}, theta_a, -kKappa / lin(1, -2)) +
         mono({0, 0, 1, 1}, theta_b, g);
}

CriterionResult criterion_worked_jack() {
  CriterionResult r{1, "worked nonsymmetric Jack polynomial", false, "", 0};
  clear_jack_cache();
  const auto t0 = Clock::now();
  const HookLabel label = HookLabel::make(Family::Zero, 2, set_of(4, {2, 3, 4}));
  const Composition alpha({0, 1, 1, 0});
  const SuperPoly j = build_jack(alpha, label);
  const bool expansion = j == worked_expansion();
  const bool eigen = verify_eigen(j, alpha, label);
  const std::vector<KField> expected{lin(1, -1), lin(2, 1), lin(2, -2), lin(1, 0)};
  bool spectrum = true;
  const auto z = spectral_vector(alpha, label);
  for (std::size_t i = 0; i < z.size(); ++i) spectrum = spectrum && z[i].value() == expected[i];
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  r.passed = expansion && eigen && spectrum && r.seconds < 1.0;
  r.detail = std::string("expansion ") + (expansion ? "exact" : "MISMATCH") + ", eigen " + (eigen ? "ok" : "FAIL") +
             ", spectral vector " + (spectrum ? "ok" : "FAIL");
  return r;
}

CriterionResult criterion_worked_norm() {
  CriterionResult r{2, "worked norm: closed form and pairing", false, "", 0};
  const auto t0 = Clock::now();
  const HookLabel label = HookLabel::make(Family::Zero, 2, set_of(4, {2, 3, 4}));
  const NormReport rep = jack_norm(Composition({0, 1, 1, 0}), label, true);
  const KField expected = KField(3L) * lin(1, -3) * lin(1, 2) * lin(1, -1) / (lin(1, 1) * lin(1, -2));
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  const bool closed = rep.value == expected;
  r.passed = closed && rep.oracle_agrees() && r.seconds < 10.0;
  r.detail = "norm = " + rep.value.to_string() + (rep.oracle_agrees() ? ", oracle agrees" : ", oracle DISAGREES");
  return r;
}

CriterionResult criterion_eigen_suite(unsigned jobs) {
  CriterionResult r{3, "eigen-suite N<=4, |alpha|<=3", false, "", 0};
  const auto t0 = Clock::now();
  const std::vector<Node> nodes = eigen_suite_nodes(4, 3);
  const std::vector<SuperPoly> polys = build_all(nodes, jobs);
  std::atomic<std::size_t> eigen_fail{0};
  parallel_for(nodes.size(), jobs, [&](std::size_t i) {
    if (!verify_eigen(polys[i], nodes[i].alpha, nodes[i].label)) ++eigen_fail;
  });

  // Orthogonality within each (N, m, degree) block; different blocks pair to zero trivially.
  std::map<std::tuple<int, int, int>, std::vector<std::size_t>> blocks;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    blocks[{nodes[i].label.n(), nodes[i].label.m, nodes[i].alpha.degree()}].push_back(i);
  }
  std::vector<std::vector<std::size_t>> block_list;
  for (auto& [key, members] : blocks) block_list.push_back(members);
  std::vector<std::size_t> rows;
  std::vector<std::size_t> row_block;
  for (std::size_t b = 0; b < block_list.size(); ++b) {
    for (std::size_t k = 0; k < block_list[b].size(); ++k) {
      rows.push_back(k);
      row_block.push_back(b);
    }
  }
  std::atomic<std::size_t> pairs{0};
  std::atomic<std::size_t> nonorthogonal{0};
  std::atomic<std::size_t> norm_mismatch{0};
  parallel_for(rows.size(), jobs, [&](std::size_t idx) {
    const auto& members = block_list[row_block[idx]];
    const std::size_t gi = members[rows[idx]];
    PairingTable table(polys[gi]);
    for (std::size_t k = 0; k <= rows[idx]; ++k) {
      const std::size_t fi = members[k];
      const KField value = table.pair(polys[fi]);
      if (fi == gi) {
        if (!(value == jack_norm(nodes[gi].alpha, nodes[gi].label).value)) ++norm_mismatch;
      } else {
        ++pairs;
        if (!value.is_zero()) ++nonorthogonal;
      }
    }
  });
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  r.passed = eigen_fail == 0 && nonorthogonal == 0 && norm_mismatch == 0 && pairs >= 200 && r.seconds < 300.0;
  std::ostringstream os;
  os << nodes.size() << " nodes, eigen failures " << eigen_fail << ", " << pairs << " distinct pairs, non-orthogonal "
     << nonorthogonal << ", closed-form norm mismatches " << norm_mismatch;
  r.detail = os.str();
  return r;
}

CriterionResult criterion_t_basis() {
  CriterionResult r{4, "T-basis suite N<=5", false, "", 0};
  const auto t0 = Clock::now();
  std::size_t labels = 0;
  std::size_t failures = 0;
  for (int n = 2; n <= 5; ++n) {
    for (int m = 1; m < n; ++m) {
      FermionPoly generic(n, m);
      long weight = 1;
      for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
        if (std::popcount(mask) != m) continue;
        const FermionPoly phi = FermionPoly::basis(SubsetE(n, mask));
        generic += phi * KField(weight++);
        if (!(raising_M(lowering_D(phi)) + lowering_D(raising_M(phi)) == phi * KField(static_cast<long>(n)))) {
          ++failures;
        }
      }
      for (int z = 0; z <= 1; ++z) {
        const FermionPoly once = project(generic, z);
        if (!(project(once, z) == once)) ++failures;
      }
      if (!(project(generic, 0) + project(generic, 1) == generic)) ++failures;
      for (Family f : {Family::Zero, Family::One}) {
        const int z = family_index(f);
        for (const SubsetE& e : labels_of(n, m, f)) {
          ++labels;
          const HookLabel label = HookLabel::make(f, m, e);
          const FermionPoly t = build_T(label);
          bool ok = true;
          for (int i = 1; i <= n; ++i) ok = ok && jucys_murphy(i, t) == t * KField(static_cast<long>(content(label, i)));
          ok = ok && fermion_dot(t, t) == KField(T_norm_sq(label));
          ok = ok && project(t, z) == t && project(t, 1 - z).is_zero();
          ok = ok && build_T_recursive(label) == t;
          if (!ok) ++failures;
        }
      }
    }
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  r.passed = failures == 0;
  std::ostringstream os;
  os << labels << " labels, failures " << failures;
  r.detail = os.str();
  return r;
}

CriterionResult criterion_supersymmetric_example() {
  CriterionResult r{5, "supersymmetric example N=4, lambda=(2,1,1,0)", false, "", 0};
  const auto t0 = Clock::now();
  const Composition lambda({2, 1, 1, 0});
  const HookLabel label = HookLabel::make(Family::Zero, 2, set_of(4, {1, 3, 4}));
  const SuperPoly p = build_supersymmetric(lambda, label);
  const bool invariant = all_adjacent_swaps(p, false);
  const KField eigen = KField(6L) * (kKappa * kKappa - KField(2L) * kKappa + KField(3L));
  const bool spectrum = sum_U_squared(p) == p * eigen;
  const NormReport rep = supersym_norm(lambda, label, true);
  const KField shape = lin(1, -2) * lin(2, -3) * lin(1, -4);
  const bool closed = rep.constant && rep.value == KField(*rep.constant) * shape;
  bool rejects = false;
  try {
    build_supersymmetric(lambda, HookLabel::make(Family::Zero, 2, set_of(4, {2, 3, 4})));
  } catch (const Error& e) {
    rejects = e.name() == "NotColumnStrict";
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  r.passed = invariant && spectrum && closed && rep.oracle_agrees() && rejects;
  r.detail = std::string("E={1,3,4}: invariance ") + (invariant ? "ok" : "FAIL") + ", sum U^2 " + (spectrum ? "ok" : "FAIL") +
             ", constant " + (rep.constant ? rational_string(*rep.constant) : "?") + ", closed form " +
             (closed ? "ok" : "FAIL") + ", oracle " + (rep.oracle_agrees() ? "ok" : "FAIL") +
             "; E={2,3,4} rejected as not column-strict: " + (rejects ? "yes" : "NO");
  return r;
}

CriterionResult criterion_orbit() {
  CriterionResult r{6, "orbit combinatorics N=10, m=3", false, "", 0};
  const auto t0 = Clock::now();
  const Composition lambda({3, 3, 2, 2, 2, 2, 1, 1, 0, 0});
  const HookLabel label = HookLabel::make(Family::Zero, 3, set_of(10, {1, 4, 7, 10}));
  const auto sets = orbit_labels(lambda, label);
  const RootSink rs = root_sink(lambda, label);
  const bool count = sets.size() == 16;
  const bool root = rs.root.set == set_of(10, {2, 6, 8, 10});
  const bool sink = rs.sink.set == set_of(10, {1, 3, 7, 10});
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  r.passed = count && root && sink;
  r.detail = std::to_string(sets.size()) + " sets, root " + rs.root.set.to_string() + ", sink " + rs.sink.set.to_string();
  return r;
}

CriterionResult criterion_minimal_norms(unsigned jobs) {
  CriterionResult r{7, "minimal-norm formula N<=7", false, "", 0};
  const auto t0 = Clock::now();
  struct Case {
    int n, m, s, k;
  };
  std::vector<Case> cases;
  for (int n = 3; n <= 7; ++n) {
    for (int m = 1; m <= n - 2; ++m) {
      for (int s = 0; s <= m - 1; ++s) {
        for (int k = 0; k <= n - m - 2; ++k) cases.push_back(Case{n, m, s, k});
      }
    }
  }
  std::atomic<std::size_t> mismatch{0};
  std::atomic<std::size_t> fractional{0};
  parallel_for(cases.size(), jobs, [&](std::size_t i) {
    const Case& c = cases[i];
    const MinimalNormCase mc = minimal_norm(c.n, c.m, c.s, c.k);
    const NormReport general = supersym_norm(mc.lambda, mc.label);
    if (!(general.value == mc.report.value)) ++mismatch;
    if (!mc.report.value.is_polynomial()) ++fractional;
  });
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  r.passed = mismatch == 0 && fractional == 0 && r.seconds < 120.0;
  std::ostringstream os;
  os << cases.size() << " cases, mismatches " << mismatch << ", nonconstant denominators " << fractional;
  r.detail = os.str();
  return r;
}

CriterionResult criterion_series() {
  CriterionResult r{8, "Gaussian binomials and Poincare series", false, "", 0};
  const auto t0 = Clock::now();
  const QSeries g = gaussian_binomial(5, 2, 6);
  bool gauss = true;
  const int expected[] = {1, 1, 2, 2, 2, 1, 1};
  for (int d = 0; d <= 6; ++d) gauss = gauss && g.coeff(d) == expected[d];
  bool hook = true;
  const int counts[] = {1, 2, 4, 6, 10};
  for (int d = 3; d <= 7; ++d) {
    hook = hook && count_column_strict(4, 2, Family::Zero, d) == counts[d - 3] &&
           hook_series(4, 2, Family::Zero, 7).coeff(d) == counts[d - 3];
  }
  bool inv = true;
  for (int n = 2; n <= 10; ++n) {
    for (int m = 1; m < n; ++m) inv = inv && inv_generating(n, m) == gaussian_binomial(n - 1, m, m * (n - 1 - m));
  }
  bool identity = true;
  for (int n = 2; n <= 10; ++n) {
    for (int m = 1; m < n; ++m) {
      const int trunc = n * n;
      identity = identity && Q_series(n, m, trunc) + Q_series(n, m - 1, trunc) ==
                                 gaussian_binomial(n, m, trunc).shifted(m * (m - 1) / 2);
    }
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  r.passed = gauss && hook && inv && identity;
  r.detail = std::string("[5,2]_q ") + (gauss ? "ok" : "FAIL") + ", hook counts " + (hook ? "ok" : "FAIL") +
             ", inv generating N<=10 " + (inv ? "ok" : "FAIL") + ", Q identity " + (identity ? "ok" : "FAIL");
  return r;
}

CriterionResult criterion_duality(unsigned jobs) {
  CriterionResult r{9, "duality and antisymmetry N<=4", false, "", 0};
  const auto t0 = Clock::now();
  const std::vector<Node> nodes = eigen_suite_nodes(4, 3);
  std::atomic<std::size_t> bad_nodes{0};
  parallel_for(nodes.size(), jobs, [&](std::size_t i) {
    const Node& node = nodes[i];
    const HookLabel& label = node.label;
    const Family flipped = label.family == Family::Zero ? Family::One : Family::Zero;
    const HookLabel dual = HookLabel::make(flipped, label.n() - label.m, label.set.complement());
    const SuperPoly lhs = sp_delta_dual(build_jack(node.alpha, label));
    const SuperPoly rhs = build_jack(node.alpha, dual).negate_kappa();
    if (!(lhs == rhs) && !(lhs == -rhs)) ++bad_nodes;
  });
  std::size_t supersym = 0;
  std::size_t bad_supersym = 0;
  std::size_t antisym = 0;
  std::size_t bad_antisym = 0;
  for (int n = 2; n <= 4; ++n) {
    for (int m = 1; m < n; ++m) {
      for (Family f : {Family::Zero, Family::One}) {
        for (const SubsetE& e : labels_of(n, m, f)) {
          const HookLabel label = HookLabel::make(f, m, e);
          for (int d = 0; d <= 3; ++d) {
            for (const Composition& a : compositions_of(n, d)) {
              if (!a.is_partition()) continue;
              const LabeledTableau tab = labeled_tableau(a, label);
              if (tab.column_strict()) {
                ++supersym;
                const SuperPoly p = build_supersymmetric(a, label);
                if (p.is_zero() || !all_adjacent_swaps(p, false) || !all_adjacent_swaps(sp_delta_dual(p), true)) {
                  ++bad_supersym;
                }
              }
              if (tab.row_strict()) {
                ++antisym;
                const SuperPoly q = build_antisymmetric(a, label);
                if (q.is_zero() || !all_adjacent_swaps(q, true)) ++bad_antisym;
              }
            }
          }
        }
      }
    }
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  r.passed = bad_nodes == 0 && bad_supersym == 0 && bad_antisym == 0;
  std::ostringstream os;
  os << nodes.size() << " nodes, sign failures " << bad_nodes << "; " << supersym << " supersymmetric, failures "
     << bad_supersym << "; " << antisym << " antisymmetric, failures " << bad_antisym;
  r.detail = os.str();
  return r;
}

LabeledTableau random_column_strict(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick_n(2, 8);
  const int n = pick_n(rng);
  const Family family = (rng() % 2) ? Family::One : Family::Zero;
  std::uniform_int_distribution<int> pick_m(1, n - 1);
  const int m = pick_m(rng);
  const int col_len = family == Family::Zero ? m : m - 1;
  const int row_len = n - col_len;
  LabeledTableau t{family, n, m, {}, {}};
  int v = static_cast<int>(rng() % 3);
  t.row.push_back(v);
  for (int i = 1; i < row_len; ++i) t.row.push_back(v += static_cast<int>(rng() % 3));
  v = t.row.front();
  for (int i = 0; i < col_len; ++i) t.col.push_back(v += 1 + static_cast<int>(rng() % 2));
  return t;
}

CriterionResult criterion_spectra() {
  CriterionResult r{10, "Calogero-Sutherland eigenvalues", false, "", 0};
  const auto t0 = Clock::now();
  std::mt19937_64 rng(20240611);
  std::size_t random_bad = 0;
  std::size_t operator_checked = 0;
  std::size_t operator_bad = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const LabeledTableau tab = random_column_strict(rng);
    const Realization real = realize_tableau(tab);
    if (!(cst_eigenvalue(tab) == cst_eigenvalue_content(real.lambda, real.label))) ++random_bad;
    if (tab.n <= 4) {
      ++operator_checked;
      if (!hamiltonian_eigencheck(real.lambda, real.label)) ++operator_bad;
    }
  }
  std::size_t ground_bad = 0;
  std::size_t ground_cases = 0;
  for (int n = 1; n <= 8; ++n) {
    for (int m = 0; m < n; ++m) {
      ++ground_cases;
      if (!(cst_eigenvalue(ground_state_tableau(n, m)) == ground_state_eigenvalue(n, m))) ++ground_bad;
    }
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  r.passed = random_bad == 0 && ground_bad == 0 && operator_bad == 0;
  std::ostringstream os;
  os << "20 random tableaux, form mismatches " << random_bad << "; ground state " << ground_cases
     << " cases, mismatches " << ground_bad << "; operator check " << operator_checked << " cases, failures "
     << operator_bad;
  r.detail = os.str();
  return r;
}

CriterionResult criterion_positivity(unsigned jobs) {
  CriterionResult r{11, "norm positivity near kappa=0", false, "", 0};
  const auto t0 = Clock::now();
  const std::vector<Node> nodes = eigen_suite_nodes(4, 3);
  std::atomic<std::size_t> bad{0};
  parallel_for(nodes.size(), jobs, [&](std::size_t i) {
    const int n = nodes[i].label.n();
    const KField norm = jack_norm(nodes[i].alpha, nodes[i].label).value;
    Rational step(1, 2 * n);
    step.canonicalize();
    for (const Rational& at : {Rational(0), step, Rational(-step)}) {
      try {
        if (sgn(kf_eval(norm, at).value) <= 0) ++bad;
      } catch (const Error&) {
        ++bad;
      }
    }
  });
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  r.passed = bad == 0;
  r.detail = std::to_string(nodes.size()) + " nodes x 3 points, nonpositive " + std::to_string(bad);
  return r;
}

}  // namespace

CriterionResult run_criterion(int id, const AcceptanceOptions& options) {
  const unsigned jobs = std::max(1U, options.jobs);
  const auto t0 = Clock::now();
  try {
    switch (id) {
      case 1: return criterion_worked_jack();
      case 2: return criterion_worked_norm();
      case 3: return criterion_eigen_suite(jobs);
      case 4: return criterion_t_basis();
      case 5: return criterion_supersymmetric_example();
      case 6: return criterion_orbit();
      case 7: return criterion_minimal_norms(jobs);
      case 8: return criterion_series();
      case 9: return criterion_duality(jobs);
      case 10: return criterion_spectra();
      case 11: return criterion_positivity(jobs);
      default: raise("InvalidArgument", "criterion id must lie in 1.." + std::to_string(kCriterionCount));
    }
  } catch (const Error& e) {
    if (e.name() == "InvalidArgument") throw;
    return CriterionResult{id, "criterion " + std::to_string(id), false, e.what(),
                           std::chrono::duration<double>(Clock::now() - t0).count()};
  } catch (const std::exception& e) {
    return CriterionResult{id, "criterion " + std::to_string(id), false, std::string("exception: ") + e.what(),
                           std::chrono::duration<double>(Clock::now() - t0).count()};
  }
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options,
                                            const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<int> ids = options.only;
  if (ids.empty()) {
    for (int id = 1; id <= kCriterionCount; ++id) ids.push_back(id);
  }
  std::vector<CriterionResult> out;
  for (int id : ids) {
    out.push_back(run_criterion(id, options));
    if (on_result) on_result(out.back());
  }
  return out;
}

std::string format_result(const CriterionResult& result) {
  std::ostringstream os;
  os << (result.passed ? "PASS" : "FAIL") << "  " << std::setw(2) << result.id << "  " << result.title << "  ("
     << std::fixed << std::setprecision(2) << result.seconds << " s)  " << result.detail;
  return os.str();
}

}  // namespace jack
