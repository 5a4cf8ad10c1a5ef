#include "jack/superpoly.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "jack/errors.hpp"

namespace jack {

// ------------------------------------------------------------ Composition

Composition::Composition(const std::vector<int>& parts) {
  if (parts.empty() || static_cast<int>(parts.size()) > kMaxN) {
    raise("InvalidSize", "composition length must lie in 1.." + std::to_string(kMaxN));
  }
  n_ = static_cast<int>(parts.size());
  for (int i = 1; i <= n_; ++i) set(i, parts[static_cast<std::size_t>(i - 1)]);
}

Composition Composition::zeros(int n) { return Composition(std::vector<int>(static_cast<std::size_t>(n), 0)); }

void Composition::set(int i, int value) {
  if (i < 1 || i > n_) raise("InvalidPosition", "composition index out of range");
  if (value < 0) raise("InvalidComposition", "negative part");
  if (value > kMaxExponent) raise("LimitExceeded", "exponent above " + std::to_string(kMaxExponent));
  parts_[static_cast<std::size_t>(i - 1)] = static_cast<std::uint8_t>(value);
}

int Composition::degree() const {
  int d = 0;
  for (int i = 0; i < n_; ++i) d += parts_[static_cast<std::size_t>(i)];
  return d;
}

bool Composition::is_partition() const {
  for (int i = 1; i < n_; ++i) {
    if (at(i) < at(i + 1)) return false;
  }
  return true;
}

Composition Composition::swapped(int i, int j) const {
  Composition r = *this;
  std::swap(r.parts_[static_cast<std::size_t>(i - 1)], r.parts_[static_cast<std::size_t>(j - 1)]);
  return r;
}

std::vector<int> Composition::to_vector() const {
  std::vector<int> v;
  for (int i = 1; i <= n_; ++i) v.push_back(at(i));
  return v;
}

std::string Composition::to_string() const {
  std::ostringstream out;
  out << "(";
  for (int i = 1; i <= n_; ++i) out << (i > 1 ? "," : "") << at(i);
  out << ")";
  return out.str();
}

Composition sorted_decreasing(const Composition& a) {
  std::vector<int> v = a.to_vector();
  std::sort(v.begin(), v.end(), std::greater<int>());
  return Composition(v);
}

Composition sorted_increasing(const Composition& a) {
  std::vector<int> v = a.to_vector();
  std::sort(v.begin(), v.end());
  return Composition(v);
}

namespace {

void fill_compositions(std::vector<int>& parts, int index, int remaining, std::vector<Composition>& out) {
  const int n = static_cast<int>(parts.size());
  if (index == n - 1) {
    parts[static_cast<std::size_t>(index)] = remaining;
    out.emplace_back(parts);
    return;
  }
  for (int v = 0; v <= remaining; ++v) {
    parts[static_cast<std::size_t>(index)] = v;
    fill_compositions(parts, index + 1, remaining - v, out);
  }
}

}  // namespace

std::vector<Composition> compositions_of(int n, int degree) {
  std::vector<Composition> out;
  std::vector<int> parts(static_cast<std::size_t>(n), 0);
  fill_compositions(parts, 0, degree, out);
  return out;
}

std::vector<Composition> rearrangements(const Composition& a) {
  std::vector<int> v = a.to_vector();
  std::sort(v.begin(), v.end());
  std::vector<Composition> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

// -------------------------------------------------------------- SuperPoly

SuperPoly::SuperPoly(int n, int m) : n_(n), m_(m) {
  if (n < 1 || n > kMaxN) raise("InvalidSize", "N must lie in 1.." + std::to_string(kMaxN));
  if (m < 0 || m > n) raise("InvalidDegree", "fermionic degree out of range");
}

SuperPoly SuperPoly::from_fermion(const Composition& alpha, const FermionPoly& p) {
  if (alpha.size() != p.n()) raise("SizeMismatch", "composition length differs from N");
  SuperPoly r(p.n(), p.m());
  for (const auto& [mask, c] : p.terms()) r.add_term(alpha, mask, c);
  return r;
}

void SuperPoly::add_term(const Composition& alpha, std::uint32_t mask, const KField& c) {
  if (alpha.size() != n_) raise("SizeMismatch", "composition length differs from N");
  if (std::popcount(mask) != m_) raise("DegreeMismatch", "term of the wrong fermionic degree");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(MonoKey{alpha, mask}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

KField SuperPoly::coeff(const Composition& alpha, const SubsetE& e) const {
  auto it = terms_.find(MonoKey{alpha, e.mask()});
  return it == terms_.end() ? KField() : it->second;
}

FermionPoly SuperPoly::fermion_part(const Composition& alpha) const {
  FermionPoly r(n_, m_);
  auto it = terms_.lower_bound(MonoKey{alpha, 0});
  for (; it != terms_.end() && it->first.alpha == alpha; ++it) r.add_term(SubsetE(n_, it->first.mask), it->second);
  return r;
}

int SuperPoly::bosonic_degree() const {
  int d = -1;
  for (const auto& [key, c] : terms_) {
    const int k = key.alpha.degree();
    if (d >= 0 && k != d) raise("NotHomogeneous", "mixed bosonic degrees");
    d = k;
  }
  return d;
}

void SuperPoly::check_compatible(const SuperPoly& o) const {
  if (n_ != o.n_) raise("SizeMismatch", "superpolynomials of different N");
  if (m_ != o.m_) raise("DegreeMismatch", "superpolynomials of different fermionic degree");
}

SuperPoly& SuperPoly::operator+=(const SuperPoly& o) {
  check_compatible(o);
  for (const auto& [key, c] : o.terms_) add_term(key.alpha, key.mask, c);
  return *this;
}

SuperPoly& SuperPoly::operator-=(const SuperPoly& o) {
  check_compatible(o);
  for (const auto& [key, c] : o.terms_) add_term(key.alpha, key.mask, -c);
  return *this;
}

SuperPoly& SuperPoly::operator*=(const KField& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, v] : terms_) v *= c;
  return *this;
}

SuperPoly SuperPoly::operator-() const {
  SuperPoly r = *this;
  for (auto& [key, v] : r.terms_) v = -v;
  return r;
}

SuperPoly SuperPoly::negate_kappa() const {
  SuperPoly r = *this;
  for (auto& [key, v] : r.terms_) v = v.negate_kappa();
  return r;
}

std::string SuperPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    std::ostringstream mono;
    bool any = false;
    for (int i = 1; i <= n_; ++i) {
      const int e = key.alpha.at(i);
      if (e == 0) continue;
      mono << (any ? " " : "") << "x" << i;
      if (e > 1) mono << "^" << e;
      any = true;
    }
    std::string theta;
    for (int p : SubsetE(n_, key.mask).positions()) theta += "θ" + std::to_string(p);
    if (!theta.empty()) mono << (any ? " " : "") << theta;
    append_term(out, c, mono.str(), first);
    first = false;
  }
  return out.str();
}

// -------------------------------------------------------------- operators

namespace {

void check_index(int i, int n) {
  if (i < 1 || i > n) raise("InvalidPosition", "variable index out of range");
}

void accumulate(std::map<MonoKey, KField>& acc, const Composition& alpha, std::uint32_t mask,
                const KField& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = acc.try_emplace(MonoKey{alpha, mask}, c);
  if (!inserted) it->second += c;
}

// D_i split as plain + kappa * swap_part.
void dunkl_parts(int i, const SuperPoly& p, std::map<MonoKey, KField>& plain,
                 std::map<MonoKey, KField>& swap_part) {
  const int n = p.n();
  for (const auto& [key, c] : p.terms()) {
    const Composition& alpha = key.alpha;
    const int a = alpha.at(i);
    if (a > 0) {
      Composition lowered = alpha;
      lowered.set(i, a - 1);
      accumulate(plain, lowered, key.mask, c * KField(static_cast<long>(a)));
    }
    const SubsetE e(n, key.mask);
    for (int j = 1; j <= n; ++j) {
      if (j == i) continue;
      const int b = alpha.at(j);
      if (a == b) continue;
      const SignedSet moved = transposition_on_phi(i, j, e);
      const int sign = moved.sign * (a > b ? 1 : -1);
      const KField term = sign > 0 ? c : -c;
      const int lo = std::min(a, b);
      const int gap = std::abs(a - b);
      Composition mono = alpha;
      for (int k = 0; k < gap; ++k) {
        mono.set(i, lo + gap - 1 - k);
        mono.set(j, lo + k);
        accumulate(swap_part, mono, moved.set.mask(), term);
      }
    }
  }
}

SuperPoly combine_parts(int n, int m, const std::map<MonoKey, KField>& plain,
                        const std::map<MonoKey, KField>& swap_part) {
  SuperPoly r(n, m);
  const KField kappa = KField::kappa();
  for (const auto& [key, c] : plain) r.add_term(key.alpha, key.mask, c);
  for (const auto& [key, c] : swap_part) {
    if (!c.is_zero()) r.add_term(key.alpha, key.mask, c * kappa);
  }
  return r;
}

}  // namespace

SuperPoly sp_apply_transposition(int i, int j, const SuperPoly& p) {
  check_index(i, p.n());
  check_index(j, p.n());
  SuperPoly r(p.n(), p.m());
  for (const auto& [key, c] : p.terms()) {
    const SignedSet moved = transposition_on_phi(i, j, SubsetE(p.n(), key.mask));
    r.add_term(key.alpha.swapped(i, j), moved.set.mask(), moved.sign > 0 ? c : -c);
  }
  return r;
}

SuperPoly sp_apply_si(int i, const SuperPoly& p) { return sp_apply_transposition(i, i + 1, p); }

SuperPoly sp_apply_perm(const Permutation& w, const SuperPoly& p) {
  check_permutation(w, p.n());
  SuperPoly r(p.n(), p.m());
  for (const auto& [key, c] : p.terms()) {
    Composition beta = Composition::zeros(p.n());
    for (int k = 1; k <= p.n(); ++k) beta.set(w[static_cast<std::size_t>(k - 1)], key.alpha.at(k));
    const SignedSet moved = permute_phi(w, SubsetE(p.n(), key.mask));
    r.add_term(beta, moved.set.mask(), moved.sign > 0 ? c : -c);
  }
  return r;
}

SuperPoly mul_x(int i, const SuperPoly& p) {
  check_index(i, p.n());
  SuperPoly r(p.n(), p.m());
  for (const auto& [key, c] : p.terms()) {
    Composition raised = key.alpha;
    raised.set(i, raised.at(i) + 1);
    r.add_term(raised, key.mask, c);
  }
  return r;
}

SuperPoly dunkl_D(int i, const SuperPoly& p) {
  check_index(i, p.n());
  std::map<MonoKey, KField> plain;
  std::map<MonoKey, KField> swap_part;
  dunkl_parts(i, p, plain, swap_part);
  return combine_parts(p.n(), p.m(), plain, swap_part);
}

SuperPoly cherednik_U(int i, const SuperPoly& p) {
  check_index(i, p.n());
  std::map<MonoKey, KField> plain;
  std::map<MonoKey, KField> swap_part;
  dunkl_parts(i, mul_x(i, p), plain, swap_part);
  for (int j = 1; j < i; ++j) {
    for (const auto& [key, c] : p.terms()) {
      const SignedSet moved = transposition_on_phi(i, j, SubsetE(p.n(), key.mask));
      accumulate(swap_part, key.alpha.swapped(i, j), moved.set.mask(), moved.sign > 0 ? -c : c);
    }
  }
  return combine_parts(p.n(), p.m(), plain, swap_part);
}

SuperPoly affine_shift(const SuperPoly& p) {
  const int n = p.n();
  Permutation w(static_cast<std::size_t>(n));
  w[0] = n;
  for (int k = 2; k <= n; ++k) w[static_cast<std::size_t>(k - 1)] = k - 1;
  return mul_x(n, sp_apply_perm(w, p));
}

SuperPoly sp_delta_dual(const SuperPoly& p) {
  SuperPoly r(p.n(), p.n() - p.m());
  for (const auto& [key, c] : p.terms()) {
    const SubsetE e(p.n(), key.mask);
    r.add_term(key.alpha, e.complement().mask(), sigma(inv_count(e)) > 0 ? c : -c);
  }
  return r;
}

SuperPoly symmetrize_sum(const SuperPoly& p) {
  Permutation w = identity_permutation(p.n());
  SuperPoly total(p.n(), p.m());
  do {
    total += sp_apply_perm(w, p);
  } while (std::next_permutation(w.begin(), w.end()));
  return total;
}

}  // namespace jack
