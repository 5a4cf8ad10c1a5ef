#include "jack/fermionic_basis.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "jack/errors.hpp"

namespace jack {

namespace {

std::uint32_t full_mask(int n) {
  return n >= 32 ? 0xFFFFFFFFU : ((1U << n) - 1U);
}

void check_position(int pos, int n) {
  if (pos < 1 || pos > n) {
    raise("InvalidPosition", "position " + std::to_string(pos) + " outside 1.." + std::to_string(n));
  }
}

}  // namespace

// ---------------------------------------------------------------- SubsetE

SubsetE::SubsetE(int n, std::uint32_t mask) : n_(n), mask_(mask) {
  if (n < 1 || n > kMaxN) raise("InvalidSize", "N must lie in 1.." + std::to_string(kMaxN));
  if ((mask & ~full_mask(n)) != 0) raise("InvalidPosition", "subset mask exceeds {1..N}");
}

SubsetE SubsetE::from_positions(int n, const std::vector<int>& positions) {
  if (n < 1 || n > kMaxN) raise("InvalidSize", "N must lie in 1.." + std::to_string(kMaxN));
  std::uint32_t mask = 0;
  for (int p : positions) {
    check_position(p, n);
    const std::uint32_t bit = 1U << (p - 1);
    if (mask & bit) raise("InvalidPosition", "repeated position " + std::to_string(p));
    mask |= bit;
  }
  return SubsetE(n, mask);
}

SubsetE SubsetE::from_positions(int n, std::initializer_list<int> positions) {
  return from_positions(n, std::vector<int>(positions));
}

SubsetE SubsetE::interval(int n, int lo, int hi) {
  std::uint32_t mask = 0;
  for (int p = lo; p <= hi; ++p) {
    check_position(p, n);
    mask |= 1U << (p - 1);
  }
  return SubsetE(n, mask);
}

int SubsetE::size() const { return std::popcount(mask_); }

SubsetE SubsetE::complement() const { return SubsetE(n_, ~mask_ & full_mask(n_)); }

SubsetE SubsetE::with(int pos) const {
  check_position(pos, n_);
  return SubsetE(n_, mask_ | (1U << (pos - 1)));
}

SubsetE SubsetE::without(int pos) const {
  check_position(pos, n_);
  return SubsetE(n_, mask_ & ~(1U << (pos - 1)));
}

SubsetE SubsetE::swapped(int i) const {
  check_position(i, n_);
  check_position(i + 1, n_);
  const bool a = contains(i);
  const bool b = contains(i + 1);
  if (a == b) return *this;
  return a ? without(i).with(i + 1) : without(i + 1).with(i);
}

std::vector<int> SubsetE::positions() const {
  std::vector<int> out;
  for (int i = 1; i <= n_; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

std::string SubsetE::to_string() const {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (int p : positions()) {
    out << (first ? "" : ",") << p;
    first = false;
  }
  out << "}";
  return out.str();
}

int inv_count(const SubsetE& e) {
  int count = 0;
  int members_seen = 0;
  for (int j = 1; j <= e.n(); ++j) {
    if (e.contains(j)) {
      ++members_seen;
    } else {
      count += members_seen;
    }
  }
  return count;
}

int inv_prime_count(const SubsetE& e) { return inv_count(e.complement()); }

int s_count(int j, const SubsetE& e) {
  if (j >= 32) return 0;
  const std::uint32_t above = j <= 0 ? e.mask() : (e.mask() >> j);
  return std::popcount(above);
}

int below_count(int j, const SubsetE& e) {
  if (j <= 1) return 0;
  return std::popcount(e.mask() & ((1U << (j - 1)) - 1U));
}

SignedSet mul_theta(const SubsetE& e, int j) {
  check_position(j, e.n());
  if (e.contains(j)) return SignedSet{0, e};
  return SignedSet{sigma(s_count(j, e)), e.with(j)};
}

SignedSet transposition_on_phi(int i, int j, const SubsetE& e) {
  check_position(i, e.n());
  check_position(j, e.n());
  if (i == j) return SignedSet{1, e};
  const bool in_i = e.contains(i);
  const bool in_j = e.contains(j);
  if (in_i == in_j) return SignedSet{in_i ? -1 : 1, e};
  const int a = in_i ? i : j;
  const int b = in_i ? j : i;
  const SubsetE rest = e.without(a);
  return SignedSet{sigma(s_count(a, e) + s_count(b, rest)), rest.with(b)};
}

// ------------------------------------------------------------ permutations

Permutation identity_permutation(int n) {
  Permutation w(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) w[static_cast<std::size_t>(k)] = k + 1;
  return w;
}

void check_permutation(const Permutation& w, int n) {
  if (static_cast<int>(w.size()) != n) raise("InvalidPermutation", "length differs from N");
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : w) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
      raise("InvalidPermutation", "not a permutation of 1..N");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation inverse_permutation(const Permutation& w) {
  Permutation inv(w.size());
  for (std::size_t k = 0; k < w.size(); ++k) inv[static_cast<std::size_t>(w[k] - 1)] = static_cast<int>(k) + 1;
  return inv;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation r(b.size());
  for (std::size_t k = 0; k < b.size(); ++k) r[k] = a[static_cast<std::size_t>(b[k] - 1)];
  return r;
}

SignedSet permute_phi(const Permutation& w, const SubsetE& e) {
  std::vector<int> images;
  std::uint32_t mask = 0;
  for (int p : e.positions()) {
    const int v = w[static_cast<std::size_t>(p - 1)];
    images.push_back(v);
    mask |= 1U << (v - 1);
  }
  int inversions = 0;
  for (std::size_t a = 0; a < images.size(); ++a) {
    for (std::size_t b = a + 1; b < images.size(); ++b) {
      if (images[a] > images[b]) ++inversions;
    }
  }
  return SignedSet{sigma(inversions), SubsetE(e.n(), mask)};
}

std::vector<int> adjacent_factorization(const Permutation& w) {
  Permutation v = w;
  std::vector<int> factors;
  const int n = static_cast<int>(v.size());
  for (int pass = 0; pass < n; ++pass) {
    bool swapped = false;
    for (int k = 1; k < n; ++k) {
      if (v[static_cast<std::size_t>(k - 1)] > v[static_cast<std::size_t>(k)]) {
        std::swap(v[static_cast<std::size_t>(k - 1)], v[static_cast<std::size_t>(k)]);
        factors.push_back(k);
        swapped = true;
      }
    }
    if (!swapped) break;
  }
  return factors;
}

// ------------------------------------------------------------ FermionPoly

FermionPoly::FermionPoly(int n, int m) : n_(n), m_(m) {
  if (n < 1 || n > kMaxN) raise("InvalidSize", "N must lie in 1.." + std::to_string(kMaxN));
  if (m < -1 || m > n + 1) raise("InvalidDegree", "fermionic degree out of range");
}

FermionPoly FermionPoly::basis(const SubsetE& e) {
  FermionPoly p(e.n(), e.size());
  p.add_term(e, KField(1L));
  return p;
}

KField FermionPoly::coeff(const SubsetE& e) const {
  auto it = terms_.find(e.mask());
  return it == terms_.end() ? KField() : it->second;
}

void FermionPoly::add_term(const SubsetE& e, const KField& c) {
  if (e.n() != n_) raise("SizeMismatch", "subset of a different ambient size");
  if (e.size() != m_) raise("DegreeMismatch", "term of fermionic degree " + std::to_string(e.size()) +
                                                  " added to degree " + std::to_string(m_));
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e.mask(), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void FermionPoly::check_compatible(const FermionPoly& o) const {
  if (n_ != o.n_) raise("SizeMismatch", "fermionic polynomials of different N");
  if (m_ != o.m_) raise("DegreeMismatch", "fermionic polynomials of different degree");
}

FermionPoly& FermionPoly::operator+=(const FermionPoly& o) {
  check_compatible(o);
  for (const auto& [mask, c] : o.terms_) add_term(SubsetE(n_, mask), c);
  return *this;
}

FermionPoly& FermionPoly::operator-=(const FermionPoly& o) {
  check_compatible(o);
  for (const auto& [mask, c] : o.terms_) add_term(SubsetE(n_, mask), -c);
  return *this;
}

FermionPoly& FermionPoly::operator*=(const KField& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [mask, v] : terms_) v *= c;
  return *this;
}

FermionPoly FermionPoly::operator-() const {
  FermionPoly r = *this;
  for (auto& [mask, v] : r.terms_) v = -v;
  return r;
}

FermionPoly FermionPoly::negate_kappa() const {
  FermionPoly r = *this;
  for (auto& [mask, v] : r.terms_) v = v.negate_kappa();
  return r;
}

std::string FermionPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [mask, c] : terms_) {
    std::string theta;
    for (int p : SubsetE(n_, mask).positions()) theta += "θ" + std::to_string(p);
    append_term(out, c, theta, first);
    first = false;
  }
  return out.str();
}

// -------------------------------------------------------------- operators

FermionPoly apply_transposition(int i, int j, const FermionPoly& p) {
  FermionPoly r(p.n(), p.m());
  for (const auto& [mask, c] : p.terms()) {
    SignedSet t = transposition_on_phi(i, j, SubsetE(p.n(), mask));
    r.add_term(t.set, t.sign > 0 ? c : -c);
  }
  return r;
}

FermionPoly apply_group(const Permutation& w, const FermionPoly& p) {
  check_permutation(w, p.n());
  FermionPoly r = p;
  for (int k : adjacent_factorization(w)) r = apply_transposition(k, k + 1, r);
  return r;
}

FermionPoly delta_dual(const FermionPoly& p) {
  FermionPoly r(p.n(), p.n() - p.m());
  for (const auto& [mask, c] : p.terms()) {
    SubsetE e(p.n(), mask);
    r.add_term(e.complement(), sigma(inv_count(e)) > 0 ? c : -c);
  }
  return r;
}

FermionPoly psi_vector(const SubsetE& e, int m) {
  if (e.size() != m + 1) raise("WrongCardinality", "psi requires #E = m + 1");
  FermionPoly r(e.n(), m);
  for (int j : e.positions()) r.add_term(e.without(j), KField(static_cast<long>(sigma(s_count(j, e)))));
  return r;
}

FermionPoly eta_vector(const SubsetE& e, int m) {
  if (e.size() != m - 1) raise("WrongCardinality", "eta requires #E = m - 1");
  FermionPoly r(e.n(), m);
  for (int j = 1; j <= e.n(); ++j) {
    if (!e.contains(j)) r.add_term(e.with(j), KField(static_cast<long>(sigma(s_count(j, e)))));
  }
  return r;
}

FermionPoly raising_M(const FermionPoly& p) {
  FermionPoly r(p.n(), p.m() + 1);
  for (const auto& [mask, c] : p.terms()) {
    SubsetE e(p.n(), mask);
    for (int i = 1; i <= p.n(); ++i) {
      if (e.contains(i)) continue;
      r.add_term(e.with(i), sigma(below_count(i, e)) > 0 ? c : -c);
    }
  }
  return r;
}

FermionPoly lowering_D(const FermionPoly& p) {
  FermionPoly r(p.n(), p.m() - 1);
  for (const auto& [mask, c] : p.terms()) {
    SubsetE e(p.n(), mask);
    for (int i : e.positions()) r.add_term(e.without(i), sigma(below_count(i, e)) > 0 ? c : -c);
  }
  return r;
}

FermionPoly project(const FermionPoly& p, int target) {
  if (target != 0 && target != 1) raise("InvalidFamily", "projection target must be 0 or 1");
  FermionPoly r = target == 0 ? lowering_D(raising_M(p)) : raising_M(lowering_D(p));
  return r * KField(Rational(1, p.n()));
}

KField fermion_dot(const FermionPoly& a, const FermionPoly& b) {
  if (a.n() != b.n() || a.m() != b.m()) return KField();
  KField acc;
  for (const auto& [mask, c] : a.terms()) {
    auto it = b.terms().find(mask);
    if (it != b.terms().end()) acc += c * it->second;
  }
  return acc;
}

}  // namespace jack
