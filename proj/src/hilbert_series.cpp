#include "jack/hilbert_series.hpp"

#include <algorithm>
#include <sstream>

#include "jack/errors.hpp"

namespace jack {

QSeries::QSeries(int trunc) : trunc_(trunc), coeffs_(static_cast<std::size_t>(std::max(trunc, -1) + 1)) {
  if (trunc < 0) raise("InvalidArgument", "truncation degree must be nonnegative");
}

QSeries QSeries::one(int trunc) { return monomial(0, trunc); }

QSeries QSeries::monomial(int power, int trunc) {
  QSeries s(trunc);
  if (power >= 0 && power <= trunc) s.coeffs_[static_cast<std::size_t>(power)] = 1;
  return s;
}

Integer QSeries::coeff(int power) const {
  if (power < 0 || power > trunc_) return 0;
  return coeffs_[static_cast<std::size_t>(power)];
}

void QSeries::set_coeff(int power, const Integer& value) {
  if (power < 0 || power > trunc_) raise("InvalidArgument", "power outside the truncation window");
  coeffs_[static_cast<std::size_t>(power)] = value;
}

int QSeries::degree() const {
  for (int d = trunc_; d >= 0; --d) {
    if (coeffs_[static_cast<std::size_t>(d)] != 0) return d;
  }
  return -1;
}

Integer QSeries::at_one() const {
  Integer total = 0;
  for (const Integer& c : coeffs_) total += c;
  return total;
}

QSeries& QSeries::operator+=(const QSeries& other) {
  if (other.trunc_ < trunc_) *this = retruncated(other.trunc_);
  for (int d = 0; d <= trunc_; ++d) coeffs_[static_cast<std::size_t>(d)] += other.coeff(d);
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& other) {
  if (other.trunc_ < trunc_) *this = retruncated(other.trunc_);
  for (int d = 0; d <= trunc_; ++d) coeffs_[static_cast<std::size_t>(d)] -= other.coeff(d);
  return *this;
}

QSeries& QSeries::operator*=(const QSeries& other) {
  const int t = std::min(trunc_, other.trunc_);
  QSeries out(t);
  for (int a = 0; a <= t; ++a) {
    const Integer& ca = coeffs_[static_cast<std::size_t>(a)];
    if (ca == 0) continue;
    for (int b = 0; a + b <= t; ++b) out.coeffs_[static_cast<std::size_t>(a + b)] += ca * other.coeff(b);
  }
  *this = std::move(out);
  return *this;
}

bool operator==(const QSeries& a, const QSeries& b) {
  const int t = std::min(a.trunc_, b.trunc_);
  for (int d = 0; d <= t; ++d) {
    if (a.coeff(d) != b.coeff(d)) return false;
  }
  return true;
}

QSeries QSeries::shifted(int power) const {
  if (power < 0) raise("InvalidArgument", "negative shift");
  QSeries out(trunc_);
  for (int d = 0; d + power <= trunc_; ++d) out.coeffs_[static_cast<std::size_t>(d + power)] = coeff(d);
  return out;
}

QSeries QSeries::divided_by_one_minus(int k) const {
  if (k < 1) raise("InvalidArgument", "1 - q^k needs k >= 1");
  QSeries out = *this;
  for (int d = k; d <= trunc_; ++d) {
    out.coeffs_[static_cast<std::size_t>(d)] += out.coeffs_[static_cast<std::size_t>(d - k)];
  }
  return out;
}

QSeries QSeries::times_one_minus(int k) const {
  if (k < 1) raise("InvalidArgument", "1 - q^k needs k >= 1");
  QSeries out = *this;
  for (int d = trunc_; d >= k; --d) {
    out.coeffs_[static_cast<std::size_t>(d)] -= coeffs_[static_cast<std::size_t>(d - k)];
  }
  return out;
}

QSeries QSeries::retruncated(int trunc) const {
  QSeries out(trunc);
  for (int d = 0; d <= trunc; ++d) out.coeffs_[static_cast<std::size_t>(d)] = coeff(d);
  return out;
}

std::string QSeries::to_string() const {
  std::ostringstream os;
  for (int d = 0; d <= trunc_; ++d) {
    if (d) os << ',';
    os << coeffs_[static_cast<std::size_t>(d)].get_str();
  }
  return os.str();
}

QSeries q_pochhammer(int n, int trunc) {
  QSeries s = QSeries::one(trunc);
  for (int i = 1; i <= n; ++i) s = s.times_one_minus(i);
  return s;
}

QSeries inverse_q_pochhammer(int n, int trunc) {
  QSeries s = QSeries::one(trunc);
  for (int i = 1; i <= n; ++i) s = s.divided_by_one_minus(i);
  return s;
}

QSeries gaussian_binomial(int a, int b, int trunc) {
  if (b < 0 || b > a) raise("InvalidArgument", "need 0 <= b <= a");
  QSeries s = QSeries::one(trunc);
  for (int i = a - b + 1; i <= a; ++i) s = s.times_one_minus(i);
  for (int i = 1; i <= b; ++i) s = s.divided_by_one_minus(i);
  return s;
}

QSeries inv_generating(int n, int m) {
  if (m < 1 || m > n - 1) raise("InvalidDegree", "m must lie in 1..N-1");
  const int top = m * (n - 1 - m);
  QSeries s(top);
  for (const SubsetE& e : labels_of(n, m, Family::Zero)) {
    const int v = inv_count(e);
    s.set_coeff(v, s.coeff(v) + 1);
  }
  return s;
}

QSeries Q_series(int n, int m, int trunc) {
  if (m < 0 || m > n - 1) return QSeries(trunc);
  return gaussian_binomial(n - 1, m, trunc).shifted(m * (m + 1) / 2);
}

namespace {

struct HookShape {
  int column;  // including the corner
  int row;     // including the corner
};

HookShape hook_shape(int n, int m, Family family) {
  if (n < 1 || n > kMaxN) raise("InvalidArgument", "N out of range");
  if (family == Family::Zero) {
    if (m < 0 || m > n - 1) raise("InvalidDegree", "family 0 needs 0 <= m <= N-1");
    return {m + 1, n - m};
  }
  if (m < 1 || m > n) raise("InvalidDegree", "family 1 needs 1 <= m <= N");
  return {m, n - m + 1};
}

}  // namespace

QSeries hook_series(int n, int m, Family family, int trunc) {
  const HookShape h = hook_shape(n, m, family);
  QSeries s = QSeries::monomial(h.column * (h.column - 1) / 2, trunc);
  s = s.divided_by_one_minus(n);
  for (int i = 1; i < h.column; ++i) s = s.divided_by_one_minus(i);
  for (int i = 1; i < h.row; ++i) s = s.divided_by_one_minus(i);
  return s;
}

Integer count_column_strict(int n, int m, Family family, int degree) {
  const HookShape h = hook_shape(n, m, family);
  if (degree < 0) return 0;
  const int d = degree;
  Integer total = 0;
  for (int corner = 0; corner * n <= d; ++corner) {
    // After subtracting the corner from every cell: column cells are distinct and
    // positive, row cells are arbitrary nonnegative.
    const int rest = d - corner * n;
    const int below = h.column - 1;
    const int right = h.row - 1;
    // strict[k][s]: strictly increasing sequences of length k with entries >= 1 and sum s
    std::vector<std::vector<Integer>> strict(static_cast<std::size_t>(below + 1),
                                             std::vector<Integer>(static_cast<std::size_t>(rest + 1)));
    strict[0][0] = 1;
    for (int v = 1; v <= rest; ++v) {
      for (int k = below; k >= 1; --k) {
        for (int s = rest; s >= v; --s) {
          strict[static_cast<std::size_t>(k)][static_cast<std::size_t>(s)] +=
              strict[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(s - v)];
        }
      }
    }
    // weak[k][s]: multisets of size k with entries >= 0 and sum s
    std::vector<std::vector<Integer>> weak(static_cast<std::size_t>(right + 1),
                                           std::vector<Integer>(static_cast<std::size_t>(rest + 1)));
    weak[0][0] = 1;
    for (int v = 0; v <= rest; ++v) {
      for (int k = 1; k <= right; ++k) {
        for (int s = v; s <= rest; ++s) {
          weak[static_cast<std::size_t>(k)][static_cast<std::size_t>(s)] +=
              weak[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(s - v)];
        }
      }
    }
    for (int s = 0; s <= rest; ++s) {
      total += strict[static_cast<std::size_t>(below)][static_cast<std::size_t>(s)] *
               weak[static_cast<std::size_t>(right)][static_cast<std::size_t>(rest - s)];
    }
  }
  return total;
}

SubsetE partition_to_subset(int k, int l, const std::vector<int>& parts) {
  if (k < 0 || l < 0 || k + l > kMaxN) raise("MalformedInput", "k + l out of range");
  if (static_cast<int>(parts.size()) != l) raise("MalformedInput", "expected l parts");
  for (std::size_t u = 0; u < parts.size(); ++u) {
    if (parts[u] < 0 || parts[u] > k) raise("MalformedInput", "parts must lie in 0..k");
    if (u > 0 && parts[u - 1] > parts[u]) raise("MalformedInput", "parts must be nondecreasing");
  }
  std::vector<int> positions;
  for (int u = 1; u <= l; ++u) positions.push_back(k + u - parts[static_cast<std::size_t>(l - u)]);
  return SubsetE::from_positions(k + l, positions);
}

std::vector<int> subset_to_partition(int k, int l, const SubsetE& subset) {
  if (subset.n() != k + l || subset.size() != l) raise("MalformedInput", "subset must have l elements in 1..k+l");
  const std::vector<int> positions = subset.positions();
  std::vector<int> parts;
  for (int u = 1; u <= l; ++u) {
    const int i = positions[static_cast<std::size_t>(l - u)];
    int count = 0;
    for (int v = i + 1; v <= k + l; ++v) count += subset.contains(v) ? 0 : 1;
    parts.push_back(count);
  }
  return parts;
}

}  // namespace jack
