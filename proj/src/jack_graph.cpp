#include "jack/jack_graph.hpp"

#include <filesystem>
#include <fstream>
#include <list>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>

#include "jack/errors.hpp"
#include "jack/serialize.hpp"

namespace jack {

std::vector<int> rank_function(const Composition& alpha) {
  const int n = alpha.size();
  std::vector<int> r(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    int count = 0;
    for (int j = 1; j <= n; ++j) {
      if (alpha.at(j) > alpha.at(i) || (j <= i && alpha.at(j) == alpha.at(i))) ++count;
    }
    r[static_cast<std::size_t>(i - 1)] = count;
  }
  return r;
}

bool dominance_leq(const Composition& a, const Composition& b) {
  int sa = 0;
  int sb = 0;
  for (int i = 1; i <= a.size(); ++i) {
    sa += a.at(i);
    sb += b.at(i);
    if (sa > sb) return false;
  }
  return sa == sb;
}

bool order_below(const Composition& beta, const Composition& alpha) {
  if (beta == alpha) return false;
  const Composition bp = sorted_decreasing(beta);
  const Composition ap = sorted_decreasing(alpha);
  if (bp != ap) return dominance_leq(bp, ap);
  return dominance_leq(beta, alpha);
}

KField SpectralEntry::value() const {
  return KField::linear(Rational(degree_part), Rational(content_part));
}

std::vector<SpectralEntry> spectral_vector(const Composition& alpha, const HookLabel& label) {
  if (alpha.size() != label.n()) raise("SizeMismatch", "composition length differs from N");
  const auto r = rank_function(alpha);
  std::vector<SpectralEntry> z;
  for (int i = 1; i <= alpha.size(); ++i) {
    z.push_back(SpectralEntry{alpha.at(i) + 1, content(label, r[static_cast<std::size_t>(i - 1)])});
  }
  return z;
}

KField b_coeff(const Composition& alpha, const HookLabel& label, int i) {
  if (i < 1 || i >= alpha.size()) raise("InvalidPosition", "b coefficient index out of range");
  const auto z = spectral_vector(alpha, label);
  const SpectralEntry& a = z[static_cast<std::size_t>(i - 1)];
  const SpectralEntry& b = z[static_cast<std::size_t>(i)];
  const int dd = a.degree_part - b.degree_part;
  const int dc = a.content_part - b.content_part;
  if (dd == 0 && dc == 0) raise("DegenerateSpectralGap", "zeta_i equals zeta_{i+1}");
  return KField::kappa() / KField::linear(Rational(dd), Rational(dc));
}

Composition affine_image(const Composition& alpha) {
  const int n = alpha.size();
  Composition r = Composition::zeros(n);
  for (int k = 1; k < n; ++k) r.set(k, alpha.at(k + 1));
  r.set(n, alpha.at(1) + 1);
  return r;
}

std::vector<Move> canonical_path(const Composition& alpha) {
  std::vector<Move> reversed;
  Composition a = alpha;
  const int n = a.size();
  while (!a.is_zero()) {
    int descent = 0;
    for (int i = 1; i < n; ++i) {
      if (a.at(i) > a.at(i + 1)) {
        descent = i;
        break;
      }
    }
    if (descent > 0) {
      reversed.push_back(Move{MoveKind::Step, descent});
      a = a.swapped(descent, descent + 1);
      continue;
    }
    Composition prev = Composition::zeros(n);
    prev.set(1, a.at(n) - 1);
    for (int k = 2; k <= n; ++k) prev.set(k, a.at(k - 1));
    reversed.push_back(Move{MoveKind::Affine, 0});
    a = prev;
  }
  return std::vector<Move>(reversed.rbegin(), reversed.rend());
}

SuperPoly leading_block(const Composition& alpha, const HookLabel& label) {
  const auto r = rank_function(alpha);
  const FermionPoly t = apply_group(inverse_permutation(r), build_T(label));
  return SuperPoly::from_fermion(alpha, t);
}

// ----------------------------------------------------------------- memo

namespace {

struct NodeKey {
  int n = 0;
  int m = 0;
  int family = 0;
  std::uint32_t mask = 0;
  Composition alpha;
  friend auto operator<=>(const NodeKey&, const NodeKey&) = default;
};

NodeKey key_of(const Composition& alpha, const HookLabel& label) {
  return NodeKey{label.n(), label.m, family_index(label.family), label.set.mask(), alpha};
}

class NodeCache {
 public:
  std::optional<SuperPoly> find(const NodeKey& key) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = index_.find(key);
    if (it == index_.end()) {
      ++misses_;
      return std::nullopt;
    }
    ++hits_;
    order_.splice(order_.begin(), order_, it->second);
    return it->second->second;
  }

  void insert(const NodeKey& key, const SuperPoly& value) {
    std::lock_guard<std::mutex> lock(mutex_);
    if (capacity_ == 0) return;
    auto it = index_.find(key);
    if (it != index_.end()) {
      order_.splice(order_.begin(), order_, it->second);
      return;
    }
    order_.emplace_front(key, value);
    index_.emplace(key, order_.begin());
    trim();
  }

  void set_capacity(std::size_t capacity) {
    std::lock_guard<std::mutex> lock(mutex_);
    capacity_ = capacity;
    trim();
  }

  void clear() {
    std::lock_guard<std::mutex> lock(mutex_);
    order_.clear();
    index_.clear();
    hits_ = 0;
    misses_ = 0;
  }

  JackCacheStats stats() {
    std::lock_guard<std::mutex> lock(mutex_);
    return JackCacheStats{index_.size(), capacity_, hits_, misses_};
  }

  void set_directory(const std::string& dir) {
    std::lock_guard<std::mutex> lock(mutex_);
    directory_ = dir;
  }

  std::string directory() {
    std::lock_guard<std::mutex> lock(mutex_);
    return directory_;
  }

 private:
  void trim() {
    while (index_.size() > capacity_) {
      index_.erase(order_.back().first);
      order_.pop_back();
    }
  }

  std::mutex mutex_;
  std::list<std::pair<NodeKey, SuperPoly>> order_;
  std::map<NodeKey, std::list<std::pair<NodeKey, SuperPoly>>::iterator> index_;
  std::size_t capacity_ = 4096;
  std::size_t hits_ = 0;
  std::size_t misses_ = 0;
  std::string directory_;
};

NodeCache& cache() {
  static NodeCache instance;
  return instance;
}

std::string disk_name(const NodeKey& key) {
  std::ostringstream out;
  out << "J_N" << key.n << "_m" << key.m << "_f" << key.family << "_E" << key.mask << "_a";
  for (int i = 1; i <= key.alpha.size(); ++i) out << (i > 1 ? "-" : "") << key.alpha.at(i);
  out << ".json";
  return out.str();
}

std::optional<SuperPoly> disk_load(const NodeKey& key) {
  const std::string dir = cache().directory();
  if (dir.empty()) return std::nullopt;
  std::ifstream in(std::filesystem::path(dir) / disk_name(key));
  if (!in) return std::nullopt;
  try {
    Json doc = Json::parse(in);
    const std::string payload = doc.at("poly").dump();
    if (doc.at("hash").get<std::string>() != fnv1a_hex(payload)) return std::nullopt;
    return superpoly_from_json(doc.at("poly"));
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void disk_store(const NodeKey& key, const SuperPoly& value) {
  const std::string dir = cache().directory();
  if (dir.empty()) return;
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  const Json poly = superpoly_to_json(value);
  const Json doc{{"hash", fnv1a_hex(poly.dump())}, {"poly", poly}};
  const auto target = std::filesystem::path(dir) / disk_name(key);
  const auto temp = target.string() + ".tmp";
  {
    std::ofstream out(temp);
    if (!out) return;
    out << doc.dump();
  }
  std::filesystem::rename(temp, target, ec);
}

std::optional<SuperPoly> lookup(const NodeKey& key) {
  if (auto hit = cache().find(key)) return hit;
  if (auto stored = disk_load(key)) {
    cache().insert(key, *stored);
    return stored;
  }
  return std::nullopt;
}

void remember(const NodeKey& key, const SuperPoly& value) {
  cache().insert(key, value);
  disk_store(key, value);
}

}  // namespace

void set_jack_cache_capacity(std::size_t capacity) { cache().set_capacity(capacity); }
void clear_jack_cache() { cache().clear(); }
JackCacheStats jack_cache_stats() { return cache().stats(); }
void set_jack_disk_cache(const std::string& directory) { cache().set_directory(directory); }

SuperPoly build_jack(const Composition& alpha, const HookLabel& label) {
  if (alpha.size() != label.n()) raise("SizeMismatch", "composition length differs from N");
  if (auto hit = lookup(key_of(alpha, label))) return *hit;

  const std::vector<Move> path = canonical_path(alpha);
  std::vector<Composition> nodes{Composition::zeros(alpha.size())};
  for (const Move& mv : path) {
    const Composition& a = nodes.back();
    nodes.push_back(mv.kind == MoveKind::Affine ? affine_image(a) : a.swapped(mv.index, mv.index + 1));
  }

  std::size_t start = nodes.size() - 1;
  std::optional<SuperPoly> current;
  while (start > 0) {
    current = cache().find(key_of(nodes[start], label));
    if (current) break;
    --start;
  }
  if (!current) {
    current = SuperPoly::from_fermion(nodes[0], build_T(label));
    start = 0;
  }
  for (std::size_t s = start; s < path.size(); ++s) {
    const Move& mv = path[s];
    if (mv.kind == MoveKind::Affine) {
      current = affine_shift(*current);
    } else {
      const KField b = b_coeff(nodes[s], label, mv.index);
      current = sp_apply_si(mv.index, *current) - *current * b;
    }
    remember(key_of(nodes[s + 1], label), *current);
  }
  return *current;
}

bool verify_eigen(const SuperPoly& p, const Composition& alpha, const HookLabel& label) {
  const auto z = spectral_vector(alpha, label);
  for (int i = 1; i <= p.n(); ++i) {
    if (cherednik_U(i, p) != p * z[static_cast<std::size_t>(i - 1)].value()) return false;
  }
  return true;
}

EqualPairCase classify_equal_pair(const Composition& alpha, const HookLabel& label, int i) {
  if (i < 1 || i >= alpha.size()) raise("InvalidPosition", "index out of range");
  if (alpha.at(i) != alpha.at(i + 1)) raise("UnsupportedMove", "entries i and i+1 differ");
  const int j = rank_function(alpha)[static_cast<std::size_t>(i - 1)];
  const int gap = content(label, j) - content(label, j + 1);
  if (gap == 1) return EqualPairCase::SignPlus;
  if (gap == -1) return EqualPairCase::SignMinus;
  const bool lower_in = label.set.contains(j);
  const bool upper_in = label.set.contains(j + 1);
  const bool forward = label.family == Family::Zero ? (!lower_in && upper_in) : (lower_in && !upper_in);
  return forward ? EqualPairCase::JumpForward : EqualPairCase::JumpBackward;
}

JumpResult apply_jump(const SuperPoly& jp, const Composition& alpha, const HookLabel& label, int i) {
  const EqualPairCase kind = classify_equal_pair(alpha, label, i);
  if (kind == EqualPairCase::SignMinus || kind == EqualPairCase::SignPlus) {
    raise("UnsupportedMove", "s_i acts by a sign here; no label change");
  }
  const int j = rank_function(alpha)[static_cast<std::size_t>(i - 1)];
  const KField b = b_coeff(alpha, label, i);
  SuperPoly value = sp_apply_si(i, jp) - jp * b;
  if (kind == EqualPairCase::JumpBackward) value *= (KField(1L) - b * b).inverse();
  return JumpResult{HookLabel::make(label.family, label.m, label.set.swapped(j)), std::move(value)};
}

}  // namespace jack
