#pragma once

// FFLV patterns: nonnegative triangles T = (T_{i,j}) bounded along Dyck
// paths, the Weyl dimension formula, and the Minkowski property of the
// pattern sets.

#include "pbwdegen/core.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace pbwdegen {

/// lambda = a_1 omega_1 + ... + a_{n-1} omega_{n-1}.
class DominantWeight {
 public:
  DominantWeight() = default;
  DominantWeight(int n, std::vector<int> coeffs) : n_(n), a_(std::move(coeffs)) {
    if (n_ < 2) throw InvalidInput("dominant weight needs n >= 2");
    if (static_cast<int>(a_.size()) != n_ - 1) {
      throw InvalidInput("dominant weight needs n-1 coefficients");
    }
    for (int x : a_)
      if (x < 0) throw InvalidInput("dominant weight coefficients must be >= 0");
  }

  static DominantWeight zero(int n) { return DominantWeight(n, std::vector<int>(static_cast<std::size_t>(n - 1), 0)); }
  static DominantWeight fundamental(int n, int k) {
    DominantWeight w = zero(n);
    w.a_.at(static_cast<std::size_t>(k - 1)) = 1;
    return w;
  }

  int n() const { return n_; }
  /// a_k for 1 <= k <= n-1.
  int coeff(int k) const { return a_.at(static_cast<std::size_t>(k - 1)); }
  const std::vector<int>& coeffs() const { return a_; }
  int total() const { return std::accumulate(a_.begin(), a_.end(), 0); }

  /// Sorted k with a_k > 0.
  std::vector<int> support() const {
    std::vector<int> d;
    for (int k = 1; k < n_; ++k)
      if (coeff(k) > 0) d.push_back(k);
    return d;
  }

  /// Column heights of the Young diagram, tallest first.
  std::vector<int> column_heights() const {
    std::vector<int> h;
    for (int k = n_ - 1; k >= 1; --k)
      for (int c = 0; c < coeff(k); ++c) h.push_back(k);
    return h;
  }

  DominantWeight operator+(const DominantWeight& o) const {
    if (o.n_ != n_) throw InvalidInput("adding dominant weights of different n");
    DominantWeight r = *this;
    for (std::size_t t = 0; t < a_.size(); ++t) r.a_[t] += o.a_[t];
    return r;
  }

  friend bool operator==(const DominantWeight&, const DominantWeight&) = default;

 private:
  int n_ = 0;
  std::vector<int> a_;
};

/// Nonnegative integer triangle over pairs 1 <= i < j <= n.
class TrianglePattern {
 public:
  TrianglePattern() = default;
  explicit TrianglePattern(int n) : n_(n), t_(pair_count(n), 0) {
    if (n < 2) throw InvalidInput("pattern needs n >= 2");
  }

  int n() const { return n_; }
  int at(int i, int j) const { return t_[slot(i, j)]; }
  void set(int i, int j, int v) {
    if (v < 0) throw InvalidInput("pattern entries must be >= 0");
    t_[slot(i, j)] = v;
  }
  /// Entries in lexicographic pair order.
  const std::vector<int>& entries() const { return t_; }
  bool is_zero() const {
    return std::all_of(t_.begin(), t_.end(), [](int v) { return v == 0; });
  }

  TrianglePattern operator+(const TrianglePattern& o) const {
    if (o.n_ != n_) throw InvalidInput("adding patterns of different n");
    TrianglePattern r = *this;
    for (std::size_t s = 0; s < t_.size(); ++s) r.t_[s] += o.t_[s];
    return r;
  }

  auto operator<=>(const TrianglePattern&) const = default;

 private:
  std::size_t slot(int i, int j) const {
    if (!(1 <= i && i < j && j <= n_)) throw InvalidInput("pattern index out of range");
    return pair_slot(n_, i, j);
  }

  int n_ = 0;
  std::vector<int> t_;
};

/// A Dyck path: starts and ends in the top row j-i = 1, each step moving to
/// (i+1,j) or (i,j+1).
struct DyckPath {
  std::vector<RootPair> steps;
  auto operator<=>(const DyckPath&) const = default;
};

inline bool is_dyck_path(const DyckPath& p, int n) {
  if (p.steps.empty()) return false;
  for (const auto& [i, j] : p.steps)
    if (!(1 <= i && i < j && j <= n)) return false;
  if (p.steps.front().j - p.steps.front().i != 1) return false;
  if (p.steps.back().j - p.steps.back().i != 1) return false;
  for (std::size_t t = 1; t < p.steps.size(); ++t) {
    const RootPair a = p.steps[t - 1], b = p.steps[t];
    const bool down = b.i == a.i + 1 && b.j == a.j;
    const bool up = b.i == a.i && b.j == a.j + 1;
    if (!down && !up) return false;
  }
  return true;
}

namespace detail {

inline void extend_paths(int n, std::vector<RootPair>& cur, std::vector<DyckPath>& out) {
  const RootPair last = cur.back();
  if (last.j - last.i == 1) out.push_back({cur});
  if (last.i + 1 < last.j) {
    cur.push_back({last.i + 1, last.j});
    extend_paths(n, cur, out);
    cur.pop_back();
  }
  if (last.j + 1 <= n) {
    cur.push_back({last.i, last.j + 1});
    extend_paths(n, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

/// Every Dyck path for n, sorted lexicographically by step sequence. Results
/// are computed once per n and shared.
inline std::shared_ptr<const std::vector<DyckPath>> dyck_paths_shared(int n) {
  if (n < 2) throw InvalidInput("dyck_paths needs n >= 2");
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const std::vector<DyckPath>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<DyckPath> paths;
  for (int i = 1; i < n; ++i) {
    std::vector<RootPair> cur{{i, i + 1}};
    detail::extend_paths(n, cur, paths);
  }
  std::sort(paths.begin(), paths.end());
  auto ptr = std::make_shared<const std::vector<DyckPath>>(std::move(paths));
  cache.emplace(n, ptr);
  return ptr;
}

inline std::vector<DyckPath> dyck_paths(int n) { return *dyck_paths_shared(n); }

/// M(lambda, path) = a_{i_1} + ... + a_{i_N}.
inline long path_bound(const DominantWeight& lambda, const DyckPath& p) {
  long m = 0;
  for (int t = p.steps.front().i; t <= p.steps.back().i; ++t) m += lambda.coeff(t);
  return m;
}

/// S(T, path): sum of T over the cells of the path.
inline long path_sum(const TrianglePattern& T, const DyckPath& p) {
  long s = 0;
  for (const auto& [i, j] : p.steps) s += T.at(i, j);
  return s;
}

inline bool is_fflv_pattern(const TrianglePattern& T, const DominantWeight& lambda) {
  if (T.n() != lambda.n()) throw InvalidInput("pattern and weight have different n");
  for (const auto& p : *dyck_paths_shared(T.n()))
    if (path_sum(T, p) > path_bound(lambda, p)) return false;
  return true;
}

/// Bound for a single cell: the path up column i to (i,j) and then down to
/// (j-1,j), whose bound is a_i + ... + a_{j-1}.
inline int cell_bound(const DominantWeight& lambda, int i, int j) {
  int m = 0;
  for (int t = i; t < j; ++t) m += lambda.coeff(t);
  return m;
}

/// All of Pi_lambda in lexicographic order of entry vectors.
inline std::vector<TrianglePattern> enumerate_patterns(const DominantWeight& lambda) {
  const int n = lambda.n();
  const auto paths = dyck_paths_shared(n);
  const auto pairs = all_pairs(n);
  // Check each path as soon as its last cell (in lexicographic order) is set.
  std::vector<std::vector<std::size_t>> closing(pairs.size());
  for (std::size_t p = 0; p < paths->size(); ++p) {
    std::size_t last = 0;
    for (const auto& [i, j] : (*paths)[p].steps) last = std::max(last, pair_slot(n, i, j));
    closing[last].push_back(p);
  }
  std::vector<int> bound(pairs.size());
  for (std::size_t s = 0; s < pairs.size(); ++s) bound[s] = cell_bound(lambda, pairs[s].i, pairs[s].j);

  std::vector<TrianglePattern> out;
  TrianglePattern cur(n);
  auto rec = [&](auto&& self, std::size_t s) -> void {
    if (s == pairs.size()) {
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= bound[s]; ++v) {
      cur.set(pairs[s].i, pairs[s].j, v);
      bool ok = true;
      for (std::size_t p : closing[s]) {
        if (path_sum(cur, (*paths)[p]) > path_bound(lambda, (*paths)[p])) {
          ok = false;
          break;
        }
      }
      // Sums only grow with v, so the first failure ends this cell.
      if (!ok) break;
      self(self, s + 1);
    }
    cur.set(pairs[s].i, pairs[s].j, 0);
  };
  rec(rec, 0);
  return out;
}

/// dim L_lambda = prod_{i<j} <lambda+rho, alpha_{i,j}> / (j-i).
inline std::uint64_t weyl_dim(const DominantWeight& lambda) {
  const int n = lambda.n();
  Integer num = 1, den = 1;
  for (const auto& [i, j] : all_pairs(n)) {
    long s = 0;
    for (int t = i; t < j; ++t) s += lambda.coeff(t) + 1;
    num *= s;
    den *= (j - i);
  }
  Integer q = num / den;
  if (q * den != num) throw std::logic_error("weyl_dim: non-integral quotient");
  return q.get_ui();
}

/// Pi_lambda + Pi_mu == Pi_{lambda+mu} as sets.
inline bool minkowski_check(const DominantWeight& lambda, const DominantWeight& mu) {
  if (lambda.n() != mu.n()) throw InvalidInput("minkowski_check: different n");
  const auto left = enumerate_patterns(lambda);
  const auto right = enumerate_patterns(mu);
  std::set<TrianglePattern> sums;
  for (const auto& t : left)
    for (const auto& s : right) sums.insert(t + s);
  const auto target = enumerate_patterns(lambda + mu);
  return sums == std::set<TrianglePattern>(target.begin(), target.end());
}

/// All dominant weights for n with total a_1 + ... + a_{n-1} <= max_total,
/// in lexicographic order of coefficient vectors.
inline std::vector<DominantWeight> dominant_weights_up_to(int n, int max_total) {
  std::vector<DominantWeight> out;
  std::vector<int> a(static_cast<std::size_t>(n - 1), 0);
  auto rec = [&](auto&& self, std::size_t pos, int left) -> void {
    if (pos == a.size()) {
      out.emplace_back(n, a);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      a[pos] = v;
      self(self, pos + 1, left - v);
    }
    a[pos] = 0;
  };
  rec(rec, 0, max_total);
  return out;
}

}  // namespace pbwdegen
