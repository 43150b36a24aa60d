#pragma once

// Shared vocabulary: exact scalars, Plücker indices, positive-root pairs,
// error types and an incremental exact row-echelon form.

#include <gmpxx.h>

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pbwdegen {

using Integer = mpz_class;
using Rational = mpq_class;

/// Input that does not describe a valid object (bad shape, out of range).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A well-formed input that violates an operation's precondition
/// (weight system outside the cone, incompatible faces, ...).
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A computation would exceed the configured linear-algebra size cap.
class SizeLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Cap on vector-space dimensions handled by rank computations. Read from
/// PBWDEGEN_MAX_DIM, default 20000.
inline std::size_t max_dim() {
  if (const char* env = std::getenv("PBWDEGEN_MAX_DIM")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 20000;
}

inline void check_dim(std::size_t dim, std::string_view what) {
  if (dim > max_dim()) {
    std::ostringstream os;
    os << what << ": dimension " << dim << " exceeds cap " << max_dim()
       << " (raise PBWDEGEN_MAX_DIM to allow)";
    throw SizeLimitError(os.str());
  }
}

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

/// Parse "p", "-p" or "p/q" into a canonical rational.
inline Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0) {
    throw InvalidInput("not a rational number: '" + text + "'");
  }
  if (q.get_den() == 0) throw InvalidInput("zero denominator: '" + text + "'");
  q.canonicalize();
  return q;
}

inline Integer parse_integer(const std::string& text) {
  Integer z;
  if (text.empty() || z.set_str(text, 10) != 0) {
    throw InvalidInput("not an integer: '" + text + "'");
  }
  return z;
}

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int t = 1; t <= k; ++t) r = r * static_cast<std::uint64_t>(n - k + t) / t;
  return r;
}

// ---------------------------------------------------------------------------
// Positive roots (i,j), 1 <= i < j <= n, stored lexicographically.

struct RootPair {
  int i = 0;
  int j = 0;
  auto operator<=>(const RootPair&) const = default;
};

inline std::size_t pair_count(int n) { return static_cast<std::size_t>(n) * (n - 1) / 2; }

/// Position of (i,j) in the lexicographic order (1,2),(1,3),...,(n-1,n).
inline std::size_t pair_slot(int n, int i, int j) {
  return static_cast<std::size_t>((i - 1) * n - (i - 1) * i / 2 + (j - i - 1));
}

inline std::vector<RootPair> all_pairs(int n) {
  std::vector<RootPair> out;
  out.reserve(pair_count(n));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) out.push_back({i, j});
  return out;
}

inline std::string pair_key(int i, int j) { return std::to_string(i) + "," + std::to_string(j); }

/// Parse "i,j" into a pair within [1,n].
inline RootPair parse_pair_key(const std::string& key, int n) {
  const auto comma = key.find(',');
  if (comma == std::string::npos) throw InvalidInput("pair key must be 'i,j': '" + key + "'");
  int i = 0, j = 0;
  try {
    std::size_t used = 0;
    i = std::stoi(key.substr(0, comma), &used);
    if (used != comma) throw std::invalid_argument("trailing");
    const std::string rest = key.substr(comma + 1);
    j = std::stoi(rest, &used);
    if (used != rest.size()) throw std::invalid_argument("trailing");
  } catch (const std::logic_error&) {
    throw InvalidInput("pair key must be 'i,j': '" + key + "'");
  }
  if (!(1 <= i && i < j && j <= n)) throw InvalidInput("pair out of range: '" + key + "'");
  return {i, j};
}

// ---------------------------------------------------------------------------
// Plücker indices.

/// A strictly increasing, proper, nonempty tuple I = (i_1 < ... < i_k) of
/// elements of [1,n]. Indexes the coordinate X_I and basis vector e_I.
class PlueckerIndex {
 public:
  PlueckerIndex() = default;

  PlueckerIndex(int n, std::vector<int> elems) : n_(n), elems_(std::move(elems)) {
    if (n_ < 2) throw InvalidInput("Plücker index needs n >= 2");
    if (elems_.empty() || static_cast<int>(elems_.size()) >= n_) {
      throw InvalidInput("Plücker index size must be in [1, n-1]");
    }
    for (std::size_t t = 0; t < elems_.size(); ++t) {
      if (elems_[t] < 1 || elems_[t] > n_) throw InvalidInput("Plücker index entry out of [1,n]");
      if (t > 0 && elems_[t - 1] >= elems_[t]) {
        throw InvalidInput("Plücker index must be strictly increasing");
      }
    }
  }

  /// The initial segment (1,...,k).
  static PlueckerIndex initial(int n, int k) {
    std::vector<int> e(static_cast<std::size_t>(k));
    for (int t = 0; t < k; ++t) e[static_cast<std::size_t>(t)] = t + 1;
    return PlueckerIndex(n, std::move(e));
  }

  int n() const { return n_; }
  int size() const { return static_cast<int>(elems_.size()); }
  const std::vector<int>& elems() const { return elems_; }
  bool contains(int x) const { return std::binary_search(elems_.begin(), elems_.end(), x); }
  bool is_initial() const { return elems_.back() == size(); }

  /// Comma-joined key, e.g. "1,3".
  std::string key() const {
    std::string s;
    for (std::size_t t = 0; t < elems_.size(); ++t) {
      if (t) s += ',';
      s += std::to_string(elems_[t]);
    }
    return s;
  }

  /// Ordered by size, then lexicographically.
  friend std::strong_ordering operator<=>(const PlueckerIndex& a, const PlueckerIndex& b) {
    if (auto c = a.elems_.size() <=> b.elems_.size(); c != 0) return c;
    return a.elems_ <=> b.elems_;
  }
  friend bool operator==(const PlueckerIndex& a, const PlueckerIndex& b) {
    return a.elems_ == b.elems_;
  }

 private:
  int n_ = 0;
  std::vector<int> elems_;
};

/// All size-k indices in lexicographic order.
inline std::vector<PlueckerIndex> indices_of_size(int n, int k) {
  std::vector<PlueckerIndex> out;
  std::vector<int> cur(static_cast<std::size_t>(k));
  for (int t = 0; t < k; ++t) cur[static_cast<std::size_t>(t)] = t + 1;
  while (true) {
    out.emplace_back(n, cur);
    int pos = k - 1;
    while (pos >= 0 && cur[static_cast<std::size_t>(pos)] == n - k + pos + 1) --pos;
    if (pos < 0) break;
    ++cur[static_cast<std::size_t>(pos)];
    for (int t = pos + 1; t < k; ++t) cur[static_cast<std::size_t>(t)] = cur[static_cast<std::size_t>(t - 1)] + 1;
  }
  return out;
}

/// All proper nonempty subsets of [1,n], by size then lexicographically.
inline std::vector<PlueckerIndex> all_proper_indices(int n) {
  std::vector<PlueckerIndex> out;
  for (int k = 1; k < n; ++k) {
    auto part = indices_of_size(n, k);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

/// Parse "1,3,4" into an index of [1,n].
inline PlueckerIndex parse_index_key(const std::string& key, int n) {
  std::vector<int> elems;
  std::stringstream ss(key);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      elems.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument("trailing");
    } catch (const std::logic_error&) {
      throw InvalidInput("bad index key '" + key + "'");
    }
  }
  return PlueckerIndex(n, std::move(elems));
}

/// Parse a comma-separated list of integers ("1,2,3").
inline std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument("trailing");
    } catch (const std::logic_error&) {
      throw InvalidInput("bad integer list '" + text + "'");
    }
  }
  if (out.empty()) throw InvalidInput("empty integer list");
  return out;
}

// ---------------------------------------------------------------------------
// Exact linear algebra.

/// Sparse vector over the rationals with ordered coordinates.
template <class Key, class Compare = std::less<Key>>
using SparseVector = std::map<Key, Rational, Compare>;

template <class Key, class Compare>
void axpy(SparseVector<Key, Compare>& y, const Rational& alpha, const SparseVector<Key, Compare>& x) {
  for (const auto& [k, v] : x) {
    auto [it, inserted] = y.try_emplace(k, 0);
    it->second += alpha * v;
    if (sgn(it->second) == 0) y.erase(it);
  }
}

/// Incrementally maintained reduced row-echelon form. Pivot of a row is its
/// first coordinate under Compare; every pivot coordinate is zero in all
/// other rows, and pivots are normalized to 1.
template <class Key, class Compare = std::less<Key>>
class Echelon {
 public:
  using Vector = SparseVector<Key, Compare>;

  /// Reduce v modulo the current row span.
  Vector reduce(Vector v) const {
    std::vector<std::pair<Key, Rational>> hits;
    for (const auto& [k, c] : v)
      if (rows_.count(k)) hits.emplace_back(k, c);
    for (const auto& [k, c] : hits) axpy(v, Rational(-c), rows_.at(k));
    return v;
  }

  bool contains(const Vector& v) const { return reduce(v).empty(); }

  /// Add v to the span; returns false when v was already in it.
  bool insert(const Vector& v) {
    Vector r = reduce(v);
    if (r.empty()) return false;
    const Key pivot = r.begin()->first;
    const Rational inv = 1 / r.begin()->second;
    for (auto& [k, c] : r) c *= inv;
    for (auto& [pk, row] : rows_) {
      auto it = row.find(pivot);
      if (it != row.end()) {
        const Rational c = it->second;
        axpy(row, Rational(-c), r);
      }
    }
    rows_.emplace(pivot, std::move(r));
    return true;
  }

  std::size_t rank() const { return rows_.size(); }

  /// Rows keyed by pivot, ascending.
  const std::map<Key, Vector, Compare>& rows() const { return rows_; }

  friend bool operator==(const Echelon& a, const Echelon& b) { return a.rows_ == b.rows_; }

 private:
  std::map<Key, Vector, Compare> rows_;
};

}  // namespace pbwdegen
