#pragma once

// Weight systems A = (a_{i,j}), the cone K cut out by the inequalities
//   (a) a_{i,i+1} + a_{i+1,i+2} >= a_{i,i+2}             1 <= i <= n-2
//   (b) a_{i,j} + a_{i+1,j+1} >= a_{i,j+1} + a_{i+1,j}   1 <= i < j-1 <= n-2
// and the minimal face of K containing a point.

#include "pbwdegen/core.hpp"

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace pbwdegen {

class WeightSystem {
 public:
  WeightSystem() = default;

  /// All entries zero.
  explicit WeightSystem(int n) : n_(n), a_(pair_count(n)) {
    if (n < 2) throw InvalidInput("weight system needs n >= 2");
  }

  static WeightSystem constant(int n, long value) {
    WeightSystem w(n);
    for (auto& x : w.a_) x = value;
    return w;
  }

  /// a_{i,j} = (j-i+1)(n-j); lies in the interior of K.
  static WeightSystem toric(int n) {
    WeightSystem w(n);
    for (const auto& [i, j] : all_pairs(n)) w.set(i, j, Integer((j - i + 1) * (n - j)));
    return w;
  }

  int n() const { return n_; }

  const Integer& at(int i, int j) const { return a_[slot(i, j)]; }
  void set(int i, int j, Integer value) { a_[slot(i, j)] = std::move(value); }

  /// Entries in lexicographic pair order.
  const std::vector<Integer>& entries() const { return a_; }

  friend bool operator==(const WeightSystem&, const WeightSystem&) = default;

 private:
  std::size_t slot(int i, int j) const {
    if (!(1 <= i && i < j && j <= n_)) {
      throw InvalidInput("weight index (" + std::to_string(i) + "," + std::to_string(j) +
                         ") out of range");
    }
    return pair_slot(n_, i, j);
  }

  int n_ = 0;
  std::vector<Integer> a_;
};

/// Which defining inequalities of K are equalities at a point.
struct FaceSignature {
  int n = 0;
  std::set<int> tight_a;
  std::set<std::pair<int, int>> tight_b;

  friend bool operator==(const FaceSignature&, const FaceSignature&) = default;
};

namespace detail {

inline Integer slack_a(const WeightSystem& A, int i) {
  return A.at(i, i + 1) + A.at(i + 1, i + 2) - A.at(i, i + 2);
}

inline Integer slack_b(const WeightSystem& A, int i, int j) {
  return A.at(i, j) + A.at(i + 1, j + 1) - A.at(i, j + 1) - A.at(i + 1, j);
}

/// Index pairs (i,j) of inequality (b): 1 <= i < j-1 <= n-2.
inline std::vector<std::pair<int, int>> b_positions(int n) {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 2; j <= n - 1; ++j) out.emplace_back(i, j);
  return out;
}

}  // namespace detail

inline bool check_cone_membership(const WeightSystem& A) {
  const int n = A.n();
  for (int i = 1; i <= n - 2; ++i)
    if (sgn(detail::slack_a(A, i)) < 0) return false;
  for (const auto& [i, j] : detail::b_positions(n))
    if (sgn(detail::slack_b(A, i, j)) < 0) return false;
  return true;
}

inline void require_cone(const WeightSystem& A, const char* op) {
  if (!check_cone_membership(A)) {
    throw PreconditionError(std::string(op) + ": weight system is not in the cone K");
  }
}

/// (A) a_{i,j} + a_{j,k} >= a_{i,k} for i<j<k, and
/// (B) a_{i,j} + a_{k,l} >= a_{i,l} + a_{k,j} for i<k<j<l.
inline bool derived_inequalities_hold(const WeightSystem& A) {
  const int n = A.n();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        if (A.at(i, j) + A.at(j, k) < A.at(i, k)) return false;
  for (int i = 1; i <= n; ++i)
    for (int k = i + 1; k <= n; ++k)
      for (int j = k + 1; j <= n; ++j)
        for (int l = j + 1; l <= n; ++l)
          if (A.at(i, j) + A.at(k, l) < A.at(i, l) + A.at(k, j)) return false;
  return true;
}

inline FaceSignature face_signature(const WeightSystem& A) {
  require_cone(A, "face_signature");
  FaceSignature sig;
  sig.n = A.n();
  for (int i = 1; i <= A.n() - 2; ++i)
    if (sgn(detail::slack_a(A, i)) == 0) sig.tight_a.insert(i);
  for (const auto& [i, j] : detail::b_positions(A.n()))
    if (sgn(detail::slack_b(A, i, j)) == 0) sig.tight_b.emplace(i, j);
  return sig;
}

inline bool is_interior(const WeightSystem& A) {
  const FaceSignature sig = face_signature(A);
  return sig.tight_a.empty() && sig.tight_b.empty();
}

/// True iff the face encoded by `outer` contains the face encoded by
/// `inner`, i.e. every equality of `outer` is also an equality of `inner`.
inline bool face_contains(const FaceSignature& outer, const FaceSignature& inner) {
  if (outer.n != inner.n) throw PreconditionError("face_contains: signatures for different n");
  return std::includes(inner.tight_a.begin(), inner.tight_a.end(), outer.tight_a.begin(),
                       outer.tight_a.end()) &&
         std::includes(inner.tight_b.begin(), inner.tight_b.end(), outer.tight_b.begin(),
                       outer.tight_b.end());
}

struct LabeledWeightSystem {
  std::string label;
  WeightSystem weights;
};

/// Representative of the subface of {all (b) tight} on which exactly the
/// (a)-inequalities in `tight` are equalities. Points of that face have the
/// form a_{i,j} = x_i + y_j, and (a) at i reads x_{i+1} + y_{i+1} >= 0; we take
/// x = 0 and y_j = 0 for j-1 in `tight`, y_j = 1 otherwise.
inline WeightSystem pbw_locus_representative(int n, const std::set<int>& tight) {
  for (int i : tight)
    if (i < 1 || i > n - 2) throw InvalidInput("pbw-locus: (a)-index out of [1, n-2]");
  WeightSystem A(n);
  for (const auto& [i, j] : all_pairs(n)) A.set(i, j, tight.count(j - 1) ? 0 : 1);
  FaceSignature want;
  want.n = n;
  want.tight_a = tight;
  for (const auto& p : detail::b_positions(n)) want.tight_b.insert(p);
  if (!check_cone_membership(A) || face_signature(A) != want) {
    throw std::logic_error("pbw-locus representative misses its target face");
  }
  return A;
}

/// classical, abelian, toric, and one PBW-locus representative for each
/// subset of the (a)-inequalities (2^{n-2} of them).
inline std::vector<LabeledWeightSystem> canonical_weight_systems(int n) {
  if (n < 2) throw InvalidInput("canonical_weight_systems needs n >= 2");
  std::vector<LabeledWeightSystem> out;
  out.push_back({"classical", WeightSystem(n)});
  out.push_back({"abelian", WeightSystem::constant(n, 1)});
  out.push_back({"toric", WeightSystem::toric(n)});
  const int m = n - 2;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    std::set<int> tight;
    std::string label = "pbw-locus{";
    for (int i = 1; i <= m; ++i) {
      if (mask & (1u << (i - 1))) {
        if (!tight.empty()) label += ',';
        tight.insert(i);
        label += std::to_string(i);
      }
    }
    label += '}';
    out.push_back({label, pbw_locus_representative(n, tight)});
  }
  return out;
}

}  // namespace pbwdegen
