#pragma once

// Degrees of Plücker coordinates: s^A_I = a_{p_1,q_1} + ... + a_{p_l,q_l},
// where p ascending is {1..k} \ I and q descending is I \ {1..k}.

#include "pbwdegen/core.hpp"
#include "pbwdegen/fflv.hpp"
#include "pbwdegen/weights.hpp"

#include <map>
#include <vector>

namespace pbwdegen {

inline std::vector<RootPair> complement_pairs(const PlueckerIndex& I) {
  const int k = I.size();
  std::vector<int> p, q;
  for (int x = 1; x <= k; ++x)
    if (!I.contains(x)) p.push_back(x);
  for (auto it = I.elems().rbegin(); it != I.elems().rend(); ++it)
    if (*it > k) q.push_back(*it);
  std::vector<RootPair> out;
  for (std::size_t t = 0; t < p.size(); ++t) out.push_back({p[t], q[t]});
  return out;
}

namespace detail {

/// The linear formula for s_I with no cone check.
inline Integer degree_formula(const WeightSystem& A, const PlueckerIndex& I) {
  Integer s = 0;
  for (const auto& [p, q] : complement_pairs(I)) s += A.at(p, q);
  return s;
}

}  // namespace detail

inline Integer degree_s(const WeightSystem& A, const PlueckerIndex& I) {
  require_cone(A, "degree_s");
  if (I.n() != A.n()) throw InvalidInput("degree_s: index and weight system have different n");
  return detail::degree_formula(A, I);
}

/// Sizes of the fundamental weights in play: increasing subset of [1, n-1].
inline void validate_d(int n, const std::vector<int>& d) {
  if (d.empty()) throw InvalidInput("d must be nonempty");
  for (std::size_t t = 0; t < d.size(); ++t) {
    if (d[t] < 1 || d[t] > n - 1) throw InvalidInput("d entries must lie in [1, n-1]");
    if (t > 0 && d[t - 1] >= d[t]) throw InvalidInput("d must be strictly increasing");
  }
}

/// The full flag d = (1, ..., n-1).
inline std::vector<int> full_flag(int n) {
  std::vector<int> d;
  for (int k = 1; k < n; ++k) d.push_back(k);
  return d;
}

/// A rational grade for every Plücker coordinate of the sizes in d.
class GradingVector {
 public:
  GradingVector() = default;
  GradingVector(int n, std::vector<int> d) : n_(n), d_(std::move(d)) {
    validate_d(n_, d_);
    for (int k : d_)
      for (auto& I : indices_of_size(n_, k)) s_.emplace(std::move(I), Rational(0));
  }

  int n() const { return n_; }
  const std::vector<int>& d() const { return d_; }

  const Rational& at(const PlueckerIndex& I) const {
    auto it = s_.find(I);
    if (it == s_.end()) throw InvalidInput("grading has no entry for X_{" + I.key() + "}");
    return it->second;
  }
  void set(const PlueckerIndex& I, Rational v) {
    auto it = s_.find(I);
    if (it == s_.end()) throw InvalidInput("grading has no entry for X_{" + I.key() + "}");
    it->second = std::move(v);
  }
  const std::map<PlueckerIndex, Rational>& values() const { return s_; }

  friend bool operator==(const GradingVector&, const GradingVector&) = default;

 private:
  int n_ = 0;
  std::vector<int> d_;
  std::map<PlueckerIndex, Rational> s_;
};

inline GradingVector grading_vector(const WeightSystem& A, const std::vector<int>& d) {
  require_cone(A, "grading_vector");
  GradingVector g(A.n(), d);
  for (const auto& [I, v] : g.values()) g.set(I, Rational(detail::degree_formula(A, I)));
  return g;
}

/// Ones at the complement pairs of I: the FFLV pattern of e_I in Pi_{omega_k}.
inline TrianglePattern fundamental_pattern(const PlueckerIndex& I) {
  TrianglePattern T(I.n());
  for (const auto& [p, q] : complement_pairs(I)) T.set(p, q, 1);
  return T;
}

}  // namespace pbwdegen
