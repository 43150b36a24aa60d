#pragma once

// Points s = (s_I) over all proper nonempty I of [1,n], the linear map h
// from weight triangles, the cone C = h(K) with its conditions [i]-[v], and
// Plücker-relation witnesses for points violating [iv] or [v].

#include "pbwdegen/core.hpp"
#include "pbwdegen/degrees.hpp"
#include "pbwdegen/ideals.hpp"
#include "pbwdegen/weights.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pbwdegen {

class TropicalPoint {
 public:
  TropicalPoint() = default;
  /// All 2^n - 2 coordinates zero.
  explicit TropicalPoint(int n) : n_(n) {
    if (n < 2) throw InvalidInput("tropical point needs n >= 2");
    for (auto& I : all_proper_indices(n)) s_.emplace(std::move(I), Rational(0));
  }

  int n() const { return n_; }
  const Rational& at(const PlueckerIndex& I) const {
    auto it = s_.find(I);
    if (it == s_.end()) throw InvalidInput("tropical point has no coordinate X_{" + I.key() + "}");
    return it->second;
  }
  const Rational& at(std::vector<int> elems) const { return at(PlueckerIndex(n_, std::move(elems))); }
  void set(const PlueckerIndex& I, Rational v) {
    auto it = s_.find(I);
    if (it == s_.end()) throw InvalidInput("tropical point has no coordinate X_{" + I.key() + "}");
    it->second = std::move(v);
  }
  const std::map<PlueckerIndex, Rational>& values() const { return s_; }

  /// Restriction to the sizes in d, as a grading of Plücker coordinates.
  GradingVector grading(const std::vector<int>& d) const {
    GradingVector g(n_, d);
    for (const auto& [I, v] : g.values()) g.set(I, at(I));
    return g;
  }

  friend bool operator==(const TropicalPoint&, const TropicalPoint&) = default;

 private:
  int n_ = 0;
  std::map<PlueckerIndex, Rational> s_;
};

/// The linear formula s_I = sum a_{p_t,q_t}, with no cone check.
inline TropicalPoint map_h_linear(const WeightSystem& A) {
  TropicalPoint s(A.n());
  for (const auto& [I, v] : s.values()) s.set(I, Rational(detail::degree_formula(A, I)));
  return s;
}

inline TropicalPoint map_h(const WeightSystem& A) {
  require_cone(A, "map_h");
  return map_h_linear(A);
}

/// Subtract s_{1..k} from every size-k coordinate.
inline TropicalPoint normalize(const TropicalPoint& s) {
  TropicalPoint out = s;
  for (const auto& [I, v] : s.values()) out.set(I, v - s.at(PlueckerIndex::initial(s.n(), I.size())));
  return out;
}

namespace detail {

/// (1, ..., m) followed by the listed extra entries, sorted.
inline std::vector<int> prefix_plus(int m, std::initializer_list<int> extra) {
  std::vector<int> e;
  for (int t = 1; t <= m; ++t) e.push_back(t);
  e.insert(e.end(), extra.begin(), extra.end());
  std::sort(e.begin(), e.end());
  return e;
}

/// (1, ..., i-1, i+1, ..., k, j).
inline std::vector<int> skip_index(int i, int k, int j) {
  std::vector<int> e;
  for (int t = 1; t <= k; ++t)
    if (t != i) e.push_back(t);
  e.push_back(j);
  return e;
}

}  // namespace detail

/// One equality family of condition [ii]: the index lists for fixed (i,j)
/// and k = i, ..., j-1; all coordinates must agree.
struct ConditionIIFamily {
  int i = 0;
  int j = 0;
  std::vector<std::vector<int>> indices;
};

inline std::vector<ConditionIIFamily> condition_ii_families(int n) {
  std::vector<ConditionIIFamily> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      ConditionIIFamily fam{i, j, {}};
      for (int k = i; k < j; ++k) fam.indices.push_back(detail::skip_index(i, k, j));
      out.push_back(std::move(fam));
    }
  return out;
}

struct ConeCResult {
  bool member = true;
  std::vector<std::string> violations;
};

namespace detail {

inline std::string list_key(const std::vector<int>& e) {
  std::string s;
  for (std::size_t t = 0; t < e.size(); ++t) s += (t ? "," : "") + std::to_string(e[t]);
  return s;
}

inline void check_linear_conditions(const TropicalPoint& s, ConeCResult& r) {
  const int n = s.n();
  auto fail = [&](std::string what) {
    r.member = false;
    r.violations.push_back(std::move(what));
  };
  for (int k = 1; k < n; ++k)
    if (sgn(s.at(PlueckerIndex::initial(n, k))) != 0) fail("[i] k=" + std::to_string(k));
  for (const auto& fam : condition_ii_families(n)) {
    const Rational& first = s.at(fam.indices.front());
    for (std::size_t t = 1; t < fam.indices.size(); ++t)
      if (s.at(fam.indices[t]) != first) {
        fail("[ii] i=" + std::to_string(fam.i) + " j=" + std::to_string(fam.j) + " {" + list_key(fam.indices.front()) +
             "} vs {" + list_key(fam.indices[t]) + "}");
      }
  }
  for (const auto& [I, v] : s.values()) {
    Rational sum = 0;
    for (const auto& [p, q] : complement_pairs(I)) sum += s.at(prefix_plus(p - 1, {q}));
    if (sum != v) fail("[iii] I={" + I.key() + "}");
  }
}

inline bool iv_fails(const TropicalPoint& s, int i) {
  return s.at(prefix_plus(i - 1, {i + 1})) + s.at(prefix_plus(i, {i + 2})) < s.at(prefix_plus(i - 1, {i + 2}));
}

inline bool v_fails(const TropicalPoint& s, int i, int j) {
  return s.at(prefix_plus(i - 1, {j})) + s.at(prefix_plus(i, {j + 1})) <
         s.at(prefix_plus(i - 1, {j + 1})) + s.at(prefix_plus(i, {j}));
}

}  // namespace detail

/// Conditions [i]-[v] on the normalized point.
inline ConeCResult cone_C_membership(const TropicalPoint& raw) {
  const TropicalPoint s = normalize(raw);
  const int n = s.n();
  ConeCResult r;
  detail::check_linear_conditions(s, r);
  for (int i = 1; i <= n - 2; ++i) {
    if (detail::iv_fails(s, i)) {
      r.member = false;
      r.violations.push_back("[iv] i=" + std::to_string(i));
    }
  }
  for (const auto& [i, j] : detail::b_positions(n)) {
    if (detail::v_fails(s, i, j)) {
      r.member = false;
      r.violations.push_back("[v] i=" + std::to_string(i) + " j=" + std::to_string(j));
    }
  }
  return r;
}

/// Per-multidegree outcome of the bounded monomial search.
struct MonomialSearch {
  Multidegree mu;
  std::optional<Monomial> monomial;
};

struct TropCheckResult {
  bool passed = true;  // no monomial found up to the bound
  std::vector<MonomialSearch> per_mu;
};

/// No monomial in in_s(I_d)_mu for any mu of total degree 1..degree_bound.
/// A necessary condition for tropical membership only.
inline TropCheckResult in_trop_necessary_check(const TropicalPoint& s, const std::vector<int>& d, int degree_bound) {
  if (degree_bound < 0) throw InvalidInput("degree bound must be >= 0");
  const PlueckerIdeal ideal(s.n(), d);
  const GradingVector g = s.grading(d);
  TropCheckResult r;
  for (const auto& mu : multidegrees_up_to(d.size(), degree_bound)) {
    int total = 0;
    for (int x : mu) total += x;
    if (total == 0) continue;
    MonomialSearch m{mu, contains_monomial(ideal.initial(mu, g))};
    if (m.monomial) r.passed = false;
    r.per_mu.push_back(std::move(m));
  }
  return r;
}

inline Polynomial witness_relation_iv(int n, int i) {
  auto X = [&](std::vector<int> e) { return PlueckerIndex(n, std::move(e)); };
  using detail::prefix_plus;
  Polynomial f;
  f[Monomial({X(prefix_plus(i, {i + 2})), X(prefix_plus(i - 1, {i + 1}))})] += 1;
  f[Monomial({X(prefix_plus(i, {i + 1})), X(prefix_plus(i - 1, {i + 2}))})] -= 1;
  f[Monomial({X(prefix_plus(i - 1, {i + 1, i + 2})), X(prefix_plus(i, {}))})] -= 1;
  return f;
}

inline Polynomial witness_relation_v(int n, int i, int j) {
  auto X = [&](std::vector<int> e) { return PlueckerIndex(n, std::move(e)); };
  using detail::prefix_plus;
  Polynomial f;
  f[Monomial({X(prefix_plus(i - 1, {i + 1, j})), X(prefix_plus(i, {j + 1}))})] += 1;
  f[Monomial({X(prefix_plus(i - 1, {i + 1, j + 1})), X(prefix_plus(i, {j}))})] -= 1;
  // + here: with the minus sign the polynomial is not in the ideal.
  f[Monomial({X(prefix_plus(i - 1, {j, j + 1})), X(prefix_plus(i, {i + 1}))})] += 1;
  return f;
}

/// For s satisfying [i]-[iii] after normalization: the Plücker relation
/// certifying the first failing [iv] or [v], if any.
inline std::optional<Polynomial> maximality_witness(const TropicalPoint& raw) {
  const TropicalPoint s = normalize(raw);
  ConeCResult linear;
  detail::check_linear_conditions(s, linear);
  if (!linear.member) throw PreconditionError("maximality_witness: point violates " + linear.violations.front());
  for (int i = 1; i <= s.n() - 2; ++i)
    if (detail::iv_fails(s, i)) return witness_relation_iv(s.n(), i);
  for (const auto& [i, j] : detail::b_positions(s.n()))
    if (detail::v_fails(s, i, j)) return witness_relation_v(s.n(), i, j);
  return std::nullopt;
}

}  // namespace pbwdegen
