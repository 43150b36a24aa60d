#pragma once

// Classical and degenerate actions of the f_{i,j} on fundamental modules
// wedge^k C^n, their tensor products, cyclic submodules, and the exponential
// orbit coordinates used by the substitution map X_I -> z_{|I|} C_I.
//
// Operator convention: f_{i,j} e_i = e_j on C^n, extended to wedge powers.
// With it [f_{i,j}, f_{j,l}] = -f_{i,l} as operators.

#include "pbwdegen/core.hpp"
#include "pbwdegen/degrees.hpp"
#include "pbwdegen/fflv.hpp"
#include "pbwdegen/ideals.hpp"
#include "pbwdegen/weights.hpp"

#include <deque>
#include <map>
#include <optional>
#include <vector>

namespace pbwdegen {

struct SignedIndex {
  PlueckerIndex index;
  int sign = 1;
};

/// f_{i,j} e_I: zero when i is not in I or j is; otherwise I with i replaced
/// by j, with sign (-1)^{#{l in I : i < l < j}}.
inline std::optional<SignedIndex> classical_action(RootPair f, const PlueckerIndex& I) {
  const auto [i, j] = f;
  if (!(1 <= i && i < j && j <= I.n())) throw InvalidInput("f_{i,j} out of range");
  if (!I.contains(i) || I.contains(j)) return std::nullopt;
  int between = 0;
  std::vector<int> e;
  for (int x : I.elems()) {
    if (i < x && x < j) ++between;
    if (x != i) e.push_back(x);
  }
  e.insert(std::upper_bound(e.begin(), e.end(), j), j);
  return SignedIndex{PlueckerIndex(I.n(), std::move(e)), between % 2 ? -1 : 1};
}

/// The action on every fundamental module: classical, or the graded slice
/// for a weight system A (keep f_{i,j} e_I = +-e_{I'} iff s_I + a_{i,j} = s_{I'}).
class LieAction {
 public:
  /// Classical action for n.
  explicit LieAction(int n) : n_(n) {
    if (n < 2) throw InvalidInput("action needs n >= 2");
  }

  /// Degenerate action for A in the cone.
  explicit LieAction(const WeightSystem& A) : n_(A.n()), A_(A) {
    require_cone(A, "degenerate action");
    for (const auto& I : all_proper_indices(n_)) s_.emplace(I, detail::degree_formula(A, I));
  }

  int n() const { return n_; }
  bool degenerate() const { return A_.has_value(); }
  const std::optional<WeightSystem>& weights() const { return A_; }

  std::optional<SignedIndex> apply(RootPair f, const PlueckerIndex& I) const {
    auto r = classical_action(f, I);
    if (!r || !A_) return r;
    if (s_.at(I) + A_->at(f.i, f.j) != s_.at(r->index)) return std::nullopt;
    return r;
  }

  /// s_I of the basis vector e_I (0 in classical mode).
  Integer degree(const PlueckerIndex& I) const { return A_ ? s_.at(I) : Integer(0); }

 private:
  int n_;
  std::optional<WeightSystem> A_;
  std::map<PlueckerIndex, Integer> s_;
};

inline std::optional<SignedIndex> degenerate_action(const WeightSystem& A, RootPair f, const PlueckerIndex& I) {
  return LieAction(A).apply(f, I);
}

// ---------------------------------------------------------------------------
// The Lie algebra n_-^A.

/// Structure constants of n_-^A: for i <= k, [f_{i,j}, f_{k,l}] = f_{i,l} if
/// j = k and a_{i,j} + a_{k,l} = a_{i,l}, else 0; extended antisymmetrically.
inline SparseVector<RootPair> bracket(const WeightSystem& A, RootPair x, RootPair y) {
  SparseVector<RootPair> out;
  if (x.i <= y.i) {
    if (x.j == y.i && A.at(x.i, x.j) + A.at(y.i, y.j) == A.at(x.i, y.j)) out.emplace(RootPair{x.i, y.j}, 1);
  } else {
    for (auto& [k, c] : bracket(A, y, x)) out.emplace(k, -c);
  }
  return out;
}

namespace detail {

using ActionMatrix = std::map<std::pair<PlueckerIndex, PlueckerIndex>, Rational>;  // (row=out, col=in)

inline ActionMatrix action_matrix(const LieAction& act, RootPair f, int k) {
  ActionMatrix m;
  for (const auto& I : indices_of_size(act.n(), k))
    if (auto r = act.apply(f, I)) m[{r->index, I}] += r->sign;
  return m;
}

inline ActionMatrix mat_mul(const ActionMatrix& a, const ActionMatrix& b) {
  std::map<PlueckerIndex, std::vector<std::pair<PlueckerIndex, Rational>>> a_by_col;
  for (const auto& [rc, v] : a) a_by_col[rc.second].emplace_back(rc.first, v);
  ActionMatrix out;
  for (const auto& [rc, v] : b) {
    auto it = a_by_col.find(rc.first);
    if (it == a_by_col.end()) continue;
    for (const auto& [row, w] : it->second) {
      Rational& slot = out[{row, rc.second}];
      slot += w * v;
    }
  }
  for (auto it = out.begin(); it != out.end();) it = sgn(it->second) == 0 ? out.erase(it) : std::next(it);
  return out;
}

inline ActionMatrix mat_axpy(ActionMatrix y, const Rational& alpha, const ActionMatrix& x) {
  for (const auto& [rc, v] : x) {
    Rational& slot = y[rc];
    slot += alpha * v;
    if (sgn(slot) == 0) y.erase(rc);
  }
  return y;
}

}  // namespace detail

/// Antisymmetry and Jacobi for the bracket of n_-^A, and that the degenerate
/// action on every fundamental module satisfies
/// rho(x) rho(y) - rho(y) rho(x) = -rho([x,y]).
inline bool verify_lie_structure(const WeightSystem& A) {
  const LieAction act(A);
  const auto roots = all_pairs(A.n());
  auto br = [&](const SparseVector<RootPair>& u, const SparseVector<RootPair>& v) {
    SparseVector<RootPair> out;
    for (const auto& [x, cx] : u)
      for (const auto& [y, cy] : v) axpy(out, Rational(cx * cy), bracket(A, x, y));
    return out;
  };
  auto unit = [](RootPair r) { return SparseVector<RootPair>{{r, Rational(1)}}; };
  for (const auto& x : roots)
    for (const auto& y : roots) {
      SparseVector<RootPair> s = bracket(A, x, y);
      axpy(s, Rational(1), bracket(A, y, x));
      if (!s.empty()) return false;
      for (const auto& z : roots) {
        SparseVector<RootPair> jac = br(unit(x), br(unit(y), unit(z)));
        axpy(jac, Rational(1), br(unit(y), br(unit(z), unit(x))));
        axpy(jac, Rational(1), br(unit(z), br(unit(x), unit(y))));
        if (!jac.empty()) return false;
      }
    }
  for (int k = 1; k < A.n(); ++k) {
    std::map<RootPair, detail::ActionMatrix> rho;
    for (const auto& r : roots) rho.emplace(r, detail::action_matrix(act, r, k));
    for (const auto& x : roots)
      for (const auto& y : roots) {
        detail::ActionMatrix lhs = detail::mat_axpy(detail::mat_mul(rho[x], rho[y]), -1, detail::mat_mul(rho[y], rho[x]));
        for (const auto& [z, c] : bracket(A, x, y)) lhs = detail::mat_axpy(lhs, c, rho[z]);
        if (!lhs.empty()) return false;
      }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Tensor products U_lambda = (wedge^1)^{a_1} (x) ... (x) (wedge^{n-1})^{a_{n-1}}.

using TensorKey = std::vector<PlueckerIndex>;
using TensorState = SparseVector<TensorKey>;

inline std::size_t tensor_dim(const DominantWeight& lambda) {
  std::size_t d = 1;
  for (int k = 1; k < lambda.n(); ++k)
    for (int c = 0; c < lambda.coeff(k); ++c) {
      d *= binomial(lambda.n(), k);
      if (d > (std::size_t{1} << 40)) return d;
    }
  return d;
}

/// w_lambda = e_{1} (x) ... (x) e_{1..k} (x) ..., factors in ascending size.
inline TensorState highest_weight_vector(const DominantWeight& lambda) {
  TensorKey key;
  for (int k = 1; k < lambda.n(); ++k)
    for (int c = 0; c < lambda.coeff(k); ++c) key.push_back(PlueckerIndex::initial(lambda.n(), k));
  return TensorState{{key, Rational(1)}};
}

/// f acting on a tensor state by the Leibniz rule.
inline TensorState act(const LieAction& action, RootPair f, const TensorState& v) {
  TensorState out;
  for (const auto& [key, c] : v)
    for (std::size_t t = 0; t < key.size(); ++t)
      if (auto r = action.apply(f, key[t])) {
        TensorKey k2 = key;
        k2[t] = r->index;
        auto [it, ins] = out.try_emplace(std::move(k2), 0);
        it->second += r->sign * c;
        if (sgn(it->second) == 0) out.erase(it);
      }
  return out;
}

/// (prod f_{i,j}^{T_{i,j}}) v with factors in lexicographic (i,j) order: the
/// last factor acts first.
inline TensorState apply_monomial(const LieAction& action, const TrianglePattern& T, TensorState v) {
  const auto pairs = all_pairs(T.n());
  for (auto it = pairs.rbegin(); it != pairs.rend(); ++it)
    for (int e = 0; e < T.at(it->i, it->j) && !v.empty(); ++e) v = act(action, *it, v);
  return v;
}

/// dim of the span of w_lambda under all f^A_{i,j}.
inline std::size_t cyclic_module_dim(const LieAction& action, const DominantWeight& lambda) {
  if (lambda.n() != action.n()) throw InvalidInput("cyclic_module_dim: different n");
  check_dim(tensor_dim(lambda), "cyclic_module_dim");
  const auto roots = all_pairs(lambda.n());
  Echelon<TensorKey> span;
  std::deque<TensorState> queue;
  const TensorState w = highest_weight_vector(lambda);
  span.insert(w);
  queue.push_back(w);
  while (!queue.empty()) {
    const TensorState v = std::move(queue.front());
    queue.pop_front();
    for (const auto& f : roots) {
      TensorState u = act(action, f, v);
      if (!u.empty() && span.insert(u)) queue.push_back(std::move(u));
    }
  }
  return span.rank();
}

inline std::size_t cyclic_module_dim(const WeightSystem& A, const DominantWeight& lambda) {
  return cyclic_module_dim(LieAction(A), lambda);
}

/// {M_T w : T in Pi_lambda} is linearly independent and spans the cyclic module.
inline bool fflv_basis_check(const LieAction& action, const DominantWeight& lambda) {
  const auto patterns = enumerate_patterns(lambda);
  check_dim(tensor_dim(lambda), "fflv_basis_check");
  const TensorState w = highest_weight_vector(lambda);
  Echelon<TensorKey> span;
  for (const auto& T : patterns)
    if (!span.insert(apply_monomial(action, T, w))) return false;
  return span.rank() == cyclic_module_dim(action, lambda);
}

inline bool fflv_basis_check(const WeightSystem& A, const DominantWeight& lambda) {
  return fflv_basis_check(LieAction(A), lambda);
}

/// For interior A: M_S w = 0 exactly when S is outside Pi_lambda, over all S
/// with S_{i,j} <= (single-cell bound at (i,j)) + 1.
inline bool annihilator_monomial_check(const WeightSystem& A, const DominantWeight& lambda) {
  if (!is_interior(A)) throw PreconditionError("annihilator_monomial_check: A is not interior");
  if (A.n() != lambda.n()) throw InvalidInput("annihilator_monomial_check: different n");
  check_dim(tensor_dim(lambda), "annihilator_monomial_check");
  const LieAction action(A);
  const int n = A.n();
  const auto pairs = all_pairs(n);
  const TensorState w = highest_weight_vector(lambda);
  TrianglePattern S(n);
  bool ok = true;
  auto rec = [&](auto&& self, std::size_t s) -> void {
    if (!ok) return;
    if (s == pairs.size()) {
      const bool zero = apply_monomial(action, S, w).empty();
      if (zero == is_fflv_pattern(S, lambda)) ok = false;
      return;
    }
    const int top = cell_bound(lambda, pairs[s].i, pairs[s].j) + 1;
    for (int v = 0; v <= top; ++v) {
      S.set(pairs[s].i, pairs[s].j, v);
      self(self, s + 1);
    }
    S.set(pairs[s].i, pairs[s].j, 0);
  };
  rec(rec, 0);
  return ok;
}

// ---------------------------------------------------------------------------
// Polynomials in z_{i,j} (one slot per pair, lexicographic) followed by
// z_1..z_{n-1}.

using ZExponent = std::vector<int>;
using ZPoly = std::map<ZExponent, Rational>;

inline std::size_t z_slots(int n) { return pair_count(n) + static_cast<std::size_t>(n - 1); }

inline ZPoly z_one(int n) { return ZPoly{{ZExponent(z_slots(n), 0), Rational(1)}}; }

/// The variable z_{i,j}.
inline ZPoly z_pair(int n, int i, int j) {
  ZExponent e(z_slots(n), 0);
  e[pair_slot(n, i, j)] = 1;
  return ZPoly{{e, Rational(1)}};
}

/// The variable z_k attached to size-k coordinates.
inline ZPoly z_size(int n, int k) {
  ZExponent e(z_slots(n), 0);
  e[pair_count(n) + static_cast<std::size_t>(k - 1)] = 1;
  return ZPoly{{e, Rational(1)}};
}

inline void z_axpy(ZPoly& y, const Rational& alpha, const ZPoly& x) {
  for (const auto& [e, c] : x) {
    auto [it, ins] = y.try_emplace(e, 0);
    it->second += alpha * c;
    if (sgn(it->second) == 0) y.erase(it);
  }
}

inline ZPoly z_mul(const ZPoly& a, const ZPoly& b) {
  ZPoly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      ZExponent e = ea;
      for (std::size_t t = 0; t < e.size(); ++t) e[t] += eb[t];
      auto [it, ins] = out.try_emplace(std::move(e), 0);
      it->second += ca * cb;
      if (sgn(it->second) == 0) out.erase(it);
    }
  return out;
}

/// Terms of minimal grade under grad z_{i,j} = a_{i,j} (z_k has grade 0).
inline ZPoly z_initial_part(const ZPoly& p, const WeightSystem& A) {
  const auto pairs = all_pairs(A.n());
  auto grade = [&](const ZExponent& e) {
    Integer g = 0;
    for (std::size_t s = 0; s < pairs.size(); ++s) g += A.at(pairs[s].i, pairs[s].j) * e[s];
    return g;
  };
  std::optional<Integer> best;
  for (const auto& [e, c] : p) {
    Integer g = grade(e);
    if (!best || g < *best) best = g;
  }
  ZPoly out;
  for (const auto& [e, c] : p)
    if (grade(e) == *best) out.emplace(e, c);
  return out;
}

/// Coordinates C_I of exp(sum z_{i,j} f_{i,j}) e_{1..k}.
inline std::map<PlueckerIndex, ZPoly> exp_coordinates(const LieAction& action, int k) {
  const int n = action.n();
  if (k < 1 || k >= n) throw InvalidInput("exp_coordinates: k out of [1, n-1]");
  const auto roots = all_pairs(n);
  std::map<PlueckerIndex, ZPoly> v{{PlueckerIndex::initial(n, k), z_one(n)}};
  std::map<PlueckerIndex, ZPoly> total = v;
  for (int order = 1; !v.empty(); ++order) {
    std::map<PlueckerIndex, ZPoly> next;
    const Rational scale(1, order);
    for (const auto& [I, p] : v)
      for (const auto& f : roots)
        if (auto r = action.apply(f, I)) {
          ZPoly& slot = next[r->index];
          z_axpy(slot, Rational(scale * r->sign), z_mul(z_pair(n, f.i, f.j), p));
        }
    for (auto it = next.begin(); it != next.end();) it = it->second.empty() ? next.erase(it) : std::next(it);
    for (const auto& [I, p] : next) z_axpy(total[I], Rational(1), p);
    v = std::move(next);
  }
  for (auto it = total.begin(); it != total.end();) it = it->second.empty() ? total.erase(it) : std::next(it);
  return total;
}

/// The substitution X_I -> z_{|I|} C_I, with coordinates computed once per
/// size and reused.
class PsiSubstitution {
 public:
  explicit PsiSubstitution(LieAction action) : action_(std::move(action)) {}

  const LieAction& action() const { return action_; }

  ZPoly image(const Polynomial& f) {
    const int n = action_.n();
    ZPoly sum;
    for (const auto& [m, c] : f) {
      ZPoly term = z_one(n);
      for (const auto& I : m.factors()) {
        if (I.n() != n) throw InvalidInput("psi substitution: index for a different n");
        const auto& coords = coordinates(I.size());
        auto ci = coords.find(I);
        if (ci == coords.end()) {
          term.clear();
          break;
        }
        term = z_mul(term, z_mul(z_size(n, I.size()), ci->second));
      }
      z_axpy(sum, c, term);
    }
    return sum;
  }

  bool vanishes(const Polynomial& f) { return image(f).empty(); }

  const std::map<PlueckerIndex, ZPoly>& coordinates(int k) {
    auto it = coords_.find(k);
    if (it == coords_.end()) it = coords_.emplace(k, exp_coordinates(action_, k)).first;
    return it->second;
  }

 private:
  LieAction action_;
  std::map<int, std::map<PlueckerIndex, ZPoly>> coords_;
};

/// f(z_{|I|} C_I) == 0.
inline bool psi_substitution_check(const Polynomial& f, const LieAction& action) {
  return PsiSubstitution(action).vanishes(f);
}

}  // namespace pbwdegen
