#pragma once

// Plücker relations, multigraded components of the Plücker ideal over the
// rationals, and initial ideals with respect to a grading of the Plücker
// coordinates (lowest grade convention).
//
// Monomial order for echelon pivots: grade ascending (when a grading is in
// play), then lexicographic on the sorted list of factor indices, each index
// compared by size and then lexicographically.

#include "pbwdegen/core.hpp"
#include "pbwdegen/degrees.hpp"
#include "pbwdegen/weights.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace pbwdegen {

/// A monomial in Plücker coordinates, stored as the sorted multiset of its
/// factor indices.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<PlueckerIndex> factors) : f_(std::move(factors)) {
    std::sort(f_.begin(), f_.end());
  }

  const std::vector<PlueckerIndex>& factors() const { return f_; }
  std::size_t degree() const { return f_.size(); }

  /// Exponent of each distinct coordinate.
  std::map<PlueckerIndex, int> exponents() const {
    std::map<PlueckerIndex, int> e;
    for (const auto& I : f_) ++e[I];
    return e;
  }

  /// Per-size factor counts, one entry per element of d.
  std::vector<int> multidegree(const std::vector<int>& d) const {
    std::vector<int> mu(d.size(), 0);
    for (const auto& I : f_) {
      auto it = std::find(d.begin(), d.end(), I.size());
      if (it == d.end()) throw InvalidInput("monomial factor X_{" + I.key() + "} not of a size in d");
      ++mu[static_cast<std::size_t>(it - d.begin())];
    }
    return mu;
  }

  Monomial operator*(const Monomial& o) const {
    std::vector<PlueckerIndex> f = f_;
    f.insert(f.end(), o.f_.begin(), o.f_.end());
    return Monomial(std::move(f));
  }

  std::string to_string() const {
    if (f_.empty()) return "1";
    std::string s;
    for (std::size_t t = 0; t < f_.size(); ++t) {
      if (t) s += '*';
      s += "X_{" + f_[t].key() + "}";
    }
    return s;
  }

  auto operator<=>(const Monomial&) const = default;

 private:
  std::vector<PlueckerIndex> f_;
};

/// Sparse polynomial with exact rational coefficients.
using Polynomial = std::map<Monomial, Rational>;

inline std::string to_string(const Polynomial& f) {
  if (f.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : f) {
    const bool neg = sgn(c) < 0;
    const Rational mag = neg ? Rational(-c) : c;
    if (first) s += neg ? "-" : "";
    else s += neg ? " - " : " + ";
    if (mag != 1) s += mag.get_str() + "*";
    s += m.to_string();
    first = false;
  }
  return s;
}

inline Polynomial operator*(const Polynomial& f, const Monomial& m) {
  Polynomial out;
  for (const auto& [t, c] : f) out.emplace(t * m, c);
  return out;
}

/// Sort a tuple, tracking the sign of the sorting permutation; sign 0 on a
/// repeated entry.
struct NormalizedIndex {
  std::vector<int> elems;
  int sign = 0;
};

inline NormalizedIndex normalize_index(std::vector<int> seq) {
  int sign = 1;
  for (std::size_t a = 0; a < seq.size(); ++a)
    for (std::size_t b = a + 1; b < seq.size(); ++b) {
      if (seq[a] == seq[b]) return {{}, 0};
      if (seq[a] > seq[b]) sign = -sign;
    }
  std::sort(seq.begin(), seq.end());
  return {std::move(seq), sign};
}

// ---------------------------------------------------------------------------
// Grades.

inline Rational grad_of(const Monomial& m, const GradingVector& g) {
  Rational s = 0;
  for (const auto& I : m.factors()) s += g.at(I);
  return s;
}

/// Sum of the terms of f of minimal grade.
inline Polynomial initial_part(const Polynomial& f, const GradingVector& g) {
  if (f.empty()) throw InvalidInput("initial_part of the zero polynomial");
  std::optional<Rational> best;
  for (const auto& [m, c] : f) {
    Rational v = grad_of(m, g);
    if (!best || v < *best) best = v;
  }
  Polynomial out;
  for (const auto& [m, c] : f)
    if (grad_of(m, g) == *best) out.emplace(m, c);
  return out;
}

/// Scale so that the smallest monomial has coefficient 1.
inline Polynomial monic(Polynomial f) {
  if (f.empty()) return f;
  const Rational inv = 1 / f.begin()->second;
  for (auto& [m, c] : f) c *= inv;
  return f;
}

// ---------------------------------------------------------------------------
// Plücker relations.

namespace detail {

inline void k_subsets(const std::vector<int>& pool, int k, std::vector<std::vector<int>>& out) {
  std::vector<int> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t t = start; t < pool.size(); ++t) {
      cur.push_back(pool[t]);
      self(self, t + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
}

/// sign * X_{seq} as a (sorted index, sign) pair; nullopt when zero.
inline std::optional<std::pair<PlueckerIndex, int>> coordinate(int n, std::vector<int> seq) {
  NormalizedIndex ni = normalize_index(std::move(seq));
  if (ni.sign == 0) return std::nullopt;
  return std::make_pair(PlueckerIndex(n, std::move(ni.elems)), ni.sign);
}

/// X_i X_j - sum_r X_{i'} X_{r, j_{k+1..q}} for ordered tuples i, j.
inline Polynomial exchange_relation(int n, const std::vector<int>& i, const std::vector<int>& j, int k) {
  Polynomial f;
  auto add = [&](const std::vector<int>& u, const std::vector<int>& v, int sign) {
    auto x = coordinate(n, u);
    auto y = coordinate(n, v);
    if (!x || !y) return;
    Monomial m({x->first, y->first});
    auto [it, ins] = f.try_emplace(m, 0);
    it->second += sign * x->second * y->second;
    if (sgn(it->second) == 0) f.erase(it);
  };
  add(i, j, 1);
  std::vector<std::vector<int>> positions;
  std::vector<int> pos(i.size());
  std::iota(pos.begin(), pos.end(), 0);
  k_subsets(pos, k, positions);
  for (const auto& r : positions) {
    std::vector<int> iprime = i;
    std::vector<int> second;
    for (int m = 0; m < k; ++m) {
      iprime[static_cast<std::size_t>(r[static_cast<std::size_t>(m)])] = j[static_cast<std::size_t>(m)];
      second.push_back(i[static_cast<std::size_t>(r[static_cast<std::size_t>(m)])]);
    }
    for (std::size_t t = static_cast<std::size_t>(k); t < j.size(); ++t) second.push_back(j[t]);
    add(iprime, second, -1);
  }
  return f;
}

}  // namespace detail

/// Quadratic Plücker relations for R_d: for sizes p >= q in d, 1 <= k <= q,
/// every p-subset i and q-subset j of [1,n], and every choice of the k
/// entries of j to exchange. Identically zero relations are dropped and the
/// rest deduplicated up to scalar; output is monic and sorted.
inline std::vector<Polynomial> plucker_relations(int n, const std::vector<int>& d) {
  validate_d(n, d);
  std::set<Polynomial> seen;
  for (int p : d)
    for (int q : d) {
      if (p < q) continue;
      const auto I_list = indices_of_size(n, p);
      const auto J_list = indices_of_size(n, q);
      for (const auto& I : I_list)
        for (const auto& J : J_list)
          for (int k = 1; k <= q; ++k) {
            std::vector<std::vector<int>> exchanged;
            detail::k_subsets(J.elems(), k, exchanged);
            for (const auto& head : exchanged) {
              std::vector<int> j = head;
              for (int x : J.elems())
                if (std::find(head.begin(), head.end(), x) == head.end()) j.push_back(x);
              Polynomial f = detail::exchange_relation(n, I.elems(), j, k);
              if (!f.empty()) seen.insert(monic(std::move(f)));
            }
          }
    }
  return {seen.begin(), seen.end()};
}

// ---------------------------------------------------------------------------
// Graded components.

using Multidegree = std::vector<int>;

/// All monomials of R_d of multidegree mu, sorted.
inline std::vector<Monomial> monomials_of_degree(int n, const std::vector<int>& d, const Multidegree& mu) {
  validate_d(n, d);
  if (mu.size() != d.size()) throw InvalidInput("multidegree length must equal |d|");
  std::vector<std::vector<std::vector<PlueckerIndex>>> per_size;
  for (std::size_t t = 0; t < d.size(); ++t) {
    if (mu[t] < 0) throw InvalidInput("multidegree entries must be >= 0");
    const auto vars = indices_of_size(n, d[t]);
    std::vector<std::vector<PlueckerIndex>> multisets;
    std::vector<PlueckerIndex> cur;
    auto rec = [&](auto&& self, std::size_t start, int left) -> void {
      if (left == 0) {
        multisets.push_back(cur);
        return;
      }
      for (std::size_t v = start; v < vars.size(); ++v) {
        cur.push_back(vars[v]);
        self(self, v, left - 1);
        cur.pop_back();
      }
    };
    rec(rec, 0, mu[t]);
    per_size.push_back(std::move(multisets));
  }
  std::vector<Monomial> out;
  std::vector<PlueckerIndex> acc;
  auto combine = [&](auto&& self, std::size_t t) -> void {
    if (t == per_size.size()) {
      out.emplace_back(acc);
      return;
    }
    for (const auto& ms : per_size[t]) {
      const std::size_t before = acc.size();
      acc.insert(acc.end(), ms.begin(), ms.end());
      self(self, t + 1);
      acc.resize(before);
    }
  };
  combine(combine, 0);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::uint64_t component_dim(int n, const std::vector<int>& d, const Multidegree& mu) {
  std::uint64_t r = 1;
  for (std::size_t t = 0; t < d.size(); ++t) {
    const std::uint64_t vars = binomial(n, d[t]);
    r *= binomial(static_cast<int>(vars) + mu[t] - 1, mu[t]);
  }
  return r;
}

/// mu as the dominant weight sum_t mu_t omega_{d_t}.
inline DominantWeight multidegree_weight(int n, const std::vector<int>& d, const Multidegree& mu) {
  std::vector<int> a(static_cast<std::size_t>(n - 1), 0);
  for (std::size_t t = 0; t < d.size(); ++t) a[static_cast<std::size_t>(d[t] - 1)] += mu[t];
  return DominantWeight(n, a);
}

/// All multidegrees with total degree <= max_total, sorted by total degree
/// and then lexicographically.
inline std::vector<Multidegree> multidegrees_up_to(std::size_t parts, int max_total) {
  std::vector<Multidegree> out;
  for (int total = 0; total <= max_total; ++total) {
    Multidegree cur(parts, 0);
    auto rec = [&](auto&& self, std::size_t pos, int left) -> void {
      if (pos + 1 == parts) {
        cur[pos] = left;
        out.push_back(cur);
        return;
      }
      for (int v = left; v >= 0; --v) {
        cur[pos] = v;
        self(self, pos + 1, left - v);
      }
    };
    if (parts == 0) continue;
    rec(rec, 0, total);
  }
  return out;
}

/// Column key: grade first (constant when no grading), then the monomial.
struct GradedMonomial {
  Rational grade;
  Monomial monomial;
  auto operator<=>(const GradedMonomial& o) const {
    if (grade != o.grade) return grade < o.grade ? std::strong_ordering::less : std::strong_ordering::greater;
    return monomial <=> o.monomial;
  }
  bool operator==(const GradedMonomial& o) const { return grade == o.grade && monomial == o.monomial; }
};

/// A basis of a subspace of the component R_{d,mu}, in reduced row-echelon
/// form over the fixed monomial order.
struct ComponentBasis {
  int n = 0;
  std::vector<int> d;
  Multidegree mu;
  std::vector<Monomial> monomials;  // basis of R_{d,mu}
  std::vector<Polynomial> rows;     // reduced echelon rows, ascending pivots

  std::size_t rank() const { return rows.size(); }
  std::size_t ambient_dim() const { return monomials.size(); }
  std::size_t codim() const { return monomials.size() - rows.size(); }
};

namespace detail {

inline Echelon<Monomial> echelon_of(const std::vector<Polynomial>& polys) {
  Echelon<Monomial> e;
  for (const auto& f : polys) e.insert(f);
  return e;
}

inline ComponentBasis make_basis(int n, const std::vector<int>& d, const Multidegree& mu,
                                 const Echelon<Monomial>& e) {
  ComponentBasis cb{n, d, mu, monomials_of_degree(n, d, mu), {}};
  for (const auto& [pivot, row] : e.rows()) cb.rows.push_back(row);
  return cb;
}

/// Generator multiples g*m landing in multidegree mu.
template <class Sink>
void for_each_multiple(int n, const std::vector<int>& d, const std::vector<Polynomial>& gens,
                       const Multidegree& mu, Sink&& sink) {
  std::map<Multidegree, std::vector<Monomial>> cofactors;
  for (const auto& g : gens) {
    if (g.empty()) continue;
    const Multidegree nu = g.begin()->first.multidegree(d);
    Multidegree rest(mu.size());
    bool fits = true;
    for (std::size_t t = 0; t < mu.size(); ++t) {
      rest[t] = mu[t] - nu[t];
      if (rest[t] < 0) fits = false;
    }
    if (!fits) continue;
    auto it = cofactors.find(rest);
    if (it == cofactors.end()) it = cofactors.emplace(rest, monomials_of_degree(n, d, rest)).first;
    for (const auto& m : it->second) sink(g * m);
  }
}

}  // namespace detail

/// Row-reduced basis of the mu-component of the ideal generated by `gens`.
inline ComponentBasis component_basis(int n, const std::vector<int>& d, const std::vector<Polynomial>& gens,
                                      const Multidegree& mu) {
  check_dim(component_dim(n, d, mu), "component_basis");
  Echelon<Monomial> e;
  const std::size_t cap = component_dim(n, d, mu);
  detail::for_each_multiple(n, d, gens, mu, [&](const Polynomial& f) {
    if (e.rank() < cap) e.insert(f);
  });
  return detail::make_basis(n, d, mu, e);
}

/// Basis of in_g(V) for the span V of `rows`: echelonize with columns sorted
/// by grade ascending, so each reduced row's pivot is among its lowest-grade
/// terms and the initial parts keep distinct pivots.
inline std::vector<Polynomial> initial_space(const std::vector<Polynomial>& rows, const GradingVector& g) {
  Echelon<GradedMonomial> graded;
  for (const auto& f : rows) {
    SparseVector<GradedMonomial> v;
    for (const auto& [m, c] : f) v.emplace(GradedMonomial{grad_of(m, g), m}, c);
    graded.insert(v);
  }
  std::vector<Polynomial> initials;
  for (const auto& [pivot, row] : graded.rows()) {
    Polynomial in;
    for (const auto& [key, c] : row)
      if (key.grade == pivot.grade) in.emplace(key.monomial, c);
    initials.push_back(std::move(in));
  }
  return initials;
}

/// Row-reduced basis of in_g(I)_mu for the ideal I generated by `gens`.
inline ComponentBasis initial_component(int n, const std::vector<int>& d, const std::vector<Polynomial>& gens,
                                        const Multidegree& mu, const GradingVector& g) {
  const ComponentBasis full = component_basis(n, d, gens, mu);
  const auto initials = initial_space(full.rows, g);
  ComponentBasis cb = detail::make_basis(n, d, mu, detail::echelon_of(initials));
  if (cb.rank() != full.rank()) throw std::logic_error("initial_component: rank changed");
  return cb;
}

/// Some monomial lying in the row span, if any.
inline std::optional<Monomial> contains_monomial(const ComponentBasis& cb) {
  const Echelon<Monomial> e = detail::echelon_of(cb.rows);
  for (const auto& m : cb.monomials)
    if (e.contains(Polynomial{{m, Rational(1)}})) return m;
  return std::nullopt;
}

/// Binomials (two-term vectors) lying in the row span, found pairwise over
/// the monomial basis, made monic.
inline std::vector<Polynomial> binomials_in_span(const ComponentBasis& cb) {
  const Echelon<Monomial> e = detail::echelon_of(cb.rows);
  std::vector<Polynomial> residual;
  residual.reserve(cb.monomials.size());
  for (const auto& m : cb.monomials) residual.push_back(e.reduce(Polynomial{{m, Rational(1)}}));
  std::vector<Polynomial> out;
  for (std::size_t a = 0; a < residual.size(); ++a) {
    if (residual[a].empty()) continue;
    for (std::size_t b = a + 1; b < residual.size(); ++b) {
      if (residual[b].empty() || residual[a].size() != residual[b].size()) continue;
      // residual[a] == ratio * residual[b] ?
      const Rational ratio = residual[a].begin()->second / residual[b].begin()->second;
      bool proportional = true;
      auto ia = residual[a].begin();
      auto ib = residual[b].begin();
      for (; ia != residual[a].end(); ++ia, ++ib) {
        if (!(ia->first == ib->first) || ia->second != ratio * ib->second) {
          proportional = false;
          break;
        }
      }
      if (proportional) out.push_back(Polynomial{{cb.monomials[a], Rational(1)}, {cb.monomials[b], Rational(-ratio)}});
    }
  }
  return out;
}

/// True iff the row span has a basis of binomials.
inline bool spanned_by_binomials(const ComponentBasis& cb) {
  return detail::echelon_of(binomials_in_span(cb)).rank() == cb.rank();
}

inline bool same_span(const ComponentBasis& a, const ComponentBasis& b) {
  return detail::echelon_of(a.rows) == detail::echelon_of(b.rows);
}

// ---------------------------------------------------------------------------
// The Plücker ideal with memoized components.

/// I_d together with its generator list; caches the mu-components of I_d.
class PlueckerIdeal {
 public:
  PlueckerIdeal(int n, std::vector<int> d) : n_(n), d_(std::move(d)), gens_(plucker_relations(n_, d_)) {}

  int n() const { return n_; }
  const std::vector<int>& d() const { return d_; }
  const std::vector<Polynomial>& generators() const { return gens_; }

  ComponentBasis component(const Multidegree& mu) const {
    std::lock_guard<std::mutex> lock(mu_lock_);
    auto it = cache_.find(mu);
    if (it == cache_.end()) it = cache_.emplace(mu, component_basis(n_, d_, gens_, mu)).first;
    return it->second;
  }

  ComponentBasis initial(const Multidegree& mu, const GradingVector& g) const {
    const ComponentBasis full = component(mu);
    return detail::make_basis(n_, d_, mu, detail::echelon_of(initial_space(full.rows, g)));
  }

 private:
  int n_;
  std::vector<int> d_;
  std::vector<Polynomial> gens_;
  mutable std::mutex mu_lock_;
  mutable std::map<Multidegree, ComponentBasis> cache_;
};

/// dim of the mu-component of the ideal generated by the initial parts of
/// the Plücker relations equals dim in_{grad^A}(I)_mu.
inline bool quadratic_generation_check(const WeightSystem& A, const std::vector<int>& d, const Multidegree& mu) {
  const GradingVector g = grading_vector(A, d);
  const PlueckerIdeal ideal(A.n(), d);
  std::vector<Polynomial> initial_gens;
  for (const auto& f : ideal.generators()) initial_gens.push_back(initial_part(f, g));
  const ComponentBasis generated = component_basis(A.n(), d, initial_gens, mu);
  const ComponentBasis full = ideal.initial(mu, g);
  return generated.rank() == full.rank();
}

/// in_{grad^B}(I^A)_mu == I^B_mu, where I^A, I^B are the initial ideals of
/// I_d for the gradings of A and B. Requires the minimal face of B to
/// contain the minimal face of A.
inline bool face_degeneration_check(const WeightSystem& A, const WeightSystem& B, const std::vector<int>& d,
                                    const Multidegree& mu) {
  if (A.n() != B.n()) throw InvalidInput("face_degeneration_check: different n");
  if (!face_contains(face_signature(B), face_signature(A))) {
    throw PreconditionError("face_degeneration_check: face of B does not contain face of A");
  }
  const PlueckerIdeal ideal(A.n(), d);
  const GradingVector gA = grading_vector(A, d);
  const GradingVector gB = grading_vector(B, d);
  const ComponentBasis IA = ideal.initial(mu, gA);
  const ComponentBasis IB = ideal.initial(mu, gB);
  const ComponentBasis degenerated = detail::make_basis(A.n(), d, mu, detail::echelon_of(initial_space(IA.rows, gB)));
  return same_span(degenerated, IB);
}

}  // namespace pbwdegen
