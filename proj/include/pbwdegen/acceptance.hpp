#pragma once

// The acceptance battery: thirteen exact property checks at desk scale.
// Shared by the acceptance test binary and `pbwdegen suite`.

#include "pbwdegen/core.hpp"
#include "pbwdegen/degrees.hpp"
#include "pbwdegen/fflv.hpp"
#include "pbwdegen/ideals.hpp"
#include "pbwdegen/parallel.hpp"
#include "pbwdegen/representations.hpp"
#include "pbwdegen/tableaux.hpp"
#include "pbwdegen/tropical.hpp"
#include "pbwdegen/weights.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace pbwdegen::acceptance {

struct Config {
  int max_n = 6;        // no check runs above this n
  unsigned jobs = 1;    // threads for independent sub-checks
  std::uint64_t seed = 20161013;
};

struct Result {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

/// Integer triangle with entries uniform in [lo, hi].
inline WeightSystem random_triangle(int n, std::mt19937_64& rng, int lo = -3, int hi = 3) {
  std::uniform_int_distribution<int> dist(lo, hi);
  WeightSystem A(n);
  for (const auto& [i, j] : all_pairs(n)) A.set(i, j, dist(rng));
  return A;
}

/// `count` random triangles with entries in [-3,3] lying in the cone, by
/// rejection. Candidates are screened in machine integers; the survivors are
/// re-checked exactly.
inline std::vector<WeightSystem> random_cone_points(int n, std::size_t count, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(-3, 3);
  const auto pairs = all_pairs(n);
  std::vector<int> a(pairs.size());
  auto at = [&](int i, int j) { return a[pair_slot(n, i, j)]; };
  std::vector<WeightSystem> out;
  while (out.size() < count) {
    for (auto& x : a) x = dist(rng);
    bool in = true;
    for (int i = 1; in && i <= n - 2; ++i) in = at(i, i + 1) + at(i + 1, i + 2) >= at(i, i + 2);
    for (int i = 1; in && i <= n; ++i)
      for (int j = i + 2; in && j <= n - 1; ++j) in = at(i, j) + at(i + 1, j + 1) >= at(i, j + 1) + at(i + 1, j);
    if (!in) continue;
    WeightSystem A(n);
    for (std::size_t s = 0; s < pairs.size(); ++s) A.set(pairs[s].i, pairs[s].j, a[s]);
    if (!check_cone_membership(A)) throw std::logic_error("random_cone_points: screening disagrees with the exact check");
    out.push_back(std::move(A));
  }
  return out;
}

namespace detail {

class Tally {
 public:
  void check(bool ok, const std::string& what) {
    ++total_;
    if (!ok) {
      ++failed_;
      if (first_.empty()) first_ = what;
    }
  }
  bool ok() const { return failed_ == 0 && total_ > 0; }
  std::string summary() const {
    std::ostringstream os;
    os << (total_ - failed_) << "/" << total_ << " checks";
    if (failed_) os << "; first failure: " << first_;
    return os.str();
  }
  std::size_t total() const { return total_; }

 private:
  std::size_t total_ = 0, failed_ = 0;
  std::string first_;
};

inline std::string mu_key(const Multidegree& mu) {
  std::string s;
  for (std::size_t t = 0; t < mu.size(); ++t) s += (t ? "," : "") + std::to_string(mu[t]);
  return s;
}

inline std::string d_key(const std::vector<int>& d) { return mu_key(d); }

inline std::vector<Multidegree> nonzero_multidegrees(std::size_t parts, int lo, int hi) {
  std::vector<Multidegree> out;
  for (auto& mu : multidegrees_up_to(parts, hi)) {
    int total = 0;
    for (int x : mu) total += x;
    if (total >= lo) out.push_back(std::move(mu));
  }
  return out;
}

/// Run `fn` over `count` items with `jobs` threads; collect (ok, label).
inline void fan_out(Tally& tally, std::size_t count, unsigned jobs,
                    const std::function<std::pair<bool, std::string>(std::size_t)>& fn) {
  for (const auto& [ok, what] : parallel_map<std::pair<bool, std::string>>(count, jobs, fn)) tally.check(ok, what);
}

}  // namespace detail

// 1 ------------------------------------------------------------------------
inline Result cone_soundness(const Config& cfg) {
  std::mt19937_64 rng(cfg.seed);
  detail::Tally t;
  const int top = std::min(6, cfg.max_n);
  const auto t0 = std::chrono::steady_clock::now();
  for (int n = 2; n <= top; ++n) {
    const std::size_t per_n = 200 / static_cast<std::size_t>(top - 1) + (n == 2 ? 200 % static_cast<std::size_t>(top - 1) : 0);
    for (const auto& A : random_cone_points(n, per_n, rng)) t.check(derived_inequalities_hold(A), "n=" + std::to_string(n));
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  t.check(secs < 1.0, "time limit 1 s");
  return {1, "cone soundness", t.ok(), t.summary() + " over random cone points, n<=" + std::to_string(top), 0};
}

// 2 ------------------------------------------------------------------------
inline Result dimension_agreement(const Config& cfg) {
  detail::Tally t;
  const int top = std::min(5, cfg.max_n);
  const auto t0 = std::chrono::steady_clock::now();
  for (int n = 2; n <= top; ++n) {
    const auto weights = dominant_weights_up_to(n, 3);
    detail::fan_out(t, weights.size(), cfg.jobs, [&](std::size_t w) {
      const DominantWeight& lambda = weights[w];
      const std::uint64_t dim = weyl_dim(lambda);
      const bool ok = enumerate_patterns(lambda).size() == dim && enumerate_ssyt(lambda).size() == dim;
      return std::make_pair(ok, "n=" + std::to_string(n) + " lambda=" + detail::mu_key(lambda.coeffs()));
    });
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  t.check(secs < 30.0, "time limit 30 s");
  return {2, "combinatorial dimension agreement", t.ok(), t.summary(), 0};
}

// 3 ------------------------------------------------------------------------
inline Result bijection_round_trip(const Config& cfg) {
  detail::Tally t;
  for (int n = 2; n <= std::min(4, cfg.max_n); ++n)
    for (const auto& lambda : dominant_weights_up_to(n, 2)) {
      const std::string tag = "n=" + std::to_string(n) + " lambda=" + detail::mu_key(lambda.coeffs());
      for (const auto& T : enumerate_patterns(lambda)) {
        const PBWTableau Y = zeta(T, lambda);
        t.check(is_pbw_ssyt(Y) && tau(Y) == T, "tau(zeta(T)) " + tag);
      }
      for (const auto& Y : enumerate_ssyt(lambda)) t.check(zeta(tau(Y), lambda) == Y, "zeta(tau(Y)) " + tag);
    }
  return {3, "bijection round-trip", t.ok(), t.summary(), 0};
}

// 4 ------------------------------------------------------------------------
inline Result minkowski_property(const Config& cfg) {
  detail::Tally t;
  for (int n = 2; n <= std::min(4, cfg.max_n); ++n)
    for (int k = 1; k < n; ++k)
      for (int l = k; l < n; ++l)
        t.check(minkowski_check(DominantWeight::fundamental(n, k), DominantWeight::fundamental(n, l)),
                "n=" + std::to_string(n) + " omega_" + std::to_string(k) + "+omega_" + std::to_string(l));
  return {4, "Minkowski property", t.ok(), t.summary(), 0};
}

// Shared by 5 and 6: (n, d) families in scope.
inline std::vector<std::pair<int, std::vector<int>>> ideal_families(const Config& cfg) {
  std::vector<std::pair<int, std::vector<int>>> out;
  if (cfg.max_n >= 3) out.emplace_back(3, full_flag(3));
  if (cfg.max_n >= 4) out.emplace_back(4, std::vector<int>{2});
  return out;
}

// 5 ------------------------------------------------------------------------
inline Result initial_ideal_dimension(const Config& cfg) {
  detail::Tally t;
  const auto t0 = std::chrono::steady_clock::now();
  for (const auto& [n, d] : ideal_families(cfg)) {
    const PlueckerIdeal ideal(n, d);
    const auto systems = canonical_weight_systems(n);
    const auto mus = detail::nonzero_multidegrees(d.size(), 1, 3);
    for (const auto& mu : mus) ideal.component(mu);  // fill the cache serially
    std::vector<std::pair<std::size_t, std::size_t>> jobs;
    for (std::size_t a = 0; a < systems.size(); ++a)
      for (std::size_t m = 0; m < mus.size(); ++m) jobs.emplace_back(a, m);
    detail::fan_out(t, jobs.size(), cfg.jobs, [&](std::size_t q) {
      const auto& [a, m] = jobs[q];
      const GradingVector g = grading_vector(systems[a].weights, d);
      const ComponentBasis in = ideal.initial(mus[m], g);
      const bool ok = in.codim() == weyl_dim(multidegree_weight(n, d, mus[m]));
      return std::make_pair(ok, systems[a].label + " n=" + std::to_string(n) + " mu=" + detail::mu_key(mus[m]));
    });
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  t.check(secs < 300.0, "time limit 5 min");
  return {5, "initial-ideal dimension", t.ok(), t.summary(), 0};
}

// 6 ------------------------------------------------------------------------
inline Result classical_recovery(const Config& cfg) {
  detail::Tally t;
  for (const auto& [n, d] : ideal_families(cfg)) {
    const PlueckerIdeal ideal(n, d);
    const GradingVector g = grading_vector(WeightSystem(n), d);
    for (const auto& mu : detail::nonzero_multidegrees(d.size(), 1, 3)) {
      const ComponentBasis full = ideal.component(mu);
      const ComponentBasis in = initial_component(n, d, ideal.generators(), mu, g);
      t.check(full.rows == in.rows, "n=" + std::to_string(n) + " mu=" + detail::mu_key(mu));
    }
  }
  return {6, "classical recovery", t.ok(), t.summary(), 0};
}

// 7 ------------------------------------------------------------------------
inline Result quadratic_generation(const Config& cfg) {
  detail::Tally t;
  if (cfg.max_n >= 3) {
    const auto d = full_flag(3);
    const auto systems = canonical_weight_systems(3);
    for (const auto& sys : systems)
      for (const auto& mu : detail::nonzero_multidegrees(d.size(), 3, 3))
        t.check(quadratic_generation_check(sys.weights, d, mu), sys.label + " mu=" + detail::mu_key(mu));
  }
  return {7, "quadratic generation", t.ok(), t.summary(), 0};
}

// 8 ------------------------------------------------------------------------
inline Result face_degeneration(const Config& cfg) {
  detail::Tally t;
  if (cfg.max_n >= 3) {
    const int n = 3;
    const auto d = full_flag(n);
    const WeightSystem zero(n), abelian = WeightSystem::constant(n, 1), toric = WeightSystem::toric(n);
    const std::vector<std::tuple<std::string, WeightSystem, WeightSystem>> pairs{
        {"(zero,abelian)", zero, abelian}, {"(abelian,toric)", abelian, toric}, {"(zero,toric)", zero, toric}};
    for (const auto& [label, A, B] : pairs)
      for (const auto& mu : detail::nonzero_multidegrees(d.size(), 1, 2))
        t.check(face_degeneration_check(A, B, d, mu), label + " mu=" + detail::mu_key(mu));
  }
  return {8, "face degeneration", t.ok(), t.summary(), 0};
}

// 9 ------------------------------------------------------------------------
inline Result toric_detection(const Config& cfg) {
  detail::Tally t;
  for (int n = 2; n <= std::min(4, cfg.max_n); ++n) {
    const WeightSystem A = WeightSystem::toric(n);
    const LieAction action(A);
    const auto pairs = all_pairs(n);
    for (int k = 1; k < n; ++k) {
      const auto coords = exp_coordinates(action, k);
      for (const auto& I : indices_of_size(n, k)) {
        const std::string tag = "n=" + std::to_string(n) + " C_{" + I.key() + "}";
        auto it = coords.find(I);
        if (it == coords.end() || it->second.size() != 1) {
          t.check(false, tag + " is not a single monomial");
          continue;
        }
        const ZExponent& e = it->second.begin()->first;
        const TrianglePattern T = fundamental_pattern(I);
        bool same = true;
        for (std::size_t s = 0; s < e.size(); ++s) {
          const int want = s < pairs.size() ? T.at(pairs[s].i, pairs[s].j) : 0;
          if (e[s] != want) same = false;
        }
        t.check(same, tag + " exponent differs from its pattern");
      }
    }
    if (n >= 3) {
      const auto d = full_flag(n);
      const PlueckerIdeal ideal(n, d);
      const GradingVector g = grading_vector(A, d);
      for (const auto& mu : detail::nonzero_multidegrees(d.size(), 2, 2))
        t.check(spanned_by_binomials(ideal.initial(mu, g)), "n=" + std::to_string(n) + " binomial span mu=" + detail::mu_key(mu));
    }
  }
  return {9, "toric detection", t.ok(), t.summary(), 0};
}

// 10 -----------------------------------------------------------------------
inline Result representation_dimensions(const Config& cfg) {
  detail::Tally t;
  for (int n = 2; n <= std::min(4, cfg.max_n); ++n) {
    const auto systems = canonical_weight_systems(n);
    const auto weights = dominant_weights_up_to(n, 2);
    std::vector<std::pair<std::size_t, std::size_t>> jobs;
    for (std::size_t a = 0; a < systems.size(); ++a)
      for (std::size_t w = 0; w < weights.size(); ++w) jobs.emplace_back(a, w);
    detail::fan_out(t, jobs.size(), cfg.jobs, [&](std::size_t q) {
      const auto& [a, w] = jobs[q];
      const LieAction action(systems[a].weights);
      const std::size_t patterns = enumerate_patterns(weights[w]).size();
      const bool ok = cyclic_module_dim(action, weights[w]) == patterns && fflv_basis_check(action, weights[w]);
      return std::make_pair(ok, systems[a].label + " n=" + std::to_string(n) + " lambda=" + detail::mu_key(weights[w].coeffs()));
    });
  }
  return {10, "representation dimensions", t.ok(), t.summary(), 0};
}

// 11 -----------------------------------------------------------------------
inline Result monomial_annihilator(const Config& cfg) {
  detail::Tally t;
  if (cfg.max_n >= 3) {
    const WeightSystem A = WeightSystem::toric(3);
    for (const auto& lambda : {DominantWeight(3, {1, 0}), DominantWeight(3, {0, 1}), DominantWeight(3, {1, 1})})
      t.check(annihilator_monomial_check(A, lambda), "lambda=" + detail::mu_key(lambda.coeffs()));
  }
  return {11, "monomial annihilator", t.ok(), t.summary(), 0};
}

// 12 -----------------------------------------------------------------------
inline Result tropical_cone(const Config& cfg) {
  detail::Tally t;
  std::mt19937_64 rng(cfg.seed + 12);
  for (int n = 2; n <= std::min(5, cfg.max_n); ++n) {
    std::vector<WeightSystem> members;
    for (const auto& sys : canonical_weight_systems(n)) members.push_back(sys.weights);
    const auto randoms = random_cone_points(n, 50, rng);
    members.insert(members.end(), randoms.begin(), randoms.end());
    for (std::size_t m = 0; m < members.size(); ++m)
      t.check(cone_C_membership(map_h(members[m])).member, "h(A) in C, n=" + std::to_string(n) + " point " + std::to_string(m));

    if (n <= 4) {
      const auto d = full_flag(n);
      detail::fan_out(t, members.size(), cfg.jobs, [&](std::size_t m) {
        return std::make_pair(in_trop_necessary_check(map_h(members[m]), d, 3).passed,
                              "monomial in initial ideal, n=" + std::to_string(n) + " point " + std::to_string(m));
      });
    }

    if (n >= 3) {
      // Violators: h of triangles outside the cone.
      std::vector<WeightSystem> outside;
      for (int i = 1; i <= n - 2; ++i) {
        WeightSystem A(n);
        A.set(i, i + 2, 1);
        outside.push_back(A);
      }
      for (const auto& [i, j] : ::pbwdegen::detail::b_positions(n)) {
        WeightSystem A(n);
        A.set(i, j + 1, 1);
        A.set(i + 1, j, 1);
        outside.push_back(A);
      }
      while (outside.size() < 40) {
        WeightSystem A = random_triangle(n, rng);
        if (!check_cone_membership(A)) outside.push_back(std::move(A));
      }
      for (std::size_t o = 0; o < outside.size(); ++o) {
        const TropicalPoint s = map_h_linear(outside[o]);
        const std::string tag = "witness n=" + std::to_string(n) + " point " + std::to_string(o);
        const auto w = maximality_witness(s);
        if (!w) {
          t.check(false, tag + " missing");
          continue;
        }
        t.check(initial_part(*w, s.grading(full_flag(n))).size() == 1, tag + " initial part is not a monomial");
      }
    }
  }
  for (int n = 2; n <= std::min(6, cfg.max_n); ++n) {
    Echelon<PlueckerIndex> span;
    for (const auto& [i, j] : all_pairs(n)) {
      WeightSystem E(n);
      E.set(i, j, 1);
      SparseVector<PlueckerIndex> v;
      const TropicalPoint image = map_h_linear(E);
      for (const auto& [I, x] : image.values())
        if (sgn(x) != 0) v.emplace(I, x);
      span.insert(v);
    }
    t.check(span.rank() == pair_count(n), "rank of h, n=" + std::to_string(n));
  }
  return {12, "tropical cone", t.ok(), t.summary(), 0};
}

// 13 -----------------------------------------------------------------------
inline Result psi_consistency(const Config& cfg) {
  detail::Tally t;
  for (int n = 2; n <= std::min(4, cfg.max_n); ++n) {
    PsiSubstitution psi{LieAction(n)};
    for (const auto& f : plucker_relations(n, full_flag(n)))
      t.check(psi.vanishes(f), "classical n=" + std::to_string(n) + " " + to_string(f));
  }
  if (cfg.max_n >= 3) {
    const int n = 3;
    const auto d = full_flag(n);
    const PlueckerIdeal ideal(n, d);
    for (const auto& sys : canonical_weight_systems(n)) {
      PsiSubstitution psi{LieAction(sys.weights)};
      const GradingVector g = grading_vector(sys.weights, d);
      for (const auto& mu : detail::nonzero_multidegrees(d.size(), 2, 2))
        for (const auto& row : ideal.initial(mu, g).rows)
          t.check(psi.vanishes(row), sys.label + " " + to_string(row));
    }
  }
  return {13, "psi-substitution consistency", t.ok(), t.summary(), 0};
}

inline std::vector<std::function<Result(const Config&)>> battery() {
  return {cone_soundness,       dimension_agreement, bijection_round_trip,     minkowski_property,
          initial_ideal_dimension, classical_recovery, quadratic_generation, face_degeneration,
          toric_detection,      representation_dimensions, monomial_annihilator, tropical_cone,
          psi_consistency};
}

/// Run every criterion, timing each; exceptions count as failures.
inline std::vector<Result> run_all(const Config& cfg, const std::function<void(const Result&)>& on_result = {}) {
  std::vector<Result> out;
  int id = 0;
  for (const auto& crit : battery()) {
    ++id;
    const auto t0 = std::chrono::steady_clock::now();
    Result r;
    try {
      r = crit(cfg);
    } catch (const std::exception& e) {
      r = {id, "criterion " + std::to_string(id), false, std::string("exception: ") + e.what(), 0};
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (on_result) on_result(r);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace pbwdegen::acceptance
