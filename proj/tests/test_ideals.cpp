#include "support.hpp"

using namespace pbwdegen;
using pbwdegen::testing::idx;
using pbwdegen::testing::mono;

namespace {

Polynomial fl3_relation() {
  Polynomial f;
  f[mono(3, {{1}, {2, 3}})] = 1;
  f[mono(3, {{2}, {1, 3}})] = -1;
  f[mono(3, {{3}, {1, 2}})] = 1;
  return f;
}

// Dense kernel of the map x -> sum_t x_t v_t restricted to `cols`.
std::vector<std::vector<Rational>> left_kernel(const std::vector<Polynomial>& vs, const std::set<Monomial>& cols) {
  const std::size_t m = vs.size();
  std::vector<std::vector<Rational>> rows(m);  // row t: [coords on cols | e_t]
  const std::vector<Monomial> order(cols.begin(), cols.end());
  for (std::size_t t = 0; t < m; ++t) {
    for (const auto& c : order) {
      auto it = vs[t].find(c);
      rows[t].push_back(it == vs[t].end() ? Rational(0) : it->second);
    }
    for (std::size_t u = 0; u < m; ++u) rows[t].push_back(u == t ? 1 : 0);
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < order.size() && r < m; ++c) {
    std::size_t p = r;
    while (p < m && sgn(rows[p][c]) == 0) ++p;
    if (p == m) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t t = 0; t < m; ++t) {
      if (t == r || sgn(rows[t][c]) == 0) continue;
      const Rational f = rows[t][c] / rows[r][c];
      for (std::size_t k = 0; k < rows[t].size(); ++k) rows[t][k] -= f * rows[r][k];
    }
    ++r;
  }
  std::vector<std::vector<Rational>> kernel;
  for (std::size_t t = r; t < m; ++t) kernel.emplace_back(rows[t].begin() + static_cast<long>(order.size()), rows[t].end());
  return kernel;
}

// Oracle for in_g(V): for each grade c, take the elements of V with no terms
// of grade below c, and keep their grade-c parts.
std::vector<Polynomial> filtration_initial_space(const std::vector<Polynomial>& basis, const GradingVector& g) {
  std::set<Rational> grades;
  for (const auto& f : basis)
    for (const auto& [m, c] : f) grades.insert(grad_of(m, g));
  std::vector<Polynomial> out;
  for (const Rational& level : grades) {
    std::set<Monomial> below;
    for (const auto& f : basis)
      for (const auto& [m, c] : f)
        if (grad_of(m, g) < level) below.insert(m);
    for (const auto& x : left_kernel(basis, below)) {
      Polynomial part;
      for (std::size_t t = 0; t < basis.size(); ++t)
        for (const auto& [m, c] : basis[t])
          if (grad_of(m, g) == level) {
            auto [it, fresh] = part.try_emplace(m, 0);
            it->second += x[t] * c;
            if (sgn(it->second) == 0) part.erase(it);
          }
      if (!part.empty()) out.push_back(part);
    }
  }
  return out;
}

}  // namespace

TEST(NormalizeIndex, Examples) {
  EXPECT_EQ(normalize_index({1, 2, 3}).elems, (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(normalize_index({1, 2, 3}).sign, 1);
  EXPECT_EQ(normalize_index({2, 1}).elems, (std::vector<int>{1, 2}));
  EXPECT_EQ(normalize_index({2, 1}).sign, -1);
  EXPECT_EQ(normalize_index({1, 3, 1}).sign, 0);
}

TEST(Relations, Fl3) {
  const auto gens = plucker_relations(3, {1, 2});
  const ComponentBasis cb = component_basis(3, {1, 2}, gens, {1, 1});
  ASSERT_EQ(cb.rank(), 1u);
  EXPECT_TRUE(detail::echelon_of(cb.rows).contains(fl3_relation()));
}

TEST(Relations, TrivialCases) {
  EXPECT_TRUE(plucker_relations(2, {1}).empty());
  for (const auto& f : plucker_relations(4, {1, 2, 3})) EXPECT_EQ(f.begin()->second, 1);
}

TEST(Relations, KleinQuadric) {
  const auto gens = plucker_relations(4, {2});
  const ComponentBasis cb = component_basis(4, {2}, gens, {2});
  EXPECT_EQ(cb.ambient_dim(), 21u);
  EXPECT_EQ(cb.rank(), 1u);
}

TEST(Relations, CodimensionIsWeylDim) {
  for (const auto& [n, d, maxdeg] : std::vector<std::tuple<int, std::vector<int>, int>>{
           {3, {1, 2}, 3}, {4, {2}, 3}, {4, {1, 3}, 2}, {4, {1, 2, 3}, 2}}) {
    const PlueckerIdeal I(n, d);
    for (const auto& mu : multidegrees_up_to(d.size(), maxdeg)) {
      const ComponentBasis cb = I.component(mu);
      EXPECT_EQ(cb.codim(), weyl_dim(multidegree_weight(n, d, mu))) << n << " mu " << acceptance::detail::mu_key(mu);
    }
  }
}

TEST(Relations, FullFlagFourMixed) {
  const ComponentBasis cb = PlueckerIdeal(4, {1, 2, 3}).component({1, 1, 1});
  EXPECT_EQ(cb.ambient_dim(), 96u);
  EXPECT_EQ(cb.rank(), 32u);
}

TEST(Grades, Examples) {
  const GradingVector g = grading_vector(WeightSystem::constant(3, 1), {1, 2});
  EXPECT_EQ(grad_of(mono(3, {{2}, {1, 3}}), g), 2);
  EXPECT_EQ(grad_of(mono(3, {{3}, {1, 2}}), g), 1);
  EXPECT_EQ(grad_of(mono(3, {{2}, {1, 3}}), grading_vector(WeightSystem(3), {1, 2})), 0);
}

TEST(InitialPart, Examples) {
  const GradingVector ab = grading_vector(WeightSystem::constant(3, 1), {1, 2});
  Polynomial want;
  want[mono(3, {{1}, {2, 3}})] = 1;
  want[mono(3, {{3}, {1, 2}})] = 1;
  EXPECT_EQ(initial_part(fl3_relation(), ab), want);
  EXPECT_EQ(initial_part(fl3_relation(), grading_vector(WeightSystem::toric(3), {1, 2})), want);
  const Polynomial m{{mono(3, {{2}, {1, 3}}), Rational(3)}};
  EXPECT_EQ(initial_part(m, ab), m);
}

TEST(InitialComponent, Examples) {
  const auto gens = plucker_relations(3, {1, 2});
  EXPECT_EQ(PlueckerIdeal(3, {1, 2}).component({1, 0}).rank(), 0u);
  const ComponentBasis ab = initial_component(3, {1, 2}, gens, {1, 1}, grading_vector(WeightSystem::constant(3, 1), {1, 2}));
  ASSERT_EQ(ab.rank(), 1u);
  Polynomial want;
  want[mono(3, {{1}, {2, 3}})] = 1;
  want[mono(3, {{3}, {1, 2}})] = 1;
  EXPECT_EQ(monic(ab.rows[0]), monic(want));
  EXPECT_FALSE(contains_monomial(ab));
  const ComponentBasis zero = initial_component(3, {1, 2}, gens, {2, 1}, grading_vector(WeightSystem(3), {1, 2}));
  EXPECT_TRUE(same_span(zero, component_basis(3, {1, 2}, gens, {2, 1})));
}

TEST(InitialComponent, AgreesWithFiltrationOracle) {
  for (const auto& [n, d, maxdeg, extra] : std::vector<std::tuple<int, std::vector<int>, int, std::size_t>>{
           {3, {1, 2}, 3, 6}, {4, {2}, 2, 4}, {4, {1, 2, 3}, 2, 2}}) {
    const PlueckerIdeal I(n, d);
    for (const auto& A : pbwdegen::testing::sample_cone(n, extra)) {
      const GradingVector g = grading_vector(A, d);
      for (const auto& mu : multidegrees_up_to(d.size(), maxdeg)) {
        const ComponentBasis full = I.component(mu);
        const ComponentBasis fast = I.initial(mu, g);
        const ComponentBasis slow = detail::make_basis(n, d, mu, detail::echelon_of(filtration_initial_space(full.rows, g)));
        EXPECT_EQ(fast.rank(), full.rank());
        EXPECT_TRUE(same_span(fast, slow)) << n << " mu " << acceptance::detail::mu_key(mu);
      }
    }
  }
}

TEST(InitialComponent, MonomialForViolatedPoint) {
  // s_2 + s_13 < s_3: grades of X_1X_23, X_2X_13, X_3X_12 are 0, -1, 0.
  GradingVector g(3, {1, 2});
  g.set(idx(3, {2}), -1);
  const ComponentBasis cb = PlueckerIdeal(3, {1, 2}).initial({1, 1}, g);
  const auto m = contains_monomial(cb);
  ASSERT_TRUE(m);
  EXPECT_EQ(*m, mono(3, {{2}, {1, 3}}));
}

TEST(Binomials, AbelianSpannedByBinomials) {
  const ComponentBasis cb = PlueckerIdeal(4, {1, 2, 3}).initial({1, 1, 0}, grading_vector(WeightSystem::toric(4), {1, 2, 3}));
  EXPECT_TRUE(spanned_by_binomials(cb));
  const ComponentBasis classical = PlueckerIdeal(4, {1, 2, 3}).component({1, 1, 0});
  EXPECT_FALSE(spanned_by_binomials(classical));
}

TEST(QuadraticGeneration, Examples) {
  for (const auto& [label, A] : canonical_weight_systems(3)) EXPECT_TRUE(quadratic_generation_check(A, {1, 2}, {2, 1})) << label;
  EXPECT_TRUE(quadratic_generation_check(WeightSystem::toric(4), {1, 2, 3}, {1, 1, 1}));
}

TEST(FaceDegeneration, Examples) {
  const WeightSystem zero(3);
  const WeightSystem ones = WeightSystem::constant(3, 1);
  EXPECT_TRUE(face_degeneration_check(ones, ones, {1, 2}, {1, 1}));
  EXPECT_TRUE(face_degeneration_check(zero, ones, {1, 2}, {1, 1}));
  EXPECT_THROW(face_degeneration_check(ones, zero, {1, 2}, {1, 1}), PreconditionError);
}

TEST(Components, Sizes) {
  EXPECT_EQ(component_dim(3, {1, 2}, {1, 1}), 9u);
  EXPECT_EQ(component_dim(4, {2}, {2}), 21u);
  EXPECT_EQ(monomials_of_degree(4, {1, 2, 3}, {1, 1, 1}).size(), 96u);
  EXPECT_EQ(multidegree_weight(4, {1, 3}, {2, 1}), DominantWeight(4, {2, 0, 1}));
}
