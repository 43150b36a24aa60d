#include "support.hpp"

using namespace pbwdegen;
using pbwdegen::testing::idx;

namespace {

// Oracle: the least total weight of a chain of operators f_{i,j} (weight
// a_{i,j}) moving e_{1..k} to +-e_I. Each step replaces one element of the
// index by a larger one, so element sums increase and the moves form a DAG;
// relax in order of element sum.
Integer min_chain_degree(const WeightSystem& A, const PlueckerIndex& target) {
  const int n = A.n();
  const int k = target.size();
  auto nodes = indices_of_size(n, k);
  auto sum = [](const PlueckerIndex& I) {
    int s = 0;
    for (int x : I.elems()) s += x;
    return s;
  };
  std::stable_sort(nodes.begin(), nodes.end(), [&](const auto& a, const auto& b) { return sum(a) < sum(b); });
  std::map<PlueckerIndex, Integer> best;
  best[PlueckerIndex::initial(n, k)] = 0;
  for (const auto& I : nodes) {
    auto it = best.find(I);
    if (it == best.end()) continue;
    for (const auto& f : all_pairs(n)) {
      auto r = classical_action(f, I);
      if (!r) continue;
      Integer cand = it->second + A.at(f.i, f.j);
      auto [jt, fresh] = best.try_emplace(r->index, cand);
      if (!fresh && cand < jt->second) jt->second = cand;
    }
  }
  return best.at(target);
}

}  // namespace

TEST(ComplementPairs, Examples) {
  EXPECT_TRUE(complement_pairs(idx(4, {1, 2})).empty());
  EXPECT_EQ(complement_pairs(idx(4, {3, 4})), (std::vector<RootPair>{{1, 4}, {2, 3}}));
  EXPECT_EQ(complement_pairs(idx(5, {2, 4})), (std::vector<RootPair>{{1, 4}}));
}

TEST(DegreeS, Examples) {
  for (const auto& I : all_proper_indices(4)) EXPECT_EQ(degree_s(WeightSystem(4), I), 0);
  EXPECT_EQ(degree_s(WeightSystem::constant(4, 1), idx(4, {3, 4})), 2);
  EXPECT_EQ(degree_s(WeightSystem::toric(4), idx(4, {3, 4})), 2);
  WeightSystem bad(3);
  bad.set(1, 3, 1);
  EXPECT_THROW(degree_s(bad, idx(3, {2})), PreconditionError);
}

TEST(DegreeS, AgreesWithChainOracle) {
  for (int n = 2; n <= 5; ++n)
    for (const auto& A : pbwdegen::testing::sample_cone(n, 25))
      for (const auto& I : all_proper_indices(n)) EXPECT_EQ(degree_s(A, I), min_chain_degree(A, I)) << n << " " << I.key();
}

TEST(Grading, FullFlagAbelian) {
  const GradingVector g = grading_vector(WeightSystem::constant(3, 1), {1, 2});
  const std::map<std::string, int> want{{"1", 0}, {"2", 1}, {"3", 1}, {"1,2", 0}, {"1,3", 1}, {"2,3", 1}};
  ASSERT_EQ(g.values().size(), want.size());
  for (const auto& [I, v] : g.values()) EXPECT_EQ(v, want.at(I.key())) << I.key();
}

TEST(Grading, RestrictedDomain) {
  const GradingVector g = grading_vector(WeightSystem::constant(3, 1), {2});
  EXPECT_EQ(g.values().size(), 3u);
  EXPECT_THROW(g.at(idx(3, {1})), InvalidInput);
  const GradingVector zero = grading_vector(WeightSystem(3), {1, 2});
  for (const auto& [I, v] : zero.values()) EXPECT_EQ(v, 0);
}

TEST(Grading, ValidatesD) {
  EXPECT_THROW(validate_d(4, {}), InvalidInput);
  EXPECT_THROW(validate_d(4, {2, 1}), InvalidInput);
  EXPECT_THROW(validate_d(4, {4}), InvalidInput);
  EXPECT_NO_THROW(validate_d(4, {1, 3}));
}

TEST(FundamentalPattern, Examples) {
  EXPECT_TRUE(fundamental_pattern(idx(4, {1, 2})).is_zero());
  const TrianglePattern T = fundamental_pattern(idx(4, {3, 4}));
  for (const auto& [i, j] : all_pairs(4)) EXPECT_EQ(T.at(i, j), (i == 1 && j == 4) || (i == 2 && j == 3) ? 1 : 0);
  const TrianglePattern U = fundamental_pattern(idx(4, {2, 4}));
  for (const auto& [i, j] : all_pairs(4)) EXPECT_EQ(U.at(i, j), i == 1 && j == 4 ? 1 : 0);
}

TEST(FundamentalPattern, LiesInFundamentalPolytope) {
  for (int n = 2; n <= 6; ++n)
    for (const auto& I : all_proper_indices(n))
      EXPECT_TRUE(is_fflv_pattern(fundamental_pattern(I), DominantWeight::fundamental(n, I.size())));
}
