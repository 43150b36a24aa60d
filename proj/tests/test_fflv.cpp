#include "support.hpp"

using namespace pbwdegen;

namespace {

// Paths from every top-row cell (i,i+1) to every top-row cell, counted by
// dynamic programming over the grid of cells (i,j).
std::uint64_t dyck_count_oracle(int n) {
  std::uint64_t total = 0;
  for (int start = 1; start < n; ++start) {
    // ways[i][j]: number of walks from (start,start+1) to (i,j).
    std::vector<std::vector<std::uint64_t>> ways(n + 2, std::vector<std::uint64_t>(n + 2, 0));
    ways[start][start + 1] = 1;
    for (int i = start; i <= n; ++i)
      for (int j = start + 1; j <= n; ++j) {
        if (j <= i || (i == start && j == start + 1)) continue;
        ways[i][j] = (i > start ? ways[i - 1][j] : 0) + (j - 1 > i ? ways[i][j - 1] : 0);
      }
    for (int i = 1; i < n; ++i) total += ways[i][i + 1];
  }
  return total;
}

TrianglePattern pattern(int n, std::map<std::pair<int, int>, int> cells) {
  TrianglePattern T(n);
  for (const auto& [c, v] : cells) T.set(c.first, c.second, v);
  return T;
}

DominantWeight w(std::vector<int> a) {
  const int n = static_cast<int>(a.size()) + 1;
  return DominantWeight(n, std::move(a));
}

}  // namespace

TEST(DyckPaths, SmallCases) {
  const auto two = dyck_paths(2);
  ASSERT_EQ(two.size(), 1u);
  EXPECT_EQ(two[0].steps, (std::vector<RootPair>{{1, 2}}));

  const auto three = dyck_paths(3);
  std::set<std::vector<RootPair>> got;
  for (const auto& p : three) got.insert(p.steps);
  const std::set<std::vector<RootPair>> want{{{1, 2}}, {{2, 3}}, {{1, 2}, {1, 3}, {2, 3}}};
  EXPECT_EQ(got, want);
}

TEST(DyckPaths, CountMatchesGridOracle) {
  for (int n = 2; n <= 8; ++n) {
    const auto paths = dyck_paths(n);
    EXPECT_EQ(paths.size(), dyck_count_oracle(n)) << n;
    for (const auto& p : paths) EXPECT_TRUE(is_dyck_path(p, n));
  }
}

TEST(PathBound, Examples) {
  const DominantWeight adj = w({1, 1});
  EXPECT_EQ(path_bound(adj, DyckPath{{{1, 2}, {1, 3}, {2, 3}}}), 2);
  EXPECT_EQ(path_bound(adj, DyckPath{{{1, 2}}}), 1);
  for (const auto& p : dyck_paths(4)) EXPECT_EQ(path_bound(DominantWeight::zero(4), p), 0);
}

TEST(PathSum, Examples) {
  const TrianglePattern T = pattern(3, {{{1, 3}, 2}});
  EXPECT_EQ(path_sum(T, DyckPath{{{1, 2}, {1, 3}, {2, 3}}}), 2);
  EXPECT_EQ(path_sum(T, DyckPath{{{1, 2}}}), 0);
  EXPECT_EQ(path_sum(TrianglePattern(3), DyckPath{{{1, 2}, {1, 3}, {2, 3}}}), 0);
}

TEST(Membership, Examples) {
  const DominantWeight adj = w({1, 1});
  EXPECT_TRUE(is_fflv_pattern(TrianglePattern(3), adj));
  EXPECT_TRUE(is_fflv_pattern(pattern(3, {{{1, 3}, 2}}), adj));
  EXPECT_FALSE(is_fflv_pattern(pattern(3, {{{1, 2}, 2}}), adj));
  EXPECT_TRUE(is_fflv_pattern(TrianglePattern(5), DominantWeight::zero(5)));
}

TEST(Enumerate, Examples) {
  const auto zero = enumerate_patterns(DominantWeight::zero(4));
  ASSERT_EQ(zero.size(), 1u);
  EXPECT_TRUE(zero[0].is_zero());
  EXPECT_EQ(enumerate_patterns(w({1, 1})).size(), 8u);
  EXPECT_EQ(enumerate_patterns(w({0, 1, 0})).size(), 6u);
}

TEST(Enumerate, MembersAreDistinctAndValid) {
  for (const auto& lambda : dominant_weights_up_to(4, 3)) {
    const auto patterns = enumerate_patterns(lambda);
    const std::set<TrianglePattern> unique(patterns.begin(), patterns.end());
    EXPECT_EQ(unique.size(), patterns.size());
    for (const auto& T : patterns) EXPECT_TRUE(is_fflv_pattern(T, lambda));
  }
}

TEST(Enumerate, NothingMissedInsideBoundingBox) {
  // Every pattern in the box of single-cell bounds that passes the path test
  // must be enumerated.
  const DominantWeight lambda = w({1, 0, 2});
  const auto pairs = all_pairs(4);
  const auto listed = enumerate_patterns(lambda);
  const std::set<TrianglePattern> set(listed.begin(), listed.end());
  std::size_t count = 0;
  TrianglePattern T(4);
  auto rec = [&](auto&& self, std::size_t s) -> void {
    if (s == pairs.size()) {
      if (is_fflv_pattern(T, lambda)) {
        ++count;
        EXPECT_TRUE(set.count(T));
      }
      return;
    }
    for (int v = 0; v <= cell_bound(lambda, pairs[s].i, pairs[s].j); ++v) {
      T.set(pairs[s].i, pairs[s].j, v);
      self(self, s + 1);
    }
    T.set(pairs[s].i, pairs[s].j, 0);
  };
  rec(rec, 0);
  EXPECT_EQ(count, listed.size());
}

TEST(WeylDim, Examples) {
  EXPECT_EQ(weyl_dim(DominantWeight::zero(5)), 1u);
  EXPECT_EQ(weyl_dim(w({1, 1})), 8u);
  EXPECT_EQ(weyl_dim(w({1, 1, 1})), 64u);
  EXPECT_EQ(weyl_dim(w({0, 2, 0})), 20u);
}

TEST(WeylDim, EqualsPatternCount) {
  for (int n = 2; n <= 5; ++n)
    for (const auto& lambda : dominant_weights_up_to(n, n <= 4 ? 3 : 2))
      EXPECT_EQ(enumerate_patterns(lambda).size(), weyl_dim(lambda));
}

TEST(Minkowski, Examples) {
  EXPECT_TRUE(minkowski_check(DominantWeight::zero(3), DominantWeight::zero(3)));
  EXPECT_TRUE(minkowski_check(w({1, 0}), w({0, 1})));
  EXPECT_TRUE(minkowski_check(w({1, 0, 1}), w({0, 1, 0})));
}

TEST(DominantWeight, Validation) {
  EXPECT_THROW(DominantWeight(3, {1}), InvalidInput);
  EXPECT_THROW(DominantWeight(3, {1, -1}), InvalidInput);
  EXPECT_EQ(w({2, 0, 1}).column_heights(), (std::vector<int>{3, 1, 1}));
  EXPECT_EQ(dominant_weights_up_to(3, 2).size(), 6u);
}
