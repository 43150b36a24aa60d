#include "support.hpp"

using namespace pbwdegen;
using pbwdegen::testing::idx;

namespace {

DominantWeight w(std::vector<int> a) {
  const int n = static_cast<int>(a.size()) + 1;
  return DominantWeight(n, std::move(a));
}

PBWTableau identity_filling(const DominantWeight& lambda) {
  std::vector<std::vector<int>> cols;
  for (int h : lambda.column_heights()) {
    std::vector<int> c;
    for (int r = 1; r <= h; ++r) c.push_back(r);
    cols.push_back(c);
  }
  return PBWTableau(lambda, cols);
}

}  // namespace

TEST(PbwTableau, Columns) {
  EXPECT_TRUE(is_pbw_tableau(identity_filling(w({2, 1}))));
  EXPECT_TRUE(is_pbw_tableau(PBWTableau(w({1, 0}), {{3}})));
  EXPECT_FALSE(is_pbw_tableau(PBWTableau(w({0, 1}), {{2, 1}})));
}

TEST(PbwTableau, Semistandard) {
  EXPECT_TRUE(is_pbw_ssyt(identity_filling(w({1, 2, 1}))));
  EXPECT_TRUE(is_pbw_ssyt(PBWTableau(w({1, 1}), {{1, 3}, {3}})));
  EXPECT_FALSE(is_pbw_ssyt(PBWTableau(w({1, 1}), {{1, 2}, {3}})));
}

TEST(PbwTableau, ShapeValidation) {
  EXPECT_THROW(PBWTableau(w({1, 1}), {{1, 2}}), InvalidInput);
  EXPECT_THROW(PBWTableau(w({1, 1}), {{1}, {3}}), InvalidInput);
  EXPECT_THROW(PBWTableau(w({1, 0}), {{4}}), InvalidInput);
}

TEST(Enumerate, Counts) {
  const auto empty = enumerate_ssyt(DominantWeight::zero(3));
  ASSERT_EQ(empty.size(), 1u);
  EXPECT_TRUE(empty[0].columns().empty());
  EXPECT_EQ(enumerate_ssyt(w({1, 0})).size(), 3u);
  EXPECT_EQ(enumerate_ssyt(w({1, 1})).size(), 8u);
}

TEST(Enumerate, CountEqualsWeylDim) {
  for (int n = 2; n <= 5; ++n)
    for (const auto& lambda : dominant_weights_up_to(n, n <= 4 ? 3 : 2)) {
      const auto all = enumerate_ssyt(lambda);
      EXPECT_EQ(all.size(), weyl_dim(lambda));
      for (const auto& Y : all) EXPECT_TRUE(is_pbw_ssyt(Y));
    }
}

TEST(Column, OneColumnPerIndex) {
  for (int n = 2; n <= 6; ++n)
    for (const auto& I : all_proper_indices(n)) {
      const auto col = pbw_column(I);
      EXPECT_TRUE(detail::is_pbw_column(col));
      EXPECT_EQ(column_content(n, col), I);
    }
}

TEST(Order, Examples) {
  EXPECT_TRUE(order_preceq(idx(3, {1, 2}), idx(3, {1})));
  EXPECT_TRUE(order_preceq(idx(3, {1, 3}), idx(3, {3})));
  EXPECT_FALSE(order_preceq(idx(3, {1, 2}), idx(3, {3})));
  EXPECT_FALSE(order_preceq(idx(3, {1}), idx(3, {1, 2})));
}

TEST(Tau, Examples) {
  EXPECT_TRUE(tau(identity_filling(w({1, 1, 2}))).is_zero());
  const TrianglePattern one = tau(PBWTableau(w({0, 1}), {{1, 3}}));
  for (const auto& [i, j] : all_pairs(3)) EXPECT_EQ(one.at(i, j), i == 2 && j == 3 ? 1 : 0);
  const TrianglePattern two = tau(PBWTableau(w({1, 1}), {{1, 3}, {3}}));
  for (const auto& [i, j] : all_pairs(3)) EXPECT_EQ(two.at(i, j), j == 3 ? 1 : 0);
}

TEST(Zeta, Examples) {
  EXPECT_EQ(zeta(TrianglePattern(4), w({1, 1, 1})), identity_filling(w({1, 1, 1})));
  TrianglePattern T(3);
  T.set(2, 3, 1);
  T.set(1, 3, 1);
  EXPECT_EQ(zeta(T, w({1, 1})), PBWTableau(w({1, 1}), {{1, 3}, {3}}));
  TrianglePattern bad(3);
  bad.set(1, 2, 2);
  EXPECT_THROW(zeta(bad, w({1, 1})), PreconditionError);
}

TEST(Bijection, RoundTripBothWays) {
  for (int n = 2; n <= 5; ++n)
    for (const auto& lambda : dominant_weights_up_to(n, n <= 4 ? 3 : 2)) {
      const auto patterns = enumerate_patterns(lambda);
      std::set<TrianglePattern> images;
      for (const auto& Y : enumerate_ssyt(lambda)) {
        const TrianglePattern T = tau(Y);
        EXPECT_TRUE(is_fflv_pattern(T, lambda));
        EXPECT_EQ(zeta(T, lambda), Y);
        images.insert(T);
      }
      for (const auto& T : patterns) EXPECT_EQ(tau(zeta(T, lambda)), T);
      EXPECT_EQ(images, std::set<TrianglePattern>(patterns.begin(), patterns.end()));
    }
}
