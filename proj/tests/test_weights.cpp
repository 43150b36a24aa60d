#include "support.hpp"

using namespace pbwdegen;
using pbwdegen::testing::triangle;

TEST(Cone, Membership) {
  EXPECT_TRUE(check_cone_membership(WeightSystem(4)));
  EXPECT_TRUE(check_cone_membership(WeightSystem::constant(4, 1)));
  WeightSystem A(4);
  A.set(1, 3, 1);
  EXPECT_FALSE(check_cone_membership(A));
}

TEST(Cone, DerivedInequalities) {
  EXPECT_TRUE(derived_inequalities_hold(WeightSystem::constant(4, 1)));
  EXPECT_TRUE(derived_inequalities_hold(WeightSystem::toric(5)));
  WeightSystem A(4);
  A.set(1, 3, 5);
  EXPECT_FALSE(derived_inequalities_hold(A));
}

TEST(Cone, DerivedInequalitiesHoldOnCone) {
  for (int n = 2; n <= 6; ++n)
    for (const auto& A : pbwdegen::testing::sample_cone(n, 30)) EXPECT_TRUE(derived_inequalities_hold(A));
}

TEST(Cone, ToricFormula) {
  // (j-i+1)(n-j) at n=4; pairs in order 12 13 14 23 24 34
  EXPECT_TRUE(WeightSystem::toric(4) == triangle(4, {4, 3, 0, 2, 0, 0}));
}

TEST(Face, Signatures) {
  const FaceSignature zero = face_signature(WeightSystem(4));
  EXPECT_EQ(zero.tight_a, (std::set<int>{1, 2}));
  EXPECT_EQ(zero.tight_b, (std::set<std::pair<int, int>>{{1, 3}}));

  const FaceSignature ones = face_signature(WeightSystem::constant(4, 1));
  EXPECT_TRUE(ones.tight_a.empty());
  EXPECT_EQ(ones.tight_b, (std::set<std::pair<int, int>>{{1, 3}}));

  const FaceSignature toric = face_signature(WeightSystem::toric(4));
  EXPECT_TRUE(toric.tight_a.empty());
  EXPECT_TRUE(toric.tight_b.empty());
}

TEST(Face, Interior) {
  for (int n = 3; n <= 7; ++n) EXPECT_TRUE(is_interior(WeightSystem::toric(n))) << n;
  EXPECT_FALSE(is_interior(WeightSystem(4)));
  EXPECT_FALSE(is_interior(WeightSystem::constant(4, 1)));
  EXPECT_FALSE(is_interior(WeightSystem::constant(5, 1)));
}

TEST(Face, Containment) {
  const FaceSignature zero = face_signature(WeightSystem(4));
  const FaceSignature ones = face_signature(WeightSystem::constant(4, 1));
  const FaceSignature inner = face_signature(WeightSystem::toric(4));
  EXPECT_TRUE(face_contains(ones, zero));
  EXPECT_TRUE(face_contains(inner, zero));
  EXPECT_TRUE(face_contains(inner, ones));
  EXPECT_FALSE(face_contains(zero, inner));
  EXPECT_FALSE(face_contains(zero, ones));
}

TEST(Face, RequiresCone) {
  WeightSystem A(3);
  A.set(1, 3, 1);
  EXPECT_THROW(face_signature(A), PreconditionError);
}

TEST(Canonical, Counts) {
  const auto two = canonical_weight_systems(2);
  ASSERT_EQ(two.size(), 4u);
  EXPECT_EQ(two[0].weights.at(1, 2), 0);
  EXPECT_EQ(two[1].weights.at(1, 2), 1);
  EXPECT_EQ(two[2].weights.at(1, 2), 0);
  EXPECT_EQ(canonical_weight_systems(3).size(), 3u + 2u);
  EXPECT_EQ(canonical_weight_systems(5).size(), 3u + 8u);
}

TEST(Canonical, PbwLocusFacesAreDistinct) {
  for (int n = 3; n <= 6; ++n) {
    std::set<std::set<int>> seen;
    for (const auto& [label, A] : canonical_weight_systems(n)) {
      ASSERT_TRUE(check_cone_membership(A)) << label;
      if (label.rfind("pbw-locus", 0) != 0) continue;
      const FaceSignature sig = face_signature(A);
      EXPECT_EQ(sig.tight_b.size(), detail::b_positions(n).size()) << label;
      EXPECT_TRUE(seen.insert(sig.tight_a).second) << label;
    }
    EXPECT_EQ(seen.size(), std::size_t{1} << (n - 2));
  }
}

TEST(WeightSystem, RejectsBadIndices) {
  EXPECT_THROW(WeightSystem(1), InvalidInput);
  WeightSystem A(3);
  EXPECT_THROW(A.at(2, 2), InvalidInput);
  EXPECT_THROW(A.at(1, 4), InvalidInput);
}
