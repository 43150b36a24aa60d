#include "support.hpp"

#include "pbwdegen/io.hpp"

using namespace pbwdegen;
using pbwdegen::io::json;

TEST(Numbers, ExactRoundTrip) {
  EXPECT_EQ(io::exact(Integer(-3)), json(-3));
  const Integer big("123456789012345678901234567890");
  EXPECT_EQ(io::exact(big), json("123456789012345678901234567890"));
  EXPECT_EQ(io::exact(Rational(7, 2)), json("7/2"));
  EXPECT_EQ(io::rational_from_json(json("7/2")), Rational(7, 2));
  EXPECT_EQ(io::integer_from_json(io::exact(big)), big);
  EXPECT_THROW(io::integer_from_json(json("1/2")), InvalidInput);
  EXPECT_THROW(io::rational_from_json(json(1.5)), InvalidInput);
}

TEST(Weights, JsonAndTextRoundTrip) {
  for (const auto& [label, A] : canonical_weight_systems(5)) {
    EXPECT_EQ(io::weights_from_json(io::to_json(A)), A) << label;
    EXPECT_EQ(io::weights_from_text(io::to_text(A)), A) << label;
    EXPECT_EQ(io::weights_from_string(io::to_json(A).dump(), "mem"), A) << label;
  }
}

TEST(Weights, MalformedInput) {
  EXPECT_THROW(io::weights_from_json(json::parse(R"({"n":3})")), InvalidInput);
  EXPECT_THROW(io::weights_from_json(json::parse(R"({"n":3,"a":{"1,2":0,"2,3":0}})")), InvalidInput);
  EXPECT_THROW(io::weights_from_json(json::parse(R"({"n":3,"a":{"1,2":0,"2,3":0,"1,4":0}})")), InvalidInput);
  EXPECT_THROW(io::weights_from_text("1 2\n"), InvalidInput);
  EXPECT_THROW(io::parse_json("{", "x"), InvalidInput);
}

TEST(Polynomials, RoundTrip) {
  for (const auto& f : plucker_relations(4, {1, 2, 3})) EXPECT_EQ(io::polynomial_from_json(io::to_json(f), 4), f);
}

TEST(Patterns, RoundTrip) {
  for (const auto& T : enumerate_patterns(DominantWeight(4, {1, 1, 0}))) EXPECT_EQ(io::pattern_from_json(io::to_json(T)), T);
  for (const auto& Y : enumerate_ssyt(DominantWeight(4, {0, 1, 1}))) EXPECT_EQ(io::tableau_from_json(io::to_json(Y)), Y);
}

TEST(Points, RoundTripAndBareMap) {
  const TropicalPoint s = map_h(WeightSystem::toric(4));
  EXPECT_EQ(io::point_from_json(io::to_json(s)), s);
  EXPECT_EQ(io::point_from_json(io::to_json(s).at("s")), s);
  EXPECT_THROW(io::point_from_json(json::parse(R"({"1":0,"2":0,"3":0})")), InvalidInput);
}
