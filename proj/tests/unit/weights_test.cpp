#include <gtest/gtest.h>

#include "burau4/error.hpp"
#include "burau4/record.hpp"
#include "burau4/track.hpp"
#include "burau4/tracer.hpp"
#include "burau4/weights.hpp"

using namespace burau4;

TEST(Weights, DerivedRailsOfFamilyBase) {
  const auto w = derive_weights({22, 74, 89, 21, 192});
  const RailWeights expected{22, 74, 89, 21, 44, 148, 178, 42, 0, 148, 44, 164, 14, 28, 192};
  EXPECT_EQ(w, expected);
}

TEST(Weights, DerivedRailsOfSmallestArc) {
  const auto w = derive_weights({2, 2, 3, 1, 8});
  EXPECT_EQ(w[8], 0);
  EXPECT_EQ(w[9], 4);
  EXPECT_EQ(w[10], 4);
  EXPECT_EQ(w[11], 6);
  EXPECT_EQ(w[12], 0);
  EXPECT_EQ(w[13], 2);
}

TEST(Weights, ZeroTuple) {
  EXPECT_EQ(derive_weights({}), RailWeights{});
}

TEST(Weights, Errors) {
  try {
    derive_weights({2, 2, 3, 1, 9});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OddHalf);
  }
  try {
    derive_weights({2, 2, 3, 1, 10});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DerivedNegative);
  }
  EXPECT_FALSE(try_derive_weights({2, 2, 3, 1, 10}).has_value());
}

TEST(Weights, SwitchConditionsHoldForDerivedWeights) {
  for (std::int64_t a = 0; a <= 6; ++a)
    for (std::int64_t b = 0; b <= 6; ++b)
      for (std::int64_t c = 0; c <= 6; ++c)
        for (std::int64_t d = 0; d <= 6; ++d)
          for (std::int64_t h = 0; h <= 24; h += 2) {
            if (auto w = try_derive_weights({a, b, c, d, h})) {
              EXPECT_TRUE(satisfies_switch_conditions(*w));
            }
          }
  auto w = derive_weights({22, 74, 89, 21, 192});
  w[9] += 1;
  EXPECT_FALSE(satisfies_switch_conditions(w));
}

TEST(Weights, TupleText) {
  const WeightTuple t{22, 74, 89, 21, 192};
  EXPECT_EQ(to_string(t), "(22,74,89,21,192)");
  EXPECT_EQ(parse_tuple("(22,74,89,21,192)"), t);
  EXPECT_EQ(parse_tuple("22,74,89,21,192"), t);
  EXPECT_EQ(parse_tuple(" 22 74  89 21 192 "), t);
  EXPECT_THROW(parse_tuple("1 2 3"), Error);
  EXPECT_THROW(parse_tuple("1 2 3 4 x"), Error);
}

TEST(Weights, TupleArithmetic) {
  const WeightTuple base{22, 74, 89, 21, 192}, step{2, 10, 12, 2, 24};
  EXPECT_EQ(base + step * 2, (WeightTuple{26, 94, 113, 25, 240}));
  EXPECT_EQ((base + step) - base, step);
  EXPECT_TRUE((step - step).is_zero());
  EXPECT_FALSE((base - step * 12).nonnegative());
}

TEST(Thresholds, LeftList) {
  EXPECT_EQ(left_thresholds(derive_weights({22, 74, 89, 21, 192})),
            (LeftThresholds{0, 74, 148, 170, 192, 118, 118, 44}));
  EXPECT_EQ(left_thresholds(derive_weights({2, 2, 3, 1, 8})), (LeftThresholds{0, 2, 4, 6, 8, 6, 6, 4}));
  EXPECT_EQ(left_thresholds(RailWeights{}), LeftThresholds{});
}

TEST(Thresholds, RightList) {
  EXPECT_EQ(right_thresholds(derive_weights({22, 74, 89, 21, 192})),
            (RightThresholds{14, 21, 28, 103, 178}));
  EXPECT_EQ(right_thresholds(derive_weights({2, 2, 3, 1, 8})), (RightThresholds{0, 1, 2, 5, 8}));
  EXPECT_EQ(right_thresholds(RailWeights{}), RightThresholds{});
}

TEST(Record, TextAndAlphabet) {
  const auto r = parse_record("(3,5,3,5,4,2,4,2,4,2,4)");
  EXPECT_EQ(r.entries.size(), 11u);
  EXPECT_TRUE(r.well_formed());
  EXPECT_EQ(to_string(r), "(3,5,3,5,4,2,4,2,4,2,4)");
  EXPECT_FALSE(parse_record("(3,7,3)").well_formed());
  // Left symbol 7 is never reached, so it is not part of the alphabet.
  for (int s : {1, 2, 3, 4, 5, 6, 8, 9}) EXPECT_TRUE(is_left_symbol(s));
  EXPECT_FALSE(is_left_symbol(7));
  EXPECT_FALSE(is_left_symbol(10));
  for (int s = 1; s <= 6; ++s) EXPECT_TRUE(is_right_symbol(s));
  EXPECT_FALSE(is_right_symbol(7));
}
