#include "tauber/arcs.hpp"

#include <cmath>

#include "gtest/gtest.h"

namespace tauber {
namespace {

TEST(CircleDistance, WrapsAround) {
  EXPECT_NEAR(circle_distance(0.1, kTwoPi - 0.1), 0.2, 1e-15);
  EXPECT_NEAR(circle_distance(0.0, kPi), kPi, 1e-15);
  EXPECT_NEAR(wrap_angle(-0.5), kTwoPi - 0.5, 1e-15);
  EXPECT_NEAR(wrap_angle(7.0), 7.0 - kTwoPi, 1e-15);
}

TEST(ClosedArcSet, MergesAndSorts) {
  const ClosedArcSet K({{2.0, 3.0}, {0.5, 1.0}, {0.9, 2.1}});
  ASSERT_EQ(K.arcs().size(), 1u);
  EXPECT_DOUBLE_EQ(K.arcs()[0].start, 0.5);
  EXPECT_DOUBLE_EQ(K.arcs()[0].end, 3.0);
  EXPECT_NEAR(K.measure(), 2.5, 1e-15);
}

TEST(ClosedArcSet, ArcThroughZeroIsSplit) {
  const ClosedArcSet K({{6.0, 0.5}});
  ASSERT_EQ(K.arcs().size(), 2u);
  EXPECT_TRUE(K.contains(0.0));
  EXPECT_TRUE(K.contains(6.1));
  EXPECT_FALSE(K.contains(3.0));
  EXPECT_NEAR(K.measure(), kTwoPi - 6.0 + 0.5, 1e-14);
  EXPECT_NEAR(K.distance(1.0), 0.5, 1e-14);
}

TEST(ClosedArcSet, FullCircle) {
  EXPECT_TRUE(ClosedArcSet::full().is_full());
  EXPECT_TRUE(ClosedArcSet::parse("0:6.2832").is_full());
  EXPECT_NEAR(ClosedArcSet::full().measure(), kTwoPi, 1e-15);
  EXPECT_FALSE(ClosedArcSet::parse("0.3:2.8416,3.4416:5.9832").is_full());
}

TEST(ClosedArcSet, EndpointsBelong) {
  const auto K = ClosedArcSet::parse("0.3:2.8416");
  EXPECT_TRUE(K.contains(0.3));
  EXPECT_TRUE(K.contains(2.8416));
  EXPECT_NEAR(K.distance(0.0), 0.3, 1e-15);
  EXPECT_NEAR(K.distance(kPi), kPi - 2.8416, 1e-15);
}

TEST(ClosedArcSet, ParseRoundTrip) {
  const auto K = ClosedArcSet::parse("0.3:2.8416,3.4416:5.9832");
  const auto again = ClosedArcSet::parse(K.to_string());
  ASSERT_EQ(again.arcs().size(), K.arcs().size());
  for (std::size_t i = 0; i < K.arcs().size(); ++i) {
    EXPECT_EQ(again.arcs()[i].start, K.arcs()[i].start);
    EXPECT_EQ(again.arcs()[i].end, K.arcs()[i].end);
  }
}

TEST(ClosedArcSet, ParseRejectsGarbage) {
  EXPECT_THROW(ClosedArcSet::parse("1:2:3"), std::invalid_argument);
  EXPECT_THROW(ClosedArcSet::parse("a:b"), std::invalid_argument);
  EXPECT_THROW(ClosedArcSet::parse(""), std::invalid_argument);
}

}  // namespace
}  // namespace tauber
