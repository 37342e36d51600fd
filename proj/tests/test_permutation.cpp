#include <gtest/gtest.h>

#include "hypermaps/permutation.hpp"

using namespace hypermaps;

TEST(Permutation, RejectsNonBijections) {
  EXPECT_THROW(Permutation(std::vector<Point>{0, 0}), Error);
  EXPECT_THROW(Permutation(std::vector<Point>{0, 2}), Error);
  try {
    Permutation(std::vector<Point>{1, 1});
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidImage);
  }
}

TEST(Permutation, ComposesLeftToRight) {
  const auto a = Permutation::from_cycles(3, {{0, 1}});
  const auto b = Permutation::from_cycles(3, {{1, 2}});
  const auto ab = a * b;
  // 0 -a-> 1 -b-> 2
  EXPECT_EQ(ab[0], 2u);
  EXPECT_EQ(ab[2], 1u);
  EXPECT_EQ(ab[1], 0u);
  EXPECT_NE(ab, b * a);
}

TEST(Permutation, IdentityIsTwoSided) {
  const auto a = Permutation::from_cycles(5, {{0, 3, 1}, {2, 4}});
  const auto e = Permutation::identity(5);
  EXPECT_EQ(a * e, a);
  EXPECT_EQ(e * a, a);
  EXPECT_TRUE(e.is_identity());
  EXPECT_TRUE((a * a.inverse()).is_identity());
  EXPECT_TRUE((a.inverse() * a).is_identity());
}

TEST(Permutation, CompositionIsAssociative) {
  const auto a = Permutation::from_cycles(6, {{0, 1, 2}});
  const auto b = Permutation::from_cycles(6, {{2, 3}, {4, 5}});
  const auto c = Permutation::from_cycles(6, {{0, 5, 1, 4}});
  EXPECT_EQ((a * b) * c, a * (b * c));
}

TEST(Permutation, OrderIsLcmOfCycleLengths) {
  EXPECT_EQ(Permutation::from_cycles(7, {{0, 1, 2}, {3, 4}}).order(), 6u);
  EXPECT_EQ(Permutation::identity(4).order(), 1u);
  EXPECT_EQ(Permutation::from_cycles(5, {{0, 1, 2, 3, 4}}).order(), 5u);
}

TEST(Permutation, InvolutionAndFixedPoints) {
  const auto a = Permutation::from_cycles(4, {{0, 1}, {2, 3}});
  EXPECT_TRUE(a.is_involution());
  EXPECT_FALSE(a.has_fixed_point());
  const auto b = Permutation::from_cycles(4, {{0, 1}});
  EXPECT_TRUE(b.is_involution());
  EXPECT_TRUE(b.has_fixed_point());
  EXPECT_FALSE(Permutation::from_cycles(3, {{0, 1, 2}}).is_involution());
}

TEST(Permutation, ConjugateByMatchesProduct) {
  const auto a = Permutation::from_cycles(5, {{0, 1, 2}});
  const auto g = Permutation::from_cycles(5, {{1, 3}, {2, 4}});
  EXPECT_EQ(a.conjugate_by(g), g.inverse() * a * g);
}

TEST(Permutation, DegreeMismatchThrows) {
  try {
    (void)(Permutation::identity(2) * Permutation::identity(3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegreeMismatch);
  }
}

TEST(Permutation, CycleString) {
  EXPECT_EQ(Permutation::from_cycles(4, {{0, 2}, {1, 3}}).to_cycle_string(), "(0 2)(1 3)");
  EXPECT_EQ(Permutation::identity(3).to_cycle_string(), "()");
}

TEST(Permutation, FromCyclesRejectsOutOfRange) {
  EXPECT_THROW(Permutation::from_cycles(3, {{0, 3}}), Error);
}
