#include <gtest/gtest.h>

#include "polycone/errors.hpp"
#include "polycone/rational.hpp"

using namespace polycone;

TEST(Rational, ParseAndFormatRoundTrip) {
  EXPECT_EQ(parse_rat("3"), Rat(3));
  EXPECT_EQ(parse_rat("-3/4"), Rat(-3, 4));
  EXPECT_EQ(parse_rat("6/8"), Rat(3, 4));  // canonicalised
  EXPECT_EQ(format_rat(parse_rat("-6/8")), "-3/4");
  EXPECT_EQ(format_rat(Rat(0)), "0");
  EXPECT_EQ(format_vec({Rat(1), Rat(-1, 2)}), "(1, -1/2)");
}

TEST(Rational, ParseRejectsGarbage) {
  for (const char* bad : {"", "1.5", "1/0", "abc", "1/2/3", "--1"})
    EXPECT_THROW(parse_rat(bad), ParseError) << bad;
}

TEST(Rational, VectorHelpers) {
  const RatVec a{1, 2, 3}, b{-1, 0, 1};
  EXPECT_EQ(dot(a, b), Rat(2));
  EXPECT_EQ(add(a, b), (RatVec{0, 2, 4}));
  EXPECT_EQ(sub(a, b), (RatVec{2, 2, 2}));
  EXPECT_EQ(norm1(b), Rat(2));
  EXPECT_EQ(norm2sq(a), Rat(14));
  EXPECT_THROW(dot(a, RatVec{1}), DimensionMismatch);
}

TEST(Rational, PrimitiveScalesToCoprimeIntegers) {
  EXPECT_EQ(primitive({Rat(1, 2), Rat(-3, 4), Rat(0)}), (RatVec{2, -3, 0}));
  EXPECT_EQ(primitive({Rat(4), Rat(6)}), (RatVec{2, 3}));
  EXPECT_EQ(primitive({Rat(0), Rat(0)}), (RatVec{0, 0}));
}

TEST(Rational, LatticeBallCountsMatchClosedForm) {
  // Integer points with ||k||_1 <= r in Z^2: 2r^2 + 2r + 1.
  for (int r = 0; r <= 4; ++r)
    EXPECT_EQ(lattice_l1_ball({0, 0}, Rat(1), Rat(r)).size(), static_cast<std::size_t>(2 * r * r + 2 * r + 1));
  // Step 1/2, radius 1 in Z^3: octahedron with ||k||_1 <= 2 has 25 points.
  const RatMat pts = lattice_l1_ball({1, 1, 1}, Rat(1, 2), Rat(1));
  EXPECT_EQ(pts.size(), 25u);
  for (const auto& p : pts) EXPECT_LE(norm1(sub(p, {1, 1, 1})), Rat(1));
}
