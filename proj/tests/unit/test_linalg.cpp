#include <gtest/gtest.h>

#include <random>

#include "brute_force.hpp"
#include "polycone/errors.hpp"
#include "polycone/linalg.hpp"
#include "random_instances.hpp"

using namespace polycone;

TEST(Linalg, RankExamples) {
  EXPECT_EQ(rank({{1, 0}, {0, 1}}), 2u);
  EXPECT_EQ(rank({{1, 0, 1}, {1, 1, 1}, {0, -1, 0}}), 2u);  // (1,1,1)-(1,0,1) = -(0,-1,0)
  EXPECT_EQ(rank(RatMat{}, 3), 0u);
}

TEST(Linalg, SolveLinearPlane) {
  const auto s = solve_linear({{1, 0, 1}}, {0}, 3);
  ASSERT_TRUE(s);
  EXPECT_EQ(s->particular, (RatVec{0, 0, 0}));
  ASSERT_EQ(s->nullspace.size(), 2u);
  // Same span as {(1,0,-1), (0,1,0)}.
  RatMat both = s->nullspace;
  both.push_back({1, 0, -1});
  both.push_back({0, 1, 0});
  EXPECT_EQ(rank(both, 3), 2u);
  for (const auto& v : s->nullspace) EXPECT_EQ(dot({1, 0, 1}, v), Rat(0));
}

TEST(Linalg, SolveLinearInconsistentAndIdentity) {
  EXPECT_FALSE(solve_linear({{1}, {1}}, {0, 1}, 1));
  const auto s = solve_linear({{1, 0}, {0, 1}}, {Rat(3), Rat(-1, 2)}, 2);
  ASSERT_TRUE(s);
  EXPECT_EQ(s->particular, (RatVec{Rat(3), Rat(-1, 2)}));
  EXPECT_TRUE(s->nullspace.empty());
}

TEST(Linalg, ProjectAffine) {
  EXPECT_EQ(project_affine({0, 5}, {{1, 0}}, {0}), (RatVec{0, 5}));
  EXPECT_EQ(project_affine({1, 1}, {{1, 0}}, {0}), (RatVec{0, 1}));
  EXPECT_EQ(project_affine({1, 0, 0}, {{1, 0, 1}}, {0}), (RatVec{Rat(1, 2), 0, Rat(-1, 2)}));
  EXPECT_THROW(project_affine({0}, {{1}, {1}}, {0, 1}), InconsistentSystem);
}

TEST(Linalg, RandomAgainstIndependentElimination) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 5;
    RatMat m;
    for (std::size_t i = 0; i < rows; ++i) m.push_back(ptest::random_vec(rng, cols, -3, 3));
    EXPECT_EQ(rank(m, cols), ptest::brute_rank(m, cols));
    const RatMat ns = nullspace(m, cols);
    EXPECT_EQ(ns.size(), cols - ptest::brute_rank(m, cols));
    for (const auto& v : ns)
      for (const auto& r : m) EXPECT_EQ(dot(r, v), Rat(0));
    if (!ns.empty()) EXPECT_EQ(rank(ns, cols), ns.size());
    // Projection residual is orthogonal to the affine set's direction space.
    const RatVec p = ptest::random_vec(rng, cols, -4, 4);
    RatVec rhs;
    const RatVec x0 = ptest::random_vec(rng, cols, -2, 2);
    for (const auto& r : m) rhs.push_back(dot(r, x0));
    const RatVec x = project_affine(p, m, rhs);
    for (std::size_t i = 0; i < m.size(); ++i) EXPECT_EQ(dot(m[i], x), rhs[i]);
    for (const auto& v : ns) EXPECT_EQ(dot(sub(p, x), v), Rat(0));
  }
}

TEST(Linalg, SolveSquareDetectsSingular) {
  EXPECT_FALSE(solve_square({{1, 2}, {2, 4}}, {1, 2}));
  const auto x = solve_square({{2, 1}, {1, 3}}, {3, 5});
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, (RatVec{Rat(4, 5), Rat(7, 5)}));
}
