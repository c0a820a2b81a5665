#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "brute_force.hpp"
#include "polycone/lp.hpp"
#include "random_instances.hpp"

using namespace polycone;

TEST(Lp, SmallOptimum) {
  // max x + y s.t. x + 2y <= 4, 3x + y <= 6, x, y >= 0 -> (8/5, 6/5).
  LinearProgram lp(2);
  lp.set_nonneg(0);
  lp.set_nonneg(1);
  lp.add({1, 2}, Sense::LE, Rat(4));
  lp.add({3, 1}, Sense::LE, Rat(6));
  const LpSolution s = lp.maximize({1, 1});
  ASSERT_EQ(s.status, LpStatus::Optimal);
  EXPECT_EQ(s.x, (RatVec{Rat(8, 5), Rat(6, 5)}));
  EXPECT_EQ(s.objective, Rat(14, 5));
}

TEST(Lp, InfeasibleAndUnbounded) {
  LinearProgram bad(1);
  bad.add({1}, Sense::LE, Rat(0));
  bad.add({1}, Sense::GE, Rat(1));
  EXPECT_EQ(bad.find_feasible().status, LpStatus::Infeasible);

  LinearProgram open(2);
  open.add({1, -1}, Sense::LE, Rat(0));
  EXPECT_EQ(open.maximize({1, 1}).status, LpStatus::Unbounded);
  EXPECT_EQ(open.minimize({-1, 1}).status, LpStatus::Optimal);  // y - x >= 0 bounded below by 0
}

TEST(Lp, EqualitiesAndFreeVariables) {
  LinearProgram lp(3);
  lp.add({1, 1, 1}, Sense::EQ, Rat(1));
  lp.add({1, -1, 0}, Sense::EQ, Rat(0));
  lp.add({0, 0, 1}, Sense::GE, Rat(-2));
  const LpSolution s = lp.maximize({1, 0, 0});
  ASSERT_EQ(s.status, LpStatus::Optimal);
  EXPECT_EQ(s.x, (RatVec{Rat(3, 2), Rat(3, 2), Rat(-2)}));
}

TEST(Lp, DegenerateRedundantEqualities) {
  LinearProgram lp(2);
  lp.add({1, 1}, Sense::EQ, Rat(2));
  lp.add({2, 2}, Sense::EQ, Rat(4));
  lp.add({1, 0}, Sense::LE, Rat(1));
  lp.add({0, 1}, Sense::LE, Rat(1));
  const LpSolution s = lp.maximize({1, 0});
  ASSERT_EQ(s.status, LpStatus::Optimal);
  EXPECT_EQ(s.x, (RatVec{1, 1}));
}

// Oracle: the optimum of a bounded LP is attained at a vertex; enumerate
// every vertex with independent elimination.
TEST(Lp, RandomBoxedAgainstVertexEnumeration) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 2 + rng() % 2, m = 2 + rng() % 4;
    RatMat a;
    RatVec b;
    for (std::size_t i = 0; i < m; ++i) {
      a.push_back(ptest::random_vec(rng, n, -3, 3));
      b.push_back(ptest::draw(rng, -2, 4));
    }
    for (std::size_t j = 0; j < n; ++j) {
      RatVec e(n, Rat(0));
      e[j] = 1;
      a.push_back(e);
      b.push_back(3);
      e[j] = -1;
      a.push_back(e);
      b.push_back(3);
    }
    const RatVec c = ptest::random_vec(rng, n, -3, 3);

    LinearProgram lp(n);
    for (std::size_t i = 0; i < a.size(); ++i) lp.add(a[i], Sense::LE, b[i]);
    const LpSolution s = lp.maximize(c);

    std::optional<Rat> best;
    const std::size_t rows = a.size();
    std::vector<std::size_t> idx(n);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t k) {
      if (k == n) {
        RatMat sub;
        RatVec rhs;
        for (auto i : idx) {
          sub.push_back(a[i]);
          rhs.push_back(b[i]);
        }
        const auto v = ptest::solve_unique(sub, rhs, n);
        if (!v) return;
        for (std::size_t i = 0; i < rows; ++i)
          if (dot(a[i], *v) > b[i]) return;
        const Rat val = dot(c, *v);
        if (!best || val > *best) best = val;
        return;
      }
      for (std::size_t i = start; i < rows; ++i) {
        idx[k] = i;
        rec(i + 1, k + 1);
      }
    };
    rec(0, 0);

    if (!best) {
      EXPECT_EQ(s.status, LpStatus::Infeasible);
    } else {
      ASSERT_EQ(s.status, LpStatus::Optimal);
      EXPECT_EQ(s.objective, *best);
      for (std::size_t i = 0; i < rows; ++i) EXPECT_LE(dot(a[i], s.x), b[i]);
    }
  }
}
