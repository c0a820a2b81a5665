#include <gtest/gtest.h>

#include "examples.hpp"
#include "polycone/errors.hpp"

using namespace polycone;
using ptest::V;

TEST(IndexSets, SetAlgebra) {
  EXPECT_EQ(set_union({0, 2}, {1, 2}), (IndexSet{0, 1, 2}));
  EXPECT_EQ(set_minus({0, 1, 2}, {1}), (IndexSet{0, 2}));
  EXPECT_EQ(set_intersect({0, 1, 2}, {1, 3}), (IndexSet{1}));
  EXPECT_TRUE(is_subset({1}, {0, 1}));
  EXPECT_FALSE(is_subset({3}, {0, 1}));
  EXPECT_TRUE(contains_index({0, 4}, 4));
}

TEST(IndexSets, SubsetsInCardinalityThenLexOrder) {
  const auto s = subsets_of({1, 4, 7});
  const std::vector<IndexSet> expect{{}, {1}, {4}, {7}, {1, 4}, {1, 7}, {4, 7}, {1, 4, 7}};
  EXPECT_EQ(s, expect);
  EXPECT_EQ(subsets_of({}), (std::vector<IndexSet>{{}}));
}

TEST(Instance, GroupsAndLabels) {
  const auto e = ptest::example2();
  EXPECT_EQ(e->i1(), (IndexSet{0}));
  EXPECT_EQ(e->i2(), (IndexSet{1, 2, 3}));
  EXPECT_EQ(e->format({0, 3}), "{1,4}");
  EXPECT_TRUE(e->homogeneous());
  EXPECT_EQ(e->restrict_i1({0, 2}), (IndexSet{0}));
  EXPECT_EQ(e->restrict_i2({0, 2}), (IndexSet{2}));
}

TEST(Instance, ZeroRowsAreDroppedOrRejected) {
  const ProblemInstance p(2, {{V({1, 0}), 0}, {V({0, 0}), 3}}, {{V({0, 0}), 0}, {V({0, 1}), 1}});
  EXPECT_EQ(p.size(), 2u);
  EXPECT_EQ(p.dropped_labels(), (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(p.label(1), 3u);  // original position of (0,1)
  EXPECT_EQ(p.format({1}), "{4}");
  EXPECT_THROW(ProblemInstance(2, {{V({0, 0}), -1}}, {}), EmptyPolyhedron);
  EXPECT_THROW(ProblemInstance(2, {{V({1}), 0}}, {}), DimensionMismatch);
}

TEST(Instance, SetsAsPolyhedra) {
  const auto e = ptest::example1();
  EXPECT_TRUE(e->theta().contains(V({-1, 5, 0})));
  EXPECT_FALSE(e->cset().contains(V({0, -1, 0})));
  EXPECT_TRUE(e->theta_cap_c().contains(V({-1, 0, 0})));
  EXPECT_FALSE(e->theta_cap_c().contains(V({-1, 2, 0})));
}
