#include <gtest/gtest.h>

#include "examples.hpp"
#include "polycone/bilevel.hpp"
#include "polycone/errors.hpp"

using namespace polycone;
using ptest::V;

namespace {

// min sqrt|x| over the solutions of min { x : x >= 0 } restricted to C = {x <= 0}.
BilevelProblem closing_example() {
  BilevelProblem bp;
  bp.inst = ptest::line_example();
  bp.c = V({1});
  bp.candidate = V({0});
  bp.subdiff.sub = {1, {V({0})}, {V({-1})}, {}};
  bp.subdiff.horizon = VCone(1);
  bp.subdiff.horizon.rays = {V({-1})};
  bp.q2_asserted = true;
  bp.f = ObjectiveModel{ObjectiveModel::Kind::SqrtAbsAffine, {{V({1}), 0}}};
  bp.grid.deltas = {Rat(1) / 2, Rat(1)};
  bp.grid.step = Rat(1) / 16;
  return bp;
}

// R^1 with a single row in the chosen block, candidate 0.
BilevelProblem one_row(bool in_theta, RatVec sub_point, RatVec c) {
  BilevelProblem bp;
  std::vector<RowInput> rows{{V({1}), 0}};
  bp.inst = std::make_shared<const ProblemInstance>(1, in_theta ? rows : std::vector<RowInput>{},
                                                    in_theta ? std::vector<RowInput>{} : rows);
  bp.c = std::move(c);
  bp.candidate = V({0});
  bp.subdiff.sub = {1, {std::move(sub_point)}, {}, {}};
  bp.subdiff.horizon = VCone(1);
  bp.q2_asserted = true;
  bp.robust = true;
  return bp;
}

}  // namespace

TEST(Bilevel, ClosingExample) {
  const BilevelProblem bp = closing_example();
  const GraphPoint gp = validate_candidate(bp);
  const OptimalityReport r = necessary_condition(bp, gp);
  EXPECT_TRUE(r.q1.passed);
  EXPECT_FALSE(r.lipschitz);
  ASSERT_TRUE(r.holds);
  EXPECT_EQ(r.witness->g, V({0}));
  EXPECT_EQ(r.witness->s, V({0}));
  EXPECT_TRUE(verify_witness(bp, gp, *r.witness));
  // S = R_- (only T = {2} survives), so sub + S = R_-.
  ASSERT_EQ(r.pieces.size(), 1u);
  EXPECT_EQ(r.pieces[0].t, (IndexSet{1}));
  EXPECT_TRUE(set_equal(r.pieces[0].assembled, VPolyhedron{1, {V({0})}, {V({-1})}, {}}));
  EXPECT_EQ(r.gate.kind, GateResult::Kind::LocalSolutionGrid);
  EXPECT_TRUE(r.gate.passed);
  ASSERT_EQ(r.gate.evidence.size(), 2u);
  EXPECT_EQ(r.gate.evidence[0].points_checked, 9u);   // -8/16 .. 0
  EXPECT_EQ(r.gate.evidence[1].points_checked, 17u);  // -16/16 .. 0
}

TEST(Bilevel, Q1FailsForAFullHorizon) {
  BilevelProblem bp = closing_example();
  bp.subdiff.horizon.rays.clear();
  bp.subdiff.horizon.spans = {V({1})};
  const Q1Result q = check_q1(bp, validate_candidate(bp));
  ASSERT_FALSE(q.passed);
  EXPECT_EQ(*q.witness, V({-1}));
  const OptimalityReport r = necessary_condition(bp, validate_candidate(bp));
  EXPECT_NE(std::find(r.caveats.begin(), r.caveats.end(), "blocking: qualification (q1) fails"),
            r.caveats.end());
}

TEST(Bilevel, ViolatedWhenTheConditionSetIsTrivial) {
  // No rows at all: S = {0}, and 0 is not in {1} + S.
  BilevelProblem bp;
  bp.inst = std::make_shared<const ProblemInstance>(1, std::vector<RowInput>{}, std::vector<RowInput>{});
  bp.c = V({0});
  bp.candidate = V({0});
  bp.subdiff.sub = {1, {V({1})}, {}, {}};
  bp.subdiff.horizon = VCone(1);
  bp.robust = true;
  const OptimalityReport r = necessary_condition(bp, validate_candidate(bp));
  EXPECT_FALSE(r.holds);
  EXPECT_FALSE(r.witness);
  EXPECT_TRUE(r.lipschitz);
}

TEST(Bilevel, HoldsThroughTheConeOfC) {
  // C = {x <= 0}: S = R_+, g = -2 is cancelled by s = 2.
  const BilevelProblem bp = one_row(false, V({-2}), V({0}));
  const GraphPoint gp = validate_candidate(bp);
  const OptimalityReport r = necessary_condition(bp, gp);
  ASSERT_TRUE(r.holds);
  EXPECT_EQ(r.witness->s, V({2}));
  EXPECT_TRUE(verify_witness(bp, gp, *r.witness));
  EXPECT_EQ(r.gate.kind, GateResult::Kind::RobustSolution);
  // g = 2 needs s = -2, which is not in R_+.
  EXPECT_FALSE(necessary_condition(one_row(false, V({2}), V({0})), gp).holds);
}

TEST(Bilevel, TamperedWitnessIsRejected) {
  const BilevelProblem bp = one_row(false, V({-2}), V({0}));
  const GraphPoint gp = validate_candidate(bp);
  OptimalityWitness w = *necessary_condition(bp, gp).witness;
  OptimalityWitness neg_lambda = w;
  neg_lambda.lambda = {{0, Rat(-2)}};
  neg_lambda.s = V({-2});
  EXPECT_FALSE(verify_witness(bp, gp, neg_lambda));
  OptimalityWitness weights = w;
  weights.point_weights = {Rat(1) / 2};
  EXPECT_FALSE(verify_witness(bp, gp, weights));
}

TEST(Bilevel, AffineObjectiveIsLipschitz) {
  BilevelProblem bp = closing_example();
  const std::vector<AffinePiece> pieces{{V({1}), 0}, {V({-1}), 0}};
  bp.subdiff = affine_max_subdifferential(pieces, bp.candidate);
  bp.f = ObjectiveModel{ObjectiveModel::Kind::AffineMax, pieces};
  EXPECT_TRUE(lipschitz_wrt_C(bp));
  EXPECT_TRUE(set_equal(bp.subdiff.sub, VPolyhedron{1, {V({-1}), V({1})}, {}, {}}));
  EXPECT_EQ(bp.subdiff.provenance, Provenance::AffineMaxDerived);
  // |x| attains its minimum at 0, so the grid gate passes as well.
  const OptimalityReport r = necessary_condition(bp, validate_candidate(bp));
  EXPECT_TRUE(r.holds);
  EXPECT_TRUE(r.gate.passed);
}

TEST(Bilevel, GateFindsADecreasingObjective) {
  BilevelProblem bp = closing_example();
  bp.f = ObjectiveModel{ObjectiveModel::Kind::AffineMax, {{V({1}), 0}}};  // f(x) = x
  const GateResult g = robustness_gate(bp, validate_candidate(bp));
  EXPECT_FALSE(g.passed);
  ASSERT_TRUE(g.evidence[0].failing_point);
  EXPECT_EQ(sgn((*g.evidence[0].failing_point)[0]), -1);
  bp.f.reset();
  EXPECT_FALSE(robustness_gate(bp, validate_candidate(bp)).passed);
}

TEST(Bilevel, CandidateValidation) {
  BilevelProblem bp = closing_example();
  bp.candidate = V({-1});  // in C, not in Theta
  EXPECT_THROW(validate_candidate(bp), InfeasibleCandidate);
  bp.candidate = V({1});  // in Theta, not in C
  EXPECT_THROW(validate_candidate(bp), InfeasibleCandidate);
  bp.candidate = V({0});
  bp.c = V({-1});  // 1 is not in N(0, Theta) = R_-
  EXPECT_THROW(validate_candidate(bp), InfeasibleCandidate);
}

TEST(Bilevel, ObjectiveModels) {
  const ObjectiveModel s{ObjectiveModel::Kind::SqrtAbsAffine, {{V({1}), 0}}};
  EXPECT_TRUE(s.less(V({0}), V({Rat(-1) / 4})));
  EXPECT_FALSE(s.less(V({Rat(1) / 4}), V({Rat(-1) / 4})));
  const ObjectiveModel m{ObjectiveModel::Kind::AffineMax, {{V({1}), 0}, {V({-2}), 1}}};
  EXPECT_TRUE(m.less(V({Rat(1) / 3}), V({1})));  // 1/3 < 1
  EXPECT_TRUE(m.less(V({Rat(1) / 3}), V({0})));  // 1/3 < 1
}

TEST(Bilevel, VPolyhedronEquality) {
  const VPolyhedron a{2, {V({0, 0}), V({1, 0})}, {V({0, 1})}, {}};
  const VPolyhedron b{2, {V({0, 0}), V({1, 0}), V({Rat(1) / 2, 3})}, {V({0, 1})}, {}};
  EXPECT_TRUE(set_equal(a, b));
  EXPECT_FALSE(set_equal(a, VPolyhedron{2, {V({0, 0})}, {V({0, 1})}, {}}));
  EXPECT_TRUE(a.contains(V({Rat(1) / 2, 7})));
  EXPECT_FALSE(a.contains(V({2, 0})));
}
