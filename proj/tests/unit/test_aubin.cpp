#include <gtest/gtest.h>

#include <random>

#include "examples.hpp"
#include "polycone/aubin.hpp"
#include "polycone/coderivative.hpp"
#include "polycone/errors.hpp"
#include "random_instances.hpp"

using namespace polycone;
using ptest::V;

TEST(AubinExact, ExampleOneFailsWithVerifiedCertificate) {
  const GraphPoint gp = ptest::at_origin(ptest::example1());
  const AubinVerdict v = aubin_exact(gp);
  ASSERT_EQ(v.verdict, Verdict::Fails);
  ASSERT_TRUE(v.failure);
  EXPECT_FALSE(is_zero(v.failure->witness));
  EXPECT_TRUE(verify_certificate(gp, *v.failure).ok);
  EXPECT_EQ(reconstruct(gp.instance(), *v.failure), v.failure->witness);
}

TEST(AubinExact, ExampleOneHandCombinationIsAccepted) {
  // lambda = 1 on a2 and a3, beta = -2 on a1, T = I2(x): v = (-1,0,-1).
  const GraphPoint gp = ptest::at_origin(ptest::example1());
  FailureCertificate c;
  c.form = CertificateForm::Piece;
  c.label = {{0, 1, 2}, {0}};
  c.t = {1, 2};
  c.lambda = {{1, Rat(1)}, {2, Rat(1)}};
  c.beta = {{0, Rat(-2)}};
  c.witness = V({-1, 0, -1});
  EXPECT_EQ(reconstruct(gp.instance(), c), c.witness);
  const CertificateCheck chk = verify_certificate(gp, c);
  EXPECT_TRUE(chk.ok) << chk.reason;
  // <a2, v> = -2 < 0 and <a3, v> = 0.
  EXPECT_EQ(dot(V({1, 1, 1}), c.witness), Rat(-2));
}

TEST(AubinExact, TamperedCertificatesAreRejected) {
  const GraphPoint gp = ptest::at_origin(ptest::example1());
  FailureCertificate c;
  c.label = {{0, 1, 2}, {0}};
  c.t = {1, 2};
  c.lambda = {{1, Rat(1)}, {2, Rat(1)}};
  c.beta = {{0, Rat(-2)}};
  c.witness = V({-1, 0, -1});
  FailureCertificate wrong_sum = c;
  wrong_sum.witness = V({-1, 0, 0});
  EXPECT_FALSE(verify_certificate(gp, wrong_sum).ok);
  FailureCertificate negative = c;
  negative.lambda = {{1, Rat(-1)}, {2, Rat(1)}};
  negative.witness = reconstruct(gp.instance(), negative);
  EXPECT_FALSE(verify_certificate(gp, negative).ok);
  FailureCertificate zero = c;
  zero.lambda.clear();
  zero.beta.clear();
  zero.witness = zeros(3);
  EXPECT_FALSE(verify_certificate(gp, zero).ok);
  FailureCertificate bad_label = c;
  bad_label.label = {{0, 1}, {0}};  // C_{1,2} is empty
  EXPECT_FALSE(verify_certificate(gp, bad_label).ok);
}

TEST(AubinExact, ExampleTwoHolds) {
  const AubinVerdict v = aubin_exact(ptest::at_origin(ptest::example2()));
  EXPECT_EQ(v.verdict, Verdict::Holds);
  EXPECT_FALSE(v.failure);
  EXPECT_FALSE(v.trivial.empty());
}

TEST(AubinExact, ExampleThreeFails) {
  const GraphPoint gp = ptest::at_origin(ptest::example3());
  const AubinVerdict v = aubin_exact(gp);
  ASSERT_EQ(v.verdict, Verdict::Fails);
  EXPECT_TRUE(verify_certificate(gp, *v.failure).ok);
}

TEST(AubinExact, ExampleThreeHandWitnessInConditionSetForm) {
  // lambda = 1 on a2 and a3, beta = 1 on a1, T = {3}: (2,1,1), <a3,.> = -1.
  const GraphPoint gp = ptest::at_origin(ptest::example3());
  FailureCertificate c;
  c.form = CertificateForm::ConditionSet;
  c.t = {2};
  c.lambda = {{1, Rat(1)}, {2, Rat(1)}};
  c.beta = {{0, Rat(1)}};
  c.witness = V({2, 1, 1});
  EXPECT_EQ(dot(V({0, 0, -1}), c.witness), Rat(-1));
  const CertificateCheck chk = verify_certificate(gp, c);
  EXPECT_TRUE(chk.ok) << chk.reason;
  // It is not an element of any exact limiting piece.
  FailureCertificate as_piece = c;
  as_piece.form = CertificateForm::Piece;
  as_piece.label = {{0, 1, 2}, {0}};
  as_piece.t = {1, 2};
  EXPECT_FALSE(verify_certificate(gp, as_piece).ok);
}

TEST(AubinSufficient, Examples) {
  const AubinVerdict two = aubin_sufficient(ptest::at_origin(ptest::example2()));
  EXPECT_EQ(two.verdict, Verdict::Holds);
  EXPECT_EQ(two.method, AubinMethod::SufficientCondition);
  const AubinVerdict one = aubin_sufficient(ptest::at_origin(ptest::example1()));
  EXPECT_EQ(one.verdict, Verdict::Fails);
  EXPECT_EQ(one.method, AubinMethod::ExactEnumeration);  // dependent generators: deferred
  EXPECT_FALSE(one.notes.empty());
  // No active rows at all.
  const auto e = ptest::example1();
  const AubinVerdict inner = aubin_sufficient(validate_graph_point(e, V({-3, 1, 0}), zeros(3)));
  EXPECT_EQ(inner.verdict, Verdict::Holds);
}

TEST(AubinSufficient, IndependentAgreesWithExact) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + rng() % 3;
    const std::size_t th = 1 + rng() % (n - 1);
    const auto rp = ptest::random_independent(rng, n, th, 1 + rng() % (n - th));
    const GraphPoint gp = validate_graph_point(rp.inst, rp.x, rp.xstar);
    const AubinVerdict ex = aubin_exact(gp);
    const AubinVerdict su = aubin_sufficient(gp);
    EXPECT_EQ(ex.verdict, su.verdict) << trial;
    if (su.failure) EXPECT_TRUE(verify_certificate(gp, *su.failure).ok) << trial;
    if (ex.failure) EXPECT_TRUE(verify_certificate(gp, *ex.failure).ok) << trial;
  }
}

// C n Theta = {0} and G(x) is empty for x < 0 in C: D*G(0,0)(0) = R_-.
TEST(AubinG, DelegatesToTheShiftedGraphPoint) {
  const auto inst = ptest::line_example();
  const AubinVerdict v = aubin_G(inst, V({0}), V({-1}));
  ASSERT_EQ(v.verdict, Verdict::Fails);
  EXPECT_EQ(sgn(v.failure->witness[0]), -1);
  EXPECT_TRUE(verify_certificate(g_graph_point(inst, V({0}), V({-1})), *v.failure).ok);
  EXPECT_THROW(aubin_G(inst, V({0}), V({1})), InvalidGraphPoint);
}
