#include <gtest/gtest.h>

#include <cmath>

#include "liereach/analysis.hpp"
#include "liereach/errors.hpp"
#include "liereach/presets.hpp"

using namespace liereach;

namespace {

const GaussianRational kI = GaussianRational::i();

Caps caps(int order_cap, int threads = 1) {
  Caps c;
  c.order_cap = order_cap;
  c.threads = threads;
  return c;
}

/// Spin-1/2 realization with explicit Pauli-based matrices, generators
/// i*sigma_x, i*sigma_y, i*sigma_z over su(2).
Representation pauli_rep(const Envelope& env) {
  RepSpec spec;
  spec.kind = RepSpec::Kind::Su2Spin;
  spec.two_j = 1;
  spec.K = 2;
  return Representation(env, spec);
}

}  // namespace

TEST(TangentRank, SpinHalfExamples) {
  Envelope env(su2());
  Representation rep = pauli_rep(env);
  StateVector up(2);
  up << 1.0, 0.0;
  std::vector<EnvElement> basis{env.generator(0, kI), env.generator(1, kI), env.generator(2, kI)};
  EXPECT_EQ(tangent_rank(rep, basis, up, 1), 2);
  EXPECT_EQ(tangent_rank(rep, {env.generator(2)}, up, 1), 1);
  EXPECT_EQ(tangent_rank(rep, {}, up, 1), 0);
}

TEST(TangentRank, InteriorAndMismatchErrors) {
  ControlSystem l = preset("lloyd");
  Representation rep(l.env, *l.rep);
  StateVector top = StateVector::Zero(rep.size());
  top(rep.size() - 1) = 1.0;
  EXPECT_THROW(tangent_rank(rep, {l.env.generator(0)}, top, 1), PreconditionError);
  StateVector wrong = StateVector::Zero(3);
  EXPECT_THROW(tangent_rank(rep, {l.env.generator(0)}, wrong, 1), ArgumentError);
  Envelope other(su2());
  StateVector e0 = StateVector::Zero(rep.size());
  e0(0) = 1.0;
  EXPECT_THROW(tangent_rank(rep, {other.generator(0)}, e0, 1), ArgumentError);
}

TEST(Classify, PotentialIsStronglyAnalytic) {
  Verdict v = classify(preset("pt"), caps(4));
  EXPECT_EQ(v.classification, Classification::StronglyAnalyticallyControllable);
  EXPECT_EQ(v.evidence.dim_A, 4);
  EXPECT_EQ(v.evidence.dim_B, 3);
  EXPECT_EQ(v.evidence.dim_C, 3);
  EXPECT_TRUE(v.evidence.exact_A);
  EXPECT_EQ(v.evidence.condition_bc, true);
  EXPECT_EQ(v.evidence.tangent_equal, true);
}

TEST(Classify, ScatteringIsInconclusive) {
  Verdict v = classify(preset("st"), caps(4));
  EXPECT_EQ(v.classification, Classification::Inconclusive);
  EXPECT_EQ(v.evidence.dim_B, 3);
  EXPECT_EQ(v.evidence.condition_bc, false);
  EXPECT_TRUE(v.evidence.bc_witness.has_value());
  EXPECT_NE(v.evidence.failed_condition.find("[B,C]"), std::string::npos);
}

TEST(Classify, SecondOrderControlGivesApproximateControllability) {
  Verdict v = classify(preset("st1"), caps(4));
  EXPECT_EQ(v.classification, Classification::ApproxStrongSmoothControllable);
  ASSERT_EQ(v.evidence.coverage.size(), 3u);
  EXPECT_TRUE(v.evidence.coverage[2].full());
}

TEST(Classify, LloydIsApproximatelyControllable) {
  Verdict v = classify(preset("lloyd"), caps(4));
  EXPECT_EQ(v.classification, Classification::ApproxStrongSmoothControllable);
  EXPECT_TRUE(v.evidence.coverage[2].full());
}

TEST(Classify, QubitIsFiniteDimControllable) {
  Verdict v = classify(preset("qubit"), caps(2));
  EXPECT_EQ(v.classification, Classification::FiniteDimControllable);
  EXPECT_EQ(v.evidence.dim_A, 3);
  EXPECT_EQ(v.evidence.rep_image_rank, 3);
  Verdict h = classify(preset("qubit-homogeneous"), caps(2));
  EXPECT_EQ(h.classification, Classification::FiniteDimControllable);
}

TEST(Classify, HomogeneousWithOneControlIsInconclusive) {
  ControlSystem s = preset("qubit-homogeneous");
  s.controls.pop_back();
  Verdict v = classify(s, caps(2));
  EXPECT_EQ(v.classification, Classification::Inconclusive);
  EXPECT_EQ(v.evidence.dim_A, 1);
  EXPECT_NE(v.evidence.failed_condition.find("1 < N^2-1 = 3"), std::string::npos);
}

TEST(Classify, FiniteAlgebraOnSphereIsNoGo) {
  ControlSystem s = preset("pt");
  s.manifold = Manifold::Sphere;
  Verdict v = classify(s, caps(4));
  EXPECT_EQ(v.classification, Classification::NoGoStrong);
  EXPECT_EQ(v.evidence.dim_A, 4);
}

TEST(Classify, BoundStatesRecordMatrixImage) {
  Verdict v = classify(preset("bt"), caps(4));
  EXPECT_EQ(v.evidence.rep_dim, 5);
  EXPECT_EQ(v.evidence.rep_image_rank, 25);
}

TEST(Classify, CapBelowSystemOrderRejected) { EXPECT_THROW(classify(preset("lloyd"), caps(3)), ArgumentError); }

TEST(Classify, ThreadCountDoesNotChangeEvidence) {
  Verdict a = classify(preset("st1"), caps(4, 1));
  Verdict b = classify(preset("st1"), caps(4, 3));
  EXPECT_EQ(a.evidence.dim_A, b.evidence.dim_A);
  EXPECT_EQ(a.evidence.growth, b.evidence.growth);
  EXPECT_EQ(a.evidence.tangent.size(), b.evidence.tangent.size());
  for (std::size_t i = 0; i < a.evidence.tangent.size(); ++i)
    EXPECT_EQ(a.evidence.tangent[i].rank_A, b.evidence.tangent[i].rank_A);
}

TEST(MatrixClosure, SpinHalfSu2) {
  Envelope env(su2());
  Representation rep = pauli_rep(env);
  EXPECT_EQ(matrix_closure_dim(rep, {env.generator(0, kI), env.generator(1, kI)}), 3);
  EXPECT_EQ(matrix_closure_dim(rep, {env.generator(0, kI)}), 1);
  EXPECT_EQ(matrix_closure_dim(rep, {env.generator(0, kI), env.generator(1, kI), env.unit(kI)}), 4);
}
