#include <gtest/gtest.h>

#include "liereach/closure.hpp"
#include "liereach/errors.hpp"
#include "liereach/presets.hpp"

using namespace liereach;

namespace {

const GaussianRational kI = GaussianRational::i();

ClosureOptions caps(int order_cap, int threads = 1) {
  ClosureOptions o;
  o.order_cap = order_cap;
  o.threads = threads;
  return o;
}

bool same_span(const LieClosureResult& a, const std::vector<EnvElement>& spanning) {
  EchelonSpace s;
  for (const auto& v : spanning) s.insert(v);
  if (s.dim() != static_cast<std::size_t>(a.dim)) return false;
  for (const auto& v : spanning)
    if (!a.space.contains(v)) return false;
  return true;
}

}  // namespace

TEST(EchelonSpace, CanonicalRows) {
  Envelope env(su2());
  EchelonSpace a, b;
  EnvElement x = env.generator(0), y = env.generator(1), xy = env.monomial({1, 1, 0});
  a.insert(x + y);
  a.insert(xy + x);
  a.insert(y);
  b.insert(xy);
  b.insert(y - x);
  b.insert(x);
  EXPECT_EQ(a.rows(), b.rows());
  EXPECT_FALSE(a.insert(xy + x + y));
  EXPECT_EQ(a.max_order(), 2);
}

TEST(LieClosure, PotentialExampleIsFourDimensional) {
  ControlSystem pt = preset("pt");
  std::vector<EnvElement> gens{pt.h0};
  gens.insert(gens.end(), pt.controls.begin(), pt.controls.end());
  LieClosureResult r = lie_closure(pt.env, gens, caps(4));
  EXPECT_EQ(r.dim, 4);
  EXPECT_TRUE(r.saturated);
  EXPECT_TRUE(r.exact_finite());
  const Envelope& e = pt.env;
  EnvElement c = *casimir(e) + e.unit(GaussianRational::from_parts(1, 4));
  EXPECT_TRUE(same_span(r, {c, e.generator(0), e.generator(1), e.generator(2)}));
}

TEST(LieClosure, SingleGeneratorSaturatesInOnePass) {
  Envelope env(potential_su11());
  LieClosureResult r = lie_closure(env, {env.generator(2)}, caps(2));
  EXPECT_EQ(r.dim, 1);
  EXPECT_TRUE(r.saturated);
  EXPECT_EQ(r.iterations, 1);
}

TEST(LieClosure, ScatteringGrowsWithCap) {
  ControlSystem st = preset("st");
  std::vector<EnvElement> gens{st.h0};
  gens.insert(gens.end(), st.controls.begin(), st.controls.end());
  int prev_dim = 0;
  for (int cap = 2; cap <= 4; ++cap) {
    LieClosureResult r = lie_closure(st.env, gens, caps(cap));
    EXPECT_EQ(r.max_order, cap);
    EXPECT_TRUE(r.saturated);
    EXPECT_TRUE(r.truncated);
    EXPECT_GT(r.dim, prev_dim);
    prev_dim = r.dim;
  }
}

TEST(LieClosure, ArgumentErrors) {
  Envelope env(su2());
  EXPECT_THROW(lie_closure(env, {}, caps(2)), ArgumentError);
  EXPECT_THROW(lie_closure(env, {env.generator(0)}, caps(0)), ArgumentError);
  EXPECT_THROW(lie_closure(env, {env.monomial({3, 0, 0})}, caps(2)), ArgumentError);
  ClosureOptions o = caps(2);
  o.iter_cap = 0;
  EXPECT_THROW(lie_closure(env, {env.generator(0)}, o), ArgumentError);
}

TEST(LieClosure, IterCapMarksUnsaturated) {
  ControlSystem st = preset("st");
  ClosureOptions o = caps(4);
  o.iter_cap = 1;
  LieClosureResult r = lie_closure(st.env, {st.h0, st.controls[0]}, o);
  EXPECT_FALSE(r.saturated);
  EXPECT_TRUE(r.iter_cap_hit);
}

TEST(LieClosure, ThreadCountDoesNotChangeResult) {
  ControlSystem st1 = preset("st1");
  std::vector<EnvElement> gens{st1.h0};
  gens.insert(gens.end(), st1.controls.begin(), st1.controls.end());
  LieClosureResult a = lie_closure(st1.env, gens, caps(4, 1));
  LieClosureResult b = lie_closure(st1.env, gens, caps(4, 4));
  EXPECT_EQ(a.basis, b.basis);
  EXPECT_EQ(a.iterations, b.iterations);
}

TEST(LieClosure, MonotoneInCap) {
  for (const char* name : {"pt", "st", "st1", "bt", "lloyd"}) {
    ControlSystem s = preset(name);
    std::vector<EnvElement> gens{s.h0};
    gens.insert(gens.end(), s.controls.begin(), s.controls.end());
    int prev = 0;
    for (int cap = s.order(); cap <= 4; ++cap) {
      int d = lie_closure(s.env, gens, caps(cap)).dim;
      EXPECT_GE(d, prev) << name;
      prev = d;
    }
  }
}

TEST(BuildC, CasimirFreeHamiltonianGivesB) {
  ControlSystem pt = preset("pt");
  LieClosureResult b = lie_closure(pt.env, pt.controls, caps(4));
  EXPECT_EQ(b.dim, 3);
  LieClosureResult c = build_c(pt.env, pt.h0, b, -1, caps(4));
  EXPECT_EQ(c.basis, b.basis);
  EXPECT_TRUE(check_bc_in_b(pt.env, b, c, 4).holds);
}

TEST(BuildC, ZeroHamiltonianGivesB) {
  ControlSystem st = preset("st");
  LieClosureResult b = lie_closure(st.env, st.controls, caps(3));
  LieClosureResult c = build_c(st.env, st.env.zero(), b, -1, caps(3));
  EXPECT_EQ(c.basis, b.basis);
}

TEST(BuildC, ScatteringWitness) {
  ControlSystem st = preset("st");
  const Envelope& e = st.env;
  LieClosureResult b = lie_closure(e, st.controls, caps(3));
  EXPECT_EQ(b.dim, 3);
  LieClosureResult c = build_c(e, st.h0, b, -1, caps(3));
  // ad_{H0}(-i Lx) = -[Lz^2, Lx] = -(2i LyLz - Lx)
  EnvElement second = e.monomial({0, 1, 1}, GaussianRational(0, 2)) - e.generator(0);
  EXPECT_TRUE(c.space.contains(second));
  BcCheck bc = check_bc_in_b(e, b, c, 3);
  EXPECT_FALSE(bc.holds);
  ASSERT_TRUE(bc.witness.has_value());
  EXPECT_FALSE(bc.witness->residual.is_zero());
  EXPECT_FALSE(b.space.contains(e.bracket(e.generator(0), second)));
}

TEST(BuildC, FullClosureContainsItsBrackets) {
  ControlSystem st1 = preset("st1");
  std::vector<EnvElement> gens{st1.h0};
  gens.insert(gens.end(), st1.controls.begin(), st1.controls.end());
  LieClosureResult all = lie_closure(st1.env, gens, caps(4));
  EXPECT_TRUE(check_bc_in_b(st1.env, all, all, 4).holds);
}

TEST(Coverage, SingleGeneratorSpan) {
  Envelope env(su2());
  LieClosureResult r = lie_closure(env, {env.generator(0)}, caps(2));
  Coverage cov = pbw_coverage(env, r, 2);
  EXPECT_EQ(cov.covered, 1);
  EXPECT_EQ(cov.total, 9);
  EXPECT_EQ(cov.missing.size(), 8u);
  EXPECT_THROW(pbw_coverage(env, r, 3), ArgumentError);
}

TEST(Coverage, MonomialCounts) {
  Envelope env(su2());
  EXPECT_EQ(monomials_up_to(env, 3).size(), 19u);
  Envelope h(heisenberg());
  EXPECT_EQ(monomials_up_to(h, 3).size(), 9u);
}

TEST(Coverage, St1CoversOrdersOneToThree) {
  ControlSystem st1 = preset("st1");
  std::vector<EnvElement> gens{st1.h0};
  gens.insert(gens.end(), st1.controls.begin(), st1.controls.end());
  LieClosureResult r = lie_closure(st1.env, gens, caps(4));
  Coverage cov = pbw_coverage(st1.env, r, 3);
  EXPECT_EQ(cov.covered, 19);
  EXPECT_EQ(cov.total, 19);
  EXPECT_TRUE(cov.missing.empty());
}

TEST(Coverage, LloydNeedsKerrTerm) {
  ControlSystem s = preset("lloyd");
  LieClosureResult with = lie_closure(s.env, s.controls, caps(4));
  EXPECT_TRUE(pbw_coverage(s.env, with, 3).full());
  std::vector<EnvElement> no_kerr(s.controls.begin(), s.controls.end() - 1);
  LieClosureResult without = lie_closure(s.env, no_kerr, caps(4));
  EXPECT_LT(pbw_coverage(s.env, without, 3).fraction(), 1.0);
}

TEST(Coverage, FreeCentralUnitCannotReachPowersOfX) {
  // If the unit of h(1) were an independent central generator, every
  // bracket would carry a factor of it and x^2 would stay out of reach.
  StructureAlgebra h("h(1)-free", {{"x"}, {"p"}, {"c", 1, true, false}});
  h.set_bracket(0, 1, {{2, kI}});
  Envelope env(h);
  EnvElement x = env.generator(0), p = env.generator(1);
  EnvElement n = env.multiply(x, x) + env.multiply(p, p);
  std::vector<EnvElement> gens{-kI * (env.multiply(x, p) + env.multiply(p, x)), -kI * p, -kI * x,
                               -kI * env.multiply(n, n)};
  LieClosureResult r = lie_closure(env, gens, caps(4));
  Coverage cov = pbw_coverage(env, r, 3);
  EXPECT_LT(cov.fraction(), 1.0);
  bool x2_missing = false;
  for (const auto& m : cov.missing)
    if (m == Monomial({2, 0, 0})) x2_missing = true;
  EXPECT_TRUE(x2_missing);
}
