#include <gtest/gtest.h>

#include <random>

#include "liereach/envelope.hpp"
#include "liereach/errors.hpp"
#include "liereach/presets.hpp"

using namespace liereach;

namespace {

const GaussianRational kI = GaussianRational::i();

EnvElement random_element(const Envelope& env, int max_len, std::mt19937_64& g) {
  EnvElement e = env.zero();
  const int terms = 1 + static_cast<int>(g() % 3);
  for (int t = 0; t < terms; ++t) {
    const int len = 1 + static_cast<int>(g() % static_cast<unsigned>(max_len));
    std::vector<int> w;
    for (int l = 0; l < len; ++l) w.push_back(static_cast<int>(g() % static_cast<unsigned>(env.dim())));
    GaussianRational c(static_cast<long>(g() % 5) - 2, static_cast<long>(g() % 5) - 2);
    e.add_scaled(env.normal_order(w), c.is_zero() ? GaussianRational(1) : c);
  }
  return e;
}

std::vector<Envelope> all_envelopes() {
  return {Envelope(potential_su11()), Envelope(scattering_su11()), Envelope(su2()), Envelope(heisenberg())};
}

}  // namespace

TEST(Envelope, SwapUsesTable) {
  Envelope env(potential_su11());
  std::vector<int> w{1, 0};
  EnvElement expected = env.monomial({1, 1, 0}) + env.generator(2, -kI);
  EXPECT_EQ(env.normal_order(w), expected);
  EXPECT_EQ(env.multiply(env.generator(1), env.generator(0)), expected);
}

TEST(Envelope, OrderedWordUnchanged) {
  Envelope env(potential_su11());
  std::vector<int> w{0, 0, 2};
  EXPECT_EQ(env.normal_order(w), env.monomial({2, 0, 1}));
  EXPECT_EQ(env.multiply(env.generator(0), env.generator(1)), env.monomial({1, 1, 0}));
}

TEST(Envelope, HeisenbergSwapProducesScalar) {
  Envelope env(heisenberg());
  std::vector<int> w{1, 0};
  EnvElement r = env.normal_order(w);
  EXPECT_EQ(r, env.monomial({1, 1, 0}) + env.unit(-kI));
  EXPECT_EQ(env.render(r), "(1)*x^1p^1 + (-i)*1");
  // The identity generator folds into the unit.
  EXPECT_EQ(env.generator(2), env.unit());
}

TEST(Envelope, InvalidWordIndexThrows) {
  Envelope env(su2());
  std::vector<int> w{0, 5};
  EXPECT_THROW(env.normal_order(w), ArgumentError);
}

TEST(Envelope, UnitIsMultiplicativeIdentity) {
  Envelope env(scattering_su11());
  std::mt19937_64 g(1);
  for (int t = 0; t < 10; ++t) {
    EnvElement a = random_element(env, 4, g);
    EXPECT_EQ(env.multiply(env.unit(), a), a);
    EXPECT_EQ(env.multiply(a, env.unit()), a);
  }
}

TEST(Envelope, ScatteringBracketExample) {
  Envelope env(scattering_su11());
  EnvElement lz2 = env.monomial({0, 0, 2});
  EnvElement r = env.bracket(lz2, env.generator(0));
  EXPECT_EQ(r, env.monomial({0, 1, 1}, GaussianRational(0, 2)) - env.generator(0));
  EXPECT_EQ(env.render(r), "(2i)*Ly^1Lz^1 + (-1)*Lx^1");
  EXPECT_EQ(grade_truncate(r, 2), r);
}

TEST(Envelope, OrderOneBracketMatchesLieCore) {
  for (const auto& env : all_envelopes()) {
    const auto& a = env.algebra();
    for (int i = 0; i < a.dim(); ++i)
      for (int j = 0; j < a.dim(); ++j)
        EXPECT_EQ(env.bracket(env.generator(i), env.generator(j)), env.embed(a.bracket_gen(i, j)));
  }
}

TEST(Envelope, GradeTruncate) {
  Envelope env(potential_su11());
  EnvElement a = env.monomial({2, 1, 0}) + env.generator(2) + env.unit(5);
  EXPECT_EQ(grade_truncate(a, 1), env.generator(2) + env.unit(5));
  EXPECT_EQ(grade_truncate(a, 0), env.unit(5));
  EXPECT_EQ(grade_truncate(grade_truncate(a, 1), 1), grade_truncate(a, 1));
  EXPECT_EQ(grade_truncate(a, 3), a);
  EXPECT_THROW(grade_truncate(a, -1), ArgumentError);
}

TEST(Envelope, ZeroOrderIsNone) {
  Envelope env(su2());
  EXPECT_FALSE(env.zero().order().has_value());
  EXPECT_EQ(env.render(env.zero()), "0");
  EXPECT_EQ(env.render(env.unit()), "(1)*1");
}

TEST(Envelope, AdjointExamples) {
  Envelope env(potential_su11());
  EnvElement xy = env.monomial({1, 1, 0});
  EXPECT_EQ(env.adjoint(xy), xy + env.generator(2, -kI));
  EXPECT_EQ(env.adjoint(env.unit(kI)), env.unit(-kI));
  EXPECT_EQ(env.adjoint(env.monomial({2, 0, 0})), env.monomial({2, 0, 0}));
}

TEST(Envelope, AdjointIsAntiHomomorphicInvolution) {
  std::mt19937_64 g(5);
  for (const auto& env : all_envelopes()) {
    for (int t = 0; t < 15; ++t) {
      EnvElement a = random_element(env, 3, g), b = random_element(env, 3, g);
      EXPECT_EQ(env.adjoint(env.multiply(a, b)), env.multiply(env.adjoint(b), env.adjoint(a)));
      EXPECT_EQ(env.adjoint(env.adjoint(a)), a);
    }
  }
}

TEST(Envelope, AssociativeAndDistributive) {
  std::mt19937_64 g(9);
  for (const auto& env : all_envelopes()) {
    for (int t = 0; t < 15; ++t) {
      EnvElement a = random_element(env, 3, g), b = random_element(env, 3, g), c = random_element(env, 3, g);
      EXPECT_EQ(env.multiply(env.multiply(a, b), c), env.multiply(a, env.multiply(b, c)));
      EXPECT_EQ(env.multiply(a, b + c), env.multiply(a, b) + env.multiply(a, c));
      EXPECT_EQ(env.multiply(a + b, c), env.multiply(a, c) + env.multiply(b, c));
    }
  }
}

TEST(Envelope, BracketAntisymmetryJacobiAndOrderBound) {
  std::mt19937_64 g(13);
  for (const auto& env : all_envelopes()) {
    for (int t = 0; t < 15; ++t) {
      EnvElement a = random_element(env, 3, g), b = random_element(env, 3, g), c = random_element(env, 3, g);
      EXPECT_TRUE((env.bracket(a, b) + env.bracket(b, a)).is_zero());
      EXPECT_TRUE(env.bracket(a, a).is_zero());
      EnvElement jac = env.bracket(a, env.bracket(b, c)) + env.bracket(b, env.bracket(c, a)) +
                       env.bracket(c, env.bracket(a, b));
      EXPECT_TRUE(jac.is_zero());
      auto o = env.bracket(a, b).order();
      if (o && a.order().value_or(0) >= 1 && b.order().value_or(0) >= 1)
        EXPECT_LE(*o, *a.order() + *b.order() - 1);
    }
  }
}

TEST(Envelope, CacheHasNoObservableEffect) {
  Envelope env(scattering_su11());
  std::vector<int> w{2, 1, 0, 2, 1};
  EnvElement first = env.normal_order(w);
  EXPECT_GT(env.cache_size(), 0u);
  env.clear_cache();
  EXPECT_EQ(env.cache_size(), 0u);
  EXPECT_EQ(env.normal_order(w), first);
}

TEST(Envelope, MixedAlgebrasRejected) {
  Envelope a(potential_su11()), b(scattering_su11());
  EXPECT_THROW(a.multiply(a.generator(0), b.generator(0)), ArgumentError);
  EXPECT_THROW(a.bracket(a.generator(0), b.generator(0)), ArgumentError);
}

TEST(Envelope, CasimirIsCentral) {
  for (const auto& env : {Envelope(potential_su11()), Envelope(scattering_su11()), Envelope(su2())}) {
    EnvElement c = *casimir(env);
    for (int g = 0; g < 3; ++g) EXPECT_TRUE(env.bracket(c, env.generator(g)).is_zero()) << env.algebra().name();
  }
}

TEST(Envelope, OrderRaisingIdentityUnderSkewGenerators) {
  // With L = i L' over the scattering table, [L_x^2, L_x^{n-2} L_y] has
  // leading part 2 L_x^{n-1} L_z.
  Envelope env(scattering_su11().rescaled(kI));
  for (int n = 3; n <= 4; ++n) {
    EnvElement lhs = env.bracket(env.monomial({2, 0, 0}), env.monomial({static_cast<std::uint16_t>(n - 2), 1, 0}));
    EnvElement top = env.monomial({static_cast<std::uint16_t>(n - 1), 0, 1}, 2);
    EnvElement rest = lhs - top;
    EXPECT_EQ(lhs.order(), n);
    EXPECT_LT(rest.order().value_or(0), n);
  }
}
