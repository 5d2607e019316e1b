#include <gtest/gtest.h>

#include "generators.hpp"
#include "intcomb/lorentzian.hpp"

using namespace intcomb;
using namespace intcomb::lorentzian;

namespace {

// Coefficients of the generating function from its linear recurrence:
// T_ij = ga (T_{i-1,j} + T_{i,j-1}) + g^2 (1-a^2) T_{i-1,j-1} + [i=j=0].
std::vector<std::vector<Rational>> recurrence_oracle(const LorentzParams& p, int n) {
  std::vector<std::vector<Rational>> t(n, std::vector<Rational>(n));
  const Rational ga = p.g * p.a, c = p.g * p.g * (Rational(1) - p.a * p.a);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rational v(i == 0 && j == 0 ? 1 : 0);
      if (i > 0) v += ga * t[i - 1][j];
      if (j > 0) v += ga * t[i][j - 1];
      if (i > 0 && j > 0) v += c * t[i - 1][j - 1];
      t[i][j] = v;
    }
  return t;
}

LorentzParams params(const char* g, const char* a) { return {Rational::parse(g), Rational::parse(a)}; }

}  // namespace

TEST(TransferEntry, Examples) {
  const auto p = params("1/7", "2/3");
  EXPECT_EQ(transfer_entry(p, 0, 0), Rational(1));
  EXPECT_EQ(transfer_entry(p, 1, 0), p.a * p.g);
  EXPECT_EQ(transfer_entry(p, 1, 1), p.g * p.g * (p.a * p.a + Rational(1)));
  EXPECT_EQ(transfer_entry(p, 2, 1), Rational(44, 9261));
  EXPECT_THROW((void)transfer_entry(p, -1, 0), std::invalid_argument);
}

TEST(TransferEntry, MatchesRecurrenceOracle) {
  std::mt19937_64 rng(gen::kSeed + 10);
  for (int trial = 0; trial < 5; ++trial) {
    const LorentzParams p{gen::nonzero_rational(rng), gen::nonzero_rational(rng)};
    const auto oracle = recurrence_oracle(p, 9);
    const auto t = transfer_matrix(p, 9);
    for (int i = 0; i < 9; ++i)
      for (int j = 0; j < 9; ++j) {
        EXPECT_EQ(t[i][j], oracle[i][j]);
        EXPECT_EQ(t[i][j], t[j][i]);
      }
  }
}

TEST(TransferEntry, SymbolicParameters) {
  // Over the rational-function field with q standing in for g and t for a.
  const auto g = RationalFunction::q(), a = RationalFunction::t();
  EXPECT_EQ(transfer_entry<RationalFunction>(g, a, 1, 1), g * g * (a * a + RationalFunction(1)));
  EXPECT_EQ(phi_invariant<RationalFunction>(g, a),
            (RationalFunction(1) - g * g * (RationalFunction(1) - a * a)) / (a * g));
}

TEST(Genfun, Examples) {
  EXPECT_TRUE(genfun_check(params("1/7", "2/3"), 2).pass);
  const auto r1 = genfun_check(params("1/7", "2/3"), 1);
  EXPECT_TRUE(r1.pass);
  EXPECT_EQ(r1.coefficients_checked, 3);
  const auto bad = genfun_check(params("1/7", "2/3"), 4, GenfunVariant::FlippedCrossTerm);
  EXPECT_FALSE(bad.pass);
  ASSERT_TRUE(bad.first_mismatch.has_value());
  EXPECT_EQ(*bad.first_mismatch, std::make_pair(1, 1));
}

TEST(Genfun, RandomParametersOrder8) {
  std::mt19937_64 rng(gen::kSeed + 11);
  for (int trial = 0; trial < 5; ++trial) {
    const LorentzParams p{gen::nonzero_rational(rng), gen::nonzero_rational(rng)};
    EXPECT_TRUE(genfun_check(p, 8).pass) << p.g << " " << p.a;
  }
}

TEST(Phi, Examples) {
  EXPECT_EQ(phi_invariant(params("1/10", "1")), Rational(10));
  EXPECT_EQ(phi_invariant(params("1/10", "1/2")), Rational(397, 20));
  EXPECT_THROW((void)phi_invariant(params("0", "1")), std::domain_error);
  EXPECT_THROW((void)phi_invariant(params("1/2", "0")), std::domain_error);
}

TEST(Conjugate, Examples) {
  const auto same = conjugate_parameter(params("1/10", "1/2"), Rational(1, 2));
  ASSERT_TRUE(same.g_exact.has_value());
  EXPECT_EQ(*same.g_exact, Rational(1, 10));

  const auto linear = conjugate_parameter(params("1/10", "1"), Rational(1));
  ASSERT_TRUE(linear.g_exact.has_value());
  EXPECT_EQ(*linear.g_exact, Rational(1, 10));

  const auto c = conjugate_parameter(params("1/10", "1/2"), Rational(2, 3));
  EXPECT_TRUE(c.numeric);
  EXPECT_FALSE(c.g_exact.has_value());
  EXPECT_LT(c.phi_mismatch, HighFloat("1e-90"));
  // Quadratic formula oracle in double precision: (5/9) g^2 + (397/30) g - 1 = 0.
  const double A = 5.0 / 9.0, B = 397.0 / 30.0;
  const double root = (-B + std::sqrt(B * B + 4 * A)) / (2 * A);
  EXPECT_NEAR(c.g.midpoint().convert_to<double>(), root, 1e-14);
  EXPECT_LE(c.g.lower, c.g.upper);
}

TEST(Conjugate, NoRoot) {
  EXPECT_THROW((void)conjugate_parameter(params("1/10", "1"), Rational(0)), std::domain_error);
  // phi(1,1) = 1; at a' = 10 the quadratic -99 g^2 + 10 g - 1 has negative discriminant.
  EXPECT_THROW((void)conjugate_parameter(params("1", "1"), Rational(10)), std::domain_error);
}

TEST(Commutation, SelfCommutes) {
  const auto p = TransferParams::from_exact(params("1/10", "1/2"));
  const auto r = commutation_residual(p, p, 20, 10);
  EXPECT_TRUE(r.exact_arithmetic);
  EXPECT_EQ(r.residual, 0);
  EXPECT_TRUE(r.pass);
}

TEST(Commutation, ConjugatePairPasses) {
  const auto p1 = params("1/10", "1/2");
  const auto c = conjugate_parameter(p1, Rational(2, 3));
  const auto r = commutation_residual(TransferParams::from_exact(p1), c.params(), 40, 10);
  EXPECT_FALSE(r.exact_arithmetic);
  EXPECT_TRUE(r.pass);
  EXPECT_LT(r.residual, HighFloat("1e-10"));
}

TEST(Commutation, NonConjugateFails) {
  const auto p1 = TransferParams::from_exact(params("1/10", "1/2"));
  const auto p2 = TransferParams::from_exact(params("1/10", "2/3"));
  const auto r = commutation_residual(p1, p2, 40, 10);
  EXPECT_TRUE(r.exact_arithmetic);
  EXPECT_FALSE(r.pass);
  EXPECT_GT(r.residual, 1000 * (r.tail_bound + r.tolerance));
}

TEST(Commutation, RationalConjugatePair) {
  // phi(1/5, 1/3) = 217/15 and a' = 1 gives the linear root g' = 15/217.
  const auto p1 = params("1/5", "1/3");
  const auto c = conjugate_parameter(p1, Rational(1));
  ASSERT_TRUE(c.g_exact.has_value());
  EXPECT_EQ(*c.g_exact, Rational(15, 217));
  const auto r = commutation_residual(TransferParams::from_exact(p1), c.params(), 30, 10);
  EXPECT_TRUE(r.exact_arithmetic);
  EXPECT_TRUE(r.pass);
  EXPECT_LT(r.residual, HighFloat("1e-10"));
}

TEST(Commutation, Preconditions) {
  const auto p = TransferParams::from_exact(params("1", "2"));
  EXPECT_THROW((void)commutation_residual(p, p, 10, 5), std::domain_error);
  const auto ok = TransferParams::from_exact(params("1/10", "1/2"));
  EXPECT_THROW((void)commutation_residual(ok, ok, 10, 6), std::invalid_argument);
}
