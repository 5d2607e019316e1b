#include <gtest/gtest.h>

#include "generators.hpp"
#include "intcomb/mpoly.hpp"
#include "intcomb/ratfunc.hpp"
#include "intcomb/rational.hpp"
#include "intcomb/series.hpp"
#include "intcomb/symmetric.hpp"

using namespace intcomb;
using Series = TruncatedSeries<Rational>;
using P = LaurentMPoly<Rational>;

namespace {

Series poly_series(std::vector<long> c, int order) {
  std::vector<Rational> r;
  for (long v : c) r.emplace_back(v);
  return Series::from_coefficients("g", 0, r, order);
}

P var(int n, int i) { return P::variable(n, i); }

}  // namespace

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(Rational::parse("5/7"), Rational(5, 7));
  EXPECT_EQ(Rational::parse("-6/4").to_string(), "-3/2");
  EXPECT_EQ(Rational(4, 9).sqrt(), Rational(2, 3));
  EXPECT_FALSE(Rational(2).is_square());
  EXPECT_THROW(Rational::parse("1/0"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("x"), std::invalid_argument);
}

TEST(Rational, RingAxiomsRandom) {
  std::mt19937_64 rng(gen::kSeed);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = gen::rational(rng), b = gen::rational(rng), c = gen::rational(rng);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    if (!b.is_zero()) EXPECT_EQ((a / b) * b, a);
  }
}

TEST(RationalFunction, CanonicalForm) {
  const auto q = RationalFunction::q();
  const RationalFunction a = (q * q - RationalFunction(1)) / (q - RationalFunction(1));
  EXPECT_EQ(a, q + RationalFunction(1));
  EXPECT_EQ(a.to_string(), (q + RationalFunction(1)).to_string());
  // Content and sign are normalised into the numerator.
  const RationalFunction b = (q.pow(1) * RationalFunction(2)) / (RationalFunction(-4) * q * q);
  EXPECT_EQ(b, RationalFunction(Rational(-1, 2)) / q);
  EXPECT_TRUE(b.is_laurent());
  EXPECT_EQ(RationalFunction(Rational(3, 4)).kind(), ScalarKind::Rational);
  EXPECT_EQ((q / (q + RationalFunction(1))).kind(), ScalarKind::UnivariateQ);
  EXPECT_EQ((q * RationalFunction::t()).kind(), ScalarKind::BivariateQT);
}

TEST(RationalFunction, RingAxiomsRandom) {
  std::mt19937_64 rng(gen::kSeed + 1);
  for (int trial = 0; trial < 60; ++trial) {
    const auto a = gen::ratfunc(rng), b = gen::ratfunc(rng), c = gen::ratfunc(rng);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, RationalFunction(0));
    if (!b.is_zero()) EXPECT_EQ((a / b) * b, a);
  }
}

TEST(RationalFunction, SubstituteAndInvert) {
  const auto q = RationalFunction::q(), t = RationalFunction::t();
  const RationalFunction f = (q - t) / (RationalFunction(1) - q * t);
  EXPECT_EQ(f.substitute(t, q), RationalFunction(-1) * f);
  EXPECT_EQ(f.invert_parameters(), (RationalFunction(1) / q - RationalFunction(1) / t) /
                                       (RationalFunction(1) - RationalFunction(1) / (q * t)));
  EXPECT_EQ(f.substitute(q, q), RationalFunction(0));
  EXPECT_EQ((t.pow(3) / q).t_degree(), 3);
  EXPECT_EQ((q / (t * t + RationalFunction(1))).t_degree(), -2);
}

TEST(Series, ArithmeticExamples) {
  const auto one = poly_series({1}, 3);
  EXPECT_EQ((one / poly_series({1, -1}, 3)).to_string(), poly_series({1, 1, 1, 1}, 3).to_string());
  EXPECT_TRUE((poly_series({1, 1}, 2) * poly_series({1, -1}, 2)).equal_through(poly_series({1, 0, -1}, 2), 2));
  EXPECT_TRUE((poly_series({1, -12}, 1) / poly_series({1}, 1)).equal_through(poly_series({1, -12}, 1), 1));
  EXPECT_THROW((void)(one / Series("g", 3)), std::domain_error);
}

TEST(Series, LaurentDivision) {
  // 1/(g(1-g)) = g^-1 + 1 + g + ...
  const auto d = Series::monomial("g", Rational(1), 1, 4) - Series::monomial("g", Rational(1), 2, 4);
  const auto r = poly_series({1}, 4) / d;
  EXPECT_EQ(r.valuation(), -1);
  EXPECT_EQ(r.order(), 2);
  for (int k = -1; k <= 2; ++k) EXPECT_EQ(r.coefficient(k), Rational(1));
}

TEST(Series, SqrtExamples) {
  const auto s = poly_series({1, -2}, 2).sqrt();
  EXPECT_EQ(s.coefficient(0), Rational(1));
  EXPECT_EQ(s.coefficient(1), Rational(-1));
  EXPECT_EQ(s.coefficient(2), Rational(-1, 2));
  EXPECT_TRUE(poly_series({1}, 5).sqrt().equal_through(poly_series({1}, 5), 5));
  const auto r = poly_series({1, -12}, 3).sqrt();
  EXPECT_TRUE((r * r).equal_through(poly_series({1, -12}, 3), 3));
  EXPECT_TRUE(r.equal_through(poly_series({1, -6, -18, -108}, 3), 3));
  EXPECT_THROW((void)poly_series({2, 1}, 3).sqrt(), std::domain_error);
}

TEST(Series, SqrtSquaresBackRandom) {
  std::mt19937_64 rng(gen::kSeed + 2);
  for (int trial = 0; trial < 40; ++trial) {
    const int order = static_cast<int>(gen::int_in(rng, 1, 12));
    const auto a = gen::unit_series(rng, order);
    const auto s = a.sqrt();
    EXPECT_FALSE((s * s).first_difference(a).has_value());
  }
}

TEST(Series, CanonicalText) {
  EXPECT_EQ(poly_series({1, -6}, 2).to_string(), "(1)*g^0 + (-6)*g^1 + O(g^3)");
}

TEST(MPoly, ExactDivisionExamples) {
  const P x1 = var(2, 0), x2 = var(2, 1);
  EXPECT_EQ((x1 * x1 - x2 * x2).divide_exact(x1 - x2), x1 + x2);
  const P p = x1 * x1 * x2 + P::constant(2, Rational(3));
  EXPECT_EQ(p.divide_exact(P::constant(2, Rational(1))), p);
  EXPECT_THROW((void)(x1 * x1 + x2).divide_exact(x1 - x2), InexactDivision);
  // Bialternant for lambda = (1), N = 2: det(x_i^{lambda_j + N - j}) = x1^2 x2^0 - x2^2 x1^0.
  EXPECT_EQ((x1 * x1 - x2 * x2).divide_exact(vandermonde<Rational>(2)), x1 + x2);
}

TEST(MPoly, LaurentDivision) {
  const P x = var(2, 0), y = var(2, 1);
  const P xi = P::monomial(2, std::vector<int>{-1, 0}, Rational(1));
  EXPECT_EQ((xi * (x - y) * (x + y)).divide_exact(x - y), xi * (x + y));
}

TEST(MPoly, DivisionRoundTripRandom) {
  std::mt19937_64 rng(gen::kSeed + 3);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = static_cast<int>(gen::int_in(rng, 1, 3));
    const P a = gen::mpoly<Rational>(rng, n, 4, -2, 3);
    P b(n);
    while (b.is_zero()) b = gen::mpoly<Rational>(rng, n, 3, -1, 2);
    EXPECT_EQ((a * b).divide_exact(b), a);
  }
}

TEST(MPoly, CanonicalOrderIsGrlex) {
  const P x1 = var(2, 0), x2 = var(2, 1);
  const P p = x2 + x1 * x1 + x1;
  EXPECT_EQ(p.to_string(), "(1)*x^[2,0] + (1)*x^[1,0] + (1)*x^[0,1]");
  EXPECT_EQ(p.leading_term().first, P::make_exponent({2, 0}));
}

TEST(Schur, Examples) {
  const P x1 = var(2, 0), x2 = var(2, 1);
  EXPECT_EQ(schur_polynomial<Rational>({1}, 2), x1 + x2);
  EXPECT_EQ(schur_polynomial<Rational>({}, 3), P::constant(3, Rational(1)));
  EXPECT_EQ(schur_polynomial<Rational>({2, 1}, 2), x1 * x1 * x2 + x1 * x2 * x2);
  EXPECT_THROW((void)schur_polynomial<Rational>({1, 1, 1}, 2), std::invalid_argument);
}

TEST(Schur, ExpandExamples) {
  const P x1 = var(2, 0), x2 = var(2, 1);
  const auto e = schur_expand(schur_polynomial<Rational>({2, 1}, 2));
  ASSERT_EQ(e.size(), 1u);
  EXPECT_EQ(e[0].first, (Partition{2, 1}));
  EXPECT_EQ(e[0].second, Rational(1));
  const auto sq = schur_expand((x1 + x2) * (x1 + x2));
  ASSERT_EQ(sq.size(), 2u);
  EXPECT_EQ(sq[0].first, (Partition{2}));
  EXPECT_EQ(sq[1].first, (Partition{1, 1}));
  EXPECT_EQ(sq[0].second, Rational(1));
  EXPECT_EQ(sq[1].second, Rational(1));
  EXPECT_TRUE(schur_expand(P(3)).empty());
  EXPECT_THROW((void)schur_expand(x1), std::invalid_argument);
}

TEST(Schur, ExpandIsIdempotent) {
  for (int n = 1; n <= 4; ++n) {
    for (int d = 0; d <= 5; ++d) {
      for (const auto& lambda : partitions_of(d, n)) {
        const auto s = schur_polynomial<Rational>(lambda, n);
        EXPECT_TRUE(s.is_symmetric());
        EXPECT_EQ(s.degree(), d);
        const auto e = schur_expand(s);
        ASSERT_EQ(e.size(), 1u) << partition_to_string(lambda);
        EXPECT_EQ(e[0].first, lambda);
        EXPECT_EQ(e[0].second, Rational(1));
      }
    }
  }
}

TEST(Schur, JacobiTrudiOracle) {
  // s_(2,1) = h_2 h_1 - h_3 in three variables, with h_k built from monomials.
  auto h = [](int k) {
    P s(3);
    for (const auto& mu : partitions_of(k, 3)) s += monomial_symmetric<Rational>(mu, 3);
    return s;
  };
  EXPECT_EQ(schur_polynomial<Rational>({2, 1}, 3), h(2) * h(1) - h(3));
}

TEST(Partitions, Enumeration) {
  EXPECT_EQ(partitions_of(4, 4).size(), 5u);
  EXPECT_EQ(partitions_of(4, 2).size(), 3u);
  EXPECT_EQ(partitions_of(0, 3).size(), 1u);
  EXPECT_TRUE(dominated_by({2, 1, 1}, {2, 2}));
  EXPECT_FALSE(dominated_by({3}, {2, 1}));
  EXPECT_EQ(rectangle(2, 3), (Partition{2, 2, 2}));
}
