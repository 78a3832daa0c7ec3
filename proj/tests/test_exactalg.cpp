#include <gtest/gtest.h>

#include "dspecht/poly_io.hpp"
#include "dspecht/polynomial.hpp"
#include "support.hpp"

using namespace dspecht::alg;
using testsupport::random_point;
using testsupport::random_polynomial;

TEST(Rational, ParsesCanonically) {
  EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
  EXPECT_EQ(parse_rational("-2"), Rational(-2));
  EXPECT_EQ(to_string(parse_rational("-6/4")), "-3/2");
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
}

TEST(Monomial, GradedLexOrder) {
  const Monomial a({2, 0}), b({0, 3}), c({1, 1});
  EXPECT_LT(a, b);  // degree first
  EXPECT_GT(a, c);  // then lexicographic
  EXPECT_EQ(monomials_of_degree(2, 2).front(), a);
  EXPECT_EQ(monomials_of_degree(3, 4).size(), 15u);
}

TEST(Polynomial, ZeroHasDegreeMinusOne) {
  EXPECT_EQ(Polynomial(3).degree(), -1);
  EXPECT_TRUE(Polynomial(3).is_zero());
  EXPECT_EQ(Polynomial(3, 5).degree(), 0);
}

TEST(Polynomial, DifferenceOfSquares) {
  const auto x = Polynomial::variable(2, 0), y = Polynomial::variable(2, 1);
  EXPECT_EQ((x - y) * (x + y), x * x - y * y);
  EXPECT_EQ(to_string((x - y) * (x + y)), "x1^2 - x2^2");
}

TEST(Polynomial, RejectsMixedAmbientRings) {
  EXPECT_THROW(Polynomial::variable(2, 0) + Polynomial::variable(3, 0), std::invalid_argument);
}

TEST(Polynomial, HomogeneousComponents) {
  const auto f = parse_polynomial("x1^2 + x2 + 3", 2);
  const auto parts = f.homogeneous_components();
  ASSERT_EQ(parts.size(), 3u);
  EXPECT_EQ(parts.at(2), parse_polynomial("x1^2", 2));
  EXPECT_FALSE(f.is_homogeneous());
}

TEST(Division, ExactAndInexact) {
  const auto f = parse_polynomial("x1^3 - x2^3", 2);
  const auto g = parse_polynomial("x1 - x2", 2);
  auto q = divides(g, f);
  ASSERT_TRUE(q.has_value());
  EXPECT_EQ(*q * g, f);
  EXPECT_FALSE(divides(parse_polynomial("x1 + x2", 2), f).has_value());
  EXPECT_THROW(divides(Polynomial(2), f), std::domain_error);
}

TEST(Univariate, Squarefree) {
  EXPECT_TRUE(univariate_squarefree(parse_polynomial("x1^3 - x1", 1)));
  EXPECT_FALSE(univariate_squarefree(parse_polynomial("x1^3 - 2*x1^2 + x1", 1)));
  EXPECT_TRUE(univariate_squarefree(parse_polynomial("x2^2 - 3", 3)));
  EXPECT_THROW(univariate_squarefree(parse_polynomial("x1*x2", 2)), std::invalid_argument);
  EXPECT_THROW(univariate_squarefree(Polynomial(1)), std::domain_error);
}

TEST(Univariate, Gcd) {
  // (x-1)(x-2) and (x-1)(x+3)
  const auto g = univariate_gcd({2, -3, 1}, {-3, 2, 1});
  ASSERT_EQ(g.size(), 2u);
  EXPECT_EQ(g[0], -1);
  EXPECT_EQ(g[1], 1);
}

TEST(Parser, ReportsPosition) {
  try {
    parse_polynomial("x1 + * x2");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 5u);
  }
  EXPECT_THROW(parse_polynomial("x0"), ParseError);
  EXPECT_THROW(parse_polynomial("x5", 3), ParseError);
  EXPECT_THROW(parse_polynomial("(x1 + 1"), ParseError);
}

TEST(Parser, Grammar) {
  EXPECT_EQ(parse_polynomial("2*x1^2 - 1/3*x1*x2", 2).coefficient(Monomial({1, 1})), Rational(-1, 3));
  EXPECT_EQ(parse_polynomial("(x1 + x2)^2", 2), parse_polynomial("x1^2 + 2*x1*x2 + x2^2", 2));
  EXPECT_TRUE(parse_polynomial("0", 3).is_zero());
}

// ------------------------------------------------------------- properties

TEST(Properties, RingAxioms) {
  std::mt19937_64 rng(testsupport::seed());
  for (int trial = 0; trial < 60; ++trial) {
    const auto f = random_polynomial(rng, 3), g = random_polynomial(rng, 3), h = random_polynomial(rng, 3);
    EXPECT_EQ(f + g, g + f);
    EXPECT_EQ((f + g) + h, f + (g + h));
    EXPECT_EQ(f * g, g * f);
    EXPECT_EQ((f * g) * h, f * (g * h));
    EXPECT_EQ(f * (g + h), f * g + f * h);
    EXPECT_TRUE((f - f).is_zero());
    EXPECT_EQ(f * Polynomial(3, 1), f);
  }
}

TEST(Properties, EvaluationIsAHomomorphism) {
  std::mt19937_64 rng(testsupport::seed() + 1);
  for (int trial = 0; trial < 60; ++trial) {
    const auto f = random_polynomial(rng, 4), g = random_polynomial(rng, 4);
    const auto p = random_point(rng, 4);
    EXPECT_EQ((f + g).eval(p), f.eval(p) + g.eval(p));
    EXPECT_EQ((f * g).eval(p), f.eval(p) * g.eval(p));
    std::vector<Rational> sq;
    for (const auto& x : p) sq.push_back(x * x);
    EXPECT_EQ(f.substitute_squares().eval(p), f.eval(sq));
  }
}

TEST(Properties, DivisionIdentity) {
  std::mt19937_64 rng(testsupport::seed() + 2);
  for (int trial = 0; trial < 40; ++trial) {
    const auto f = random_polynomial(rng, 3), g = random_polynomial(rng, 3, 3, 2);
    if (g.is_zero()) continue;
    const auto d = divide(f, g);
    EXPECT_EQ(d.quotient * g + d.remainder, f);
    auto q = divides(g, f * g);
    ASSERT_TRUE(q.has_value());
    EXPECT_EQ(*q, f);
  }
}

TEST(Properties, ParsePrintRoundTrip) {
  std::mt19937_64 rng(testsupport::seed() + 3);
  for (int trial = 0; trial < 100; ++trial) {
    const auto f = random_polynomial(rng, 4);
    const std::string text = to_string(f);
    const auto g = parse_polynomial(text, 4);
    EXPECT_EQ(g, f) << text;
    EXPECT_EQ(to_string(g), text);
  }
}

TEST(Properties, DerivativeLeibniz) {
  std::mt19937_64 rng(testsupport::seed() + 4);
  for (int trial = 0; trial < 40; ++trial) {
    const auto f = random_polynomial(rng, 2), g = random_polynomial(rng, 2);
    EXPECT_EQ((f * g).derivative(0), f.derivative(0) * g + f * g.derivative(0));
  }
}
