#include <gtest/gtest.h>

#include "dspecht/dihedral.hpp"
#include "dspecht/poly_io.hpp"

using namespace dspecht;
using namespace dspecht::dihedral;
using alg::parse_polynomial;

TEST(Powers, SmallCases) {
  EXPECT_EQ(re_power(0), alg::Polynomial(2, 1));
  EXPECT_TRUE(im_power(0).is_zero());
  EXPECT_EQ(re_power(1), parse_polynomial("x1", 2));
  EXPECT_EQ(im_power(1), parse_polynomial("x2", 2));
  EXPECT_EQ(re_power(2), parse_polynomial("x1^2 - x2^2", 2));
  EXPECT_EQ(im_power(2), parse_polynomial("2*x1*x2", 2));
  EXPECT_EQ(im_power(3), parse_polynomial("x2*(3*x1^2 - x2^2)", 2));
}

TEST(Invariants, Fundamental) {
  const auto [psi1, psi2] = fundamental_invariants(5);
  EXPECT_EQ(psi1, parse_polynomial("x1^2 + x2^2", 2));
  EXPECT_EQ(psi2, re_power(5) * alg::Rational(2));
  EXPECT_THROW(fundamental_invariants(2), std::invalid_argument);
  for (unsigned n = 3; n <= 12; ++n) {
    EXPECT_TRUE(reflection_check(n)) << n;
    EXPECT_TRUE(rotation_sample_check(n, 1e-9, 7)) << n;
  }
}

TEST(Identities, RecurrenceDoublingModulus) {
  for (unsigned k = 1; k <= 10; ++k) {
    EXPECT_TRUE(recurrence_check(k)) << k;
    EXPECT_TRUE(modulus_check(k)) << k;
  }
  for (unsigned k = 1; k <= 8; ++k) EXPECT_TRUE(doubling_check(k)) << k;
}

TEST(Harmonics, RankIsTwiceN) {
  for (unsigned n = 3; n <= 10; ++n) EXPECT_EQ(harmonics_rank(n), 2 * n) << n;
}

TEST(Squarefree, BivariateForms) {
  EXPECT_TRUE(bivariate_form_squarefree(im_power(6)));
  EXPECT_TRUE(bivariate_form_squarefree(re_power(4)));
  EXPECT_FALSE(bivariate_form_squarefree(parse_polynomial("x2^2*x1", 2)));
  EXPECT_FALSE(bivariate_form_squarefree(parse_polynomial("(x1 - x2)^2", 2)));
  EXPECT_THROW(bivariate_form_squarefree(alg::Polynomial(2)), std::domain_error);
}

TEST(Chain, IdealsInOrder) {
  const auto ideals3 = specht_ideals(3);
  ASSERT_EQ(ideals3.size(), 3u);
  EXPECT_EQ(ideals3[0].name, "I_0");
  EXPECT_EQ(ideals3[2].name, "I_3");
  const auto ideals8 = specht_ideals(8);
  std::vector<std::string> names;
  for (const auto& d : ideals8) names.push_back(d.name);
  EXPECT_EQ(names, (std::vector<std::string>{"I_0", "I_1", "I_2", "I_3", "I_4^Re", "I_4^Im", "I_8"}));
}

TEST(Chain, ReportPasses) {
  for (unsigned n = 3; n <= 12; ++n) {
    const auto r = dihedral_report(n);
    EXPECT_TRUE(r.passed()) << n;
    EXPECT_EQ(r.has_pair, n % 2 == 0);
    for (const auto& l : r.links) {
      EXPECT_TRUE(l.contained) << n << " " << l.larger << " " << l.smaller;
      EXPECT_TRUE(l.strict) << n << " " << l.larger << " " << l.smaller;
    }
  }
}

TEST(Radical, Classification) {
  auto radical_names = [](unsigned n) {
    std::vector<std::string> yes, no;
    for (const auto& l : dihedral_radical_classification(n)) (l.radical ? yes : no).push_back(l.name);
    return std::make_pair(yes, no);
  };
  const auto [yes8, no8] = radical_names(8);
  EXPECT_EQ(yes8, (std::vector<std::string>{"I_0", "I_1", "I_4^Re", "I_4^Im", "I_8"}));
  EXPECT_EQ(no8, (std::vector<std::string>{"I_2", "I_3"}));
  const auto [yes3, no3] = radical_names(3);
  EXPECT_EQ(yes3.size(), 3u);
  EXPECT_TRUE(no3.empty());
}

TEST(Lines, Sampling) {
  for (unsigned n = 3; n <= 12; ++n) EXPECT_TRUE(hyperplane_sample_check(n, 1e-9)) << n;
  EXPECT_THROW(hyperplane_sample_check(2, 1e-9), std::invalid_argument);
}

TEST(Chain, MinimalDegreesIncrease) {
  // Every generator of I_k has degree ≥ k.
  for (unsigned n = 3; n <= 12; ++n) {
    int previous = -1;
    for (const auto& d : specht_ideals(n)) {
      int lowest = 1 << 20;
      for (const auto& g : d.ideal.generators) lowest = std::min(lowest, g.degree());
      EXPECT_GE(lowest, previous) << n << " " << d.name;
      previous = lowest;
    }
  }
}
