#include <gtest/gtest.h>

#include "dspecht/ideals.hpp"
#include "dspecht/poly_io.hpp"
#include "dspecht/specht.hpp"
#include "support.hpp"

using namespace dspecht;
using alg::parse_polynomial;
using alg::Polynomial;
using alg::Rational;
using comb::Bipartition;
using comb::Dipartition;
using comb::Partition;
using ideals::SparseRow;
using specht::Shape;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

specht::GeneratorSet ad_hoc(const std::string& key, std::size_t nvars, std::vector<std::string> gens) {
  specht::GeneratorSet gs;
  gs.nvars = nvars;
  gs.key = key;
  for (const auto& g : gens) gs.generators.push_back(parse_polynomial(g, nvars));
  return gs;
}

}  // namespace

TEST(Echelon, RankAndMembership) {
  ideals::Echelon e(true);
  EXPECT_TRUE(e.insert({{0, 1}, {1, 1}}, 0));
  EXPECT_TRUE(e.insert({{1, 1}, {2, 1}}, 1));
  EXPECT_FALSE(e.insert({{0, 1}, {2, -1}}, 2));  // first minus second
  EXPECT_EQ(e.rank(), 2u);
  EXPECT_TRUE(e.contains({{0, 2}, {1, 3}, {2, 1}}));
  EXPECT_FALSE(e.contains({{2, 1}}));
  auto combo = e.express({{0, 1}, {2, -1}});
  ASSERT_TRUE(combo.has_value());
  // v = row0 - row1
  ASSERT_EQ(combo->size(), 2u);
  EXPECT_EQ((*combo)[0], (std::pair<std::uint32_t, Rational>{0, 1}));
  EXPECT_EQ((*combo)[1], (std::pair<std::uint32_t, Rational>{1, -1}));
}

TEST(Echelon, ZassenhausIntersection) {
  // span{e0, e1} ∩ span{e1, e2} = span{e1}
  const std::vector<SparseRow> U{{{0, 1}}, {{1, 1}}}, W{{{1, 1}}, {{2, 1}}};
  const auto I = ideals::intersect(U, W, 3);
  ASSERT_EQ(I.size(), 1u);
  EXPECT_EQ(I.front(), (SparseRow{{1, 1}}));
  EXPECT_TRUE(ideals::intersect({{{0, 1}}}, {{{1, 1}}}, 2).empty());
}

TEST(Grading, NaturalGrading) {
  EXPECT_EQ(ideals::natural_grading({parse_polynomial("x1*x2 - x3*x4", 4)}, 4), ideals::Grading::ModOnes);
  EXPECT_EQ(ideals::natural_grading({parse_polynomial("x1^2 - x2^2", 2)}, 2), ideals::Grading::Full);
  // x1 and x2 differ by the all-ones parity vector when n = 2.
  EXPECT_EQ(ideals::natural_grading({parse_polynomial("x1 - x2", 2)}, 2), ideals::Grading::ModOnes);
  EXPECT_EQ(ideals::natural_grading({parse_polynomial("x1 - x2", 3)}, 3), ideals::Grading::Single);
}

TEST(Slices, KnownDimensions) {
  // (x1 - x2, x1 - x3): quadrics vanishing on the line x1 = x2 = x3.
  const auto gs = specht::generator_set(Shape::of(P({2, 1})));
  EXPECT_EQ(ideals::slice_rank(gs, 0), 0u);
  EXPECT_EQ(ideals::slice_rank(gs, 1), 2u);
  EXPECT_EQ(ideals::slice_rank(gs, 2), 5u);
  // The unit ideal fills every slice.
  const auto unit = specht::generator_set(Shape::of(P({3})));
  EXPECT_EQ(ideals::slice_rank(unit, 3), 10u);
}

TEST(Membership, Basics) {
  const auto gs = ad_hoc("test:xy", 2, {"x1*x2"});
  EXPECT_TRUE(ideals::contains(gs, parse_polynomial("x1^2*x2 - 3*x1*x2^5", 2)));
  EXPECT_FALSE(ideals::contains(gs, parse_polynomial("x1^2", 2)));
  EXPECT_TRUE(ideals::contains(gs, Polynomial(2)));
  // Non-homogeneous input is tested componentwise.
  EXPECT_FALSE(ideals::contains(gs, parse_polynomial("x1*x2 + 1", 2)));
}

TEST(Membership, WholeVariablesIdeal) {
  // {(3),(1)} at n = 4 is generated by the variables.
  const auto gs = specht::generator_set(Shape::of(Dipartition::pair(P({3}), P({1}))));
  for (int i = 1; i <= 4; ++i) {
    EXPECT_TRUE(ideals::contains(gs, parse_polynomial("x" + std::to_string(i), 4)));
  }
  EXPECT_FALSE(ideals::contains(gs, Polynomial(4, 1)));
}

TEST(Membership, DivisibilityExample) {
  const auto f = parse_polynomial("(x1^4-x2^4)*(x3^2-x4^2)*x3*x4 + (x1^2-x2^2)*(x3^4-x4^4)*x1*x2", 4);
  const auto g = parse_polynomial("(x1^2-x2^2)*(x3^2-x4^2)*(x1*x2+x3*x4)", 4);
  const auto plus = specht::generator_set(Shape::of(Dipartition::with_sign(P({1, 1}), 1)));
  EXPECT_FALSE(alg::divides(g, f).has_value());
  EXPECT_TRUE(ideals::contains(plus, f));
  auto cert = ideals::certify(plus, f);
  ASSERT_TRUE(cert.has_value());
  EXPECT_EQ(cert->evaluate(plus), f);
}

TEST(Inclusion, SChain) {
  const auto a = specht::generator_set(Shape::of(P({1, 1, 1})));
  const auto b = specht::generator_set(Shape::of(P({2, 1})));
  EXPECT_TRUE(ideals::ideal_leq(a, b));
  EXPECT_FALSE(ideals::ideal_leq(b, a));
}

TEST(Inclusion, IntersectionSlices) {
  const auto x = ad_hoc("test:x", 2, {"x1"});
  const auto y = ad_hoc("test:y", 2, {"x2"});
  const auto xy = ad_hoc("test:x1x2", 2, {"x1*x2"});
  const auto dims = ideals::intersection_dimensions({&x, &y}, 3);
  ASSERT_EQ(dims.size(), 4u);
  EXPECT_EQ(dims[1].dimension, 0u);
  EXPECT_EQ(dims[2].dimension, 1u);
  EXPECT_EQ(dims[3].dimension, 2u);
  EXPECT_TRUE(ideals::slice_equal({&x, &y}, {&xy}, 6));
  EXPECT_FALSE(ideals::slice_equal(x, xy, 2));
}

TEST(Cache, IsReused) {
  ideals::SliceCache cache;
  const auto gs = specht::generator_set(Shape::of(Bipartition{P({1}), P({1})}));
  ideals::slice_rank(gs, 3, cache);
  const auto filled = cache.size();
  EXPECT_GT(filled, 0u);
  ideals::slice_rank(gs, 3, cache);
  EXPECT_EQ(cache.size(), filled);
  cache.clear();
  EXPECT_EQ(cache.size(), 0u);
}

// ------------------------------------------------------------- properties

TEST(Properties, CertificatesAreSound) {
  std::mt19937_64 rng(testsupport::seed() + 20);
  const std::vector<Shape> shapes{Shape::of(Dipartition::with_sign(P({1, 1}), -1)),
                                  Shape::of(Dipartition::pair(P({1}), P({2, 1}))),
                                  Shape::of(Bipartition{P({2}), P({1, 1})}), Shape::of(P({2, 2}))};
  for (const auto& shape : shapes) {
    const auto gs = specht::generator_set(shape);
    std::uniform_int_distribution<std::size_t> pick(0, gs.generators.size() - 1);
    for (int trial = 0; trial < 5; ++trial) {
      // A random combination of monomial multiples of generators.
      Polynomial f(gs.nvars);
      for (int k = 0; k < 3; ++k) {
        auto m = testsupport::random_polynomial(rng, gs.nvars, 2, 1);
        f += m * gs.generators[pick(rng)];
      }
      auto cert = ideals::certify(gs, f);
      ASSERT_TRUE(cert.has_value()) << gs.key;
      EXPECT_EQ(cert->evaluate(gs), f) << gs.key;
    }
  }
}

TEST(Properties, NonMembersHaveNoCertificate) {
  const auto gs = specht::generator_set(Shape::of(P({2, 2})));
  // Degree-1 forms are never in an ideal generated in degree 2.
  EXPECT_FALSE(ideals::certify(gs, parse_polynomial("x1 + 2*x3", 4)).has_value());
}
