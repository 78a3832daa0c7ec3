#include <gtest/gtest.h>

#include <map>
#include <set>

#include "dspecht/combinat.hpp"
#include "support.hpp"

using namespace dspecht::comb;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

// Independent count of partitions of n: p(n, k) with parts ≤ k.
long partition_count(int n, int k) {
  if (n == 0) return 1;
  if (n < 0 || k == 0) return 0;
  return partition_count(n - k, k) + partition_count(n, k - 1);
}

long bipartition_count(int n) {
  long total = 0;
  for (int k = 0; k <= n; ++k) total += partition_count(k, k) * partition_count(n - k, n - k);
  return total;
}

// |𝒟_n| = (|ℬ_n| - e)/2 + 2e with e = #{λ ⊢ n/2}: unordered pairs, two signed nodes per λ.
long dipartition_count(int n) {
  const long equal = n % 2 == 0 ? partition_count(n / 2, n / 2) : 0;
  return (bipartition_count(n) - equal) / 2 + 2 * equal;
}

// Brute-force dominance via all prefix sums (independent of the library).
bool dominated(const Partition& a, const Partition& b) {
  int sa = 0, sb = 0;
  for (std::size_t i = 0; i < std::max(a.len(), b.len()); ++i) {
    sa += a[i];
    sb += b[i];
    if (sa > sb) return false;
  }
  return true;
}

}  // namespace

TEST(Partition, ValidatesAndPrints) {
  EXPECT_EQ(P({3, 2, 0}).to_string(), "(3,2)");
  EXPECT_EQ(Partition().to_string(), "()");
  EXPECT_THROW(P({1, 2}), std::invalid_argument);
  EXPECT_THROW(P({2, -1}), std::invalid_argument);
  EXPECT_EQ(P({3, 1}).conjugate(), P({2, 1, 1}));
  EXPECT_EQ(P({2, 2}).column_pair_count(), 2);
}

TEST(Partition, Parsing) {
  EXPECT_EQ(parse_partition(" ( 3 , 1 ) "), P({3, 1}));
  EXPECT_EQ(parse_partition("()"), Partition());
  EXPECT_EQ(parse_bipartition("((2,2,2)|(2,1))"), (Bipartition{P({2, 2, 2}), P({2, 1})}));
  EXPECT_EQ(parse_dipartition("(2)|(1,1)"), parse_dipartition("(1,1)|(2)"));
  EXPECT_TRUE(parse_dipartition("(1,1)|-").is_signed());
  EXPECT_THROW(parse_dipartition("(1)|(1)"), std::invalid_argument);
  EXPECT_THROW(parse_partition("(1,2)"), std::invalid_argument);
  EXPECT_THROW(parse_partition("(1"), std::invalid_argument);
}

TEST(Enumeration, Counts) {
  for (int n = 1; n <= 10; ++n) {
    EXPECT_EQ(static_cast<long>(partitions(n).size()), partition_count(n, n)) << n;
    EXPECT_EQ(static_cast<long>(bipartitions(n).size()), bipartition_count(n)) << n;
    EXPECT_EQ(static_cast<long>(dipartitions(n).size()), dipartition_count(n)) << n;
  }
  EXPECT_EQ(dipartitions(4).size(), 13u);
  EXPECT_EQ(dipartitions(5).size(), 18u);
  EXPECT_THROW(dipartitions(0), std::invalid_argument);
}

TEST(Enumeration, PartitionsReverseLex) {
  const auto ps = partitions(4);
  ASSERT_EQ(ps.size(), 5u);
  EXPECT_EQ(ps.front(), P({4}));
  EXPECT_EQ(ps.back(), P({1, 1, 1, 1}));
  for (std::size_t i = 1; i < ps.size(); ++i) EXPECT_GT(ps[i - 1], ps[i]);
}

TEST(Orders, DominanceMatchesPrefixSums) {
  for (int n = 1; n <= 8; ++n) {
    for (const auto& a : partitions(n)) {
      for (const auto& b : partitions(n)) EXPECT_EQ(dominance_leq(a, b), dominated(a, b));
    }
  }
}

TEST(Orders, BidominanceExamples) {
  EXPECT_TRUE(bidominance_leq({P({1, 1}), P({})}, {P({2}), P({})}));
  EXPECT_TRUE(bidominance_leq({P({}), P({2})}, {P({2}), P({})}));
  EXPECT_FALSE(bidominance_leq({P({2}), P({})}, {P({}), P({2})}));
}

TEST(Orders, DidominanceOnSigned) {
  const auto plus = Dipartition::with_sign(P({1, 1}), 1);
  const auto minus = Dipartition::with_sign(P({1, 1}), -1);
  EXPECT_TRUE(didominance_leq(plus, plus));
  EXPECT_FALSE(didominance_leq(plus, minus));
  EXPECT_FALSE(didominance_leq(minus, plus));
  EXPECT_TRUE(didominance_leq(Dipartition::pair(P({1}), P({1, 1, 1})), plus));
}

TEST(Orders, Fusion) {
  EXPECT_EQ(fusion(P({2, 1}), P({3, 1})), P({3, 2, 1, 1}));
  EXPECT_EQ(row_sum(P({2, 1}), P({3, 1, 1})), P({5, 2, 1}));
}

TEST(Covers, SignedCoversExamples) {
  const auto covers = signed_covers(P({2, 1}));
  std::set<std::string> got;
  for (const auto& d : covers) got.insert(d.to_string());
  EXPECT_EQ(got, (std::set<std::string>{"(1,1)|(2,2)", "(2)|(2,1,1)"}));
  ASSERT_EQ(signed_covers(P({1, 1})).size(), 1u);
  EXPECT_EQ(signed_covers(P({1, 1})).front().to_string(), "(1)|(1,1,1)");
}

TEST(Covers, DominanceLowerCovers) {
  const auto covers = dominance_lower_covers(P({4}));
  ASSERT_EQ(covers.size(), 1u);
  EXPECT_EQ(covers.front(), P({3, 1}));
  EXPECT_EQ(dominance_lower_covers(P({1, 1, 1})).size(), 0u);
}

TEST(Hasse, SmallPosets) {
  const auto s1 = poset("S", 1);
  EXPECT_EQ(s1.nodes.size(), 1u);
  EXPECT_TRUE(s1.edges.empty());
  // Dominance on partitions of 6 is not a chain: (4,1,1) and (3,3) are incomparable.
  EXPECT_FALSE(dominance_leq(P({4, 1, 1}), P({3, 3})));
  EXPECT_FALSE(dominance_leq(P({3, 3}), P({4, 1, 1})));
  EXPECT_THROW(poset("E", 3), std::invalid_argument);
}

TEST(Hasse, DotExport) {
  const auto dot = to_dot(poset("D", 2), "D2");
  EXPECT_NE(dot.find("digraph"), std::string::npos);
  EXPECT_NE(dot.find("rankdir=BT"), std::string::npos);
  EXPECT_NE(dot.find("(1)|+"), std::string::npos);
}

namespace {

void expect_matches_drawing(int n, const testsupport::Drawing& ref) {
  const auto p = poset("D", n);
  ASSERT_EQ(p.nodes.size(), ref.nodes.size());
  ASSERT_EQ(p.edges.size(), ref.edges.size());
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < p.nodes.size(); ++i) index[p.nodes[i]] = i;
  std::set<std::pair<std::string, std::string>> ours, theirs;
  for (const auto& [lo, hi] : p.edges) ours.emplace(p.nodes[lo], p.nodes[hi]);
  for (const auto& label : ref.nodes) EXPECT_TRUE(index.count(label)) << label;
  for (const auto& [lo, hi] : ref.edges) theirs.emplace(ref.nodes[lo - 1], ref.nodes[hi - 1]);
  EXPECT_EQ(ours, theirs);
}

}  // namespace

TEST(Hasse, D4EdgeForEdge) { expect_matches_drawing(4, testsupport::hasse_d4()); }
TEST(Hasse, D5EdgeForEdge) { expect_matches_drawing(5, testsupport::hasse_d5()); }

// ------------------------------------------------------------- properties

TEST(Properties, PosetAxioms) {
  for (int n = 1; n <= 6; ++n) {
    const auto ds = dipartitions(n);
    for (const auto& a : ds) {
      EXPECT_TRUE(didominance_leq(a, a));
      for (const auto& b : ds) {
        if (!(a == b)) EXPECT_FALSE(didominance_leq(a, b) && didominance_leq(b, a)) << a.to_string();
        for (const auto& c : ds) {
          if (didominance_leq(a, b) && didominance_leq(b, c)) EXPECT_TRUE(didominance_leq(a, c));
        }
      }
    }
  }
}

TEST(Properties, UniqueMinimum) {
  for (int n = 1; n <= 7; ++n) {
    const auto ds = dipartitions(n);
    const auto bottom = Dipartition::pair(Partition(), Partition(std::vector<int>(n, 1)));
    int minima = 0;
    for (const auto& a : ds) {
      bool below_all = true;
      for (const auto& b : ds) below_all = below_all && didominance_leq(a, b);
      if (below_all) {
        ++minima;
        EXPECT_EQ(a, bottom);
      }
    }
    EXPECT_EQ(minima, 1) << n;
  }
}

TEST(Properties, SignedCoversAreTheTransitiveReduction) {
  for (int n = 2; n <= 8; n += 2) {
    const auto ds = dipartitions(n);
    // Naive reduction: a ⋖ top iff a < top with nothing strictly between.
    for (const auto& top : ds) {
      if (!top.is_signed()) continue;
      std::set<std::string> naive;
      for (const auto& a : ds) {
        if (a == top || !didominance_leq(a, top)) continue;
        bool between = false;
        for (const auto& c : ds) {
          if (c == a || c == top) continue;
          if (didominance_leq(a, c) && didominance_leq(c, top)) between = true;
        }
        if (!between) naive.insert(a.to_string());
      }
      std::set<std::string> predicted;
      for (const auto& d : signed_covers(top.first())) predicted.insert(d.to_string());
      EXPECT_EQ(naive, predicted) << top.to_string();
    }
  }
}

TEST(Properties, RowSumImplication) {
  // A ⊴_D B implies θ+ω ⊴ θ'+ω' for the row-wise sums (2λ for a signed node).
  for (int n = 1; n <= 8; ++n) {
    const auto ds = dipartitions(n);
    for (const auto& a : ds) {
      for (const auto& b : ds) {
        if (!didominance_leq(a, b)) continue;
        EXPECT_TRUE(dominance_leq(row_sum(a.first(), a.second()), row_sum(b.first(), b.second())))
            << a.to_string() << " " << b.to_string();
      }
    }
    if (n % 2 == 0) {
      for (const auto& lam : partitions(n / 2)) EXPECT_TRUE(fusion_cover_check(lam)) << lam.to_string();
    }
  }
}

TEST(Properties, SortedConcatenationFailsTheImplication) {
  // Why the row-sum reading is used: {∅,(2,2)} ⊴_D {(1),(2,1)} yet (2,2) ⋬ (2,1,1).
  const auto a = Dipartition::pair(Partition(), P({2, 2}));
  const auto b = Dipartition::pair(P({1}), P({2, 1}));
  EXPECT_TRUE(didominance_leq(a, b));
  EXPECT_FALSE(dominance_leq(fusion(a.first(), a.second()), fusion(b.first(), b.second())));
  EXPECT_TRUE(dominance_leq(row_sum(a.first(), a.second()), row_sum(b.first(), b.second())));
}
