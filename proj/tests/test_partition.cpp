#include <gtest/gtest.h>

#include <set>

#include "cherpoi/partition.hpp"

using namespace cherpoi;

namespace {

// Independent count: partitions of n with parts at most k.
long count_partitions(int n, int k) {
  if (n == 0) return 1;
  if (k == 0) return 0;
  long total = 0;
  for (int p = std::min(n, k); p >= 1; --p) total += count_partitions(n - p, p);
  return total;
}

}  // namespace

TEST(Partition, EnumerationOrderSmall) {
  auto p3 = enumerate_partitions(3);
  ASSERT_EQ(p3.size(), 3u);
  EXPECT_EQ(p3[0], Partition({3}));
  EXPECT_EQ(p3[1], Partition({2, 1}));
  EXPECT_EQ(p3[2], Partition({1, 1, 1}));
  auto p1 = enumerate_partitions(1);
  ASSERT_EQ(p1.size(), 1u);
  EXPECT_EQ(p1[0], Partition({1}));
}

TEST(Partition, EnumerationCountsMatchRecursion) {
  for (int n = 1; n <= 12; ++n) {
    auto ps = enumerate_partitions(n);
    EXPECT_EQ(static_cast<long>(ps.size()), count_partitions(n, n)) << n;
    std::set<Partition> unique(ps.begin(), ps.end());
    EXPECT_EQ(unique.size(), ps.size());
    for (std::size_t i = 1; i < ps.size(); ++i) EXPECT_TRUE(ps[i] < ps[i - 1]);
  }
  EXPECT_EQ(enumerate_partitions(8).size(), 22u);
}

TEST(Partition, RejectsBadInput) {
  EXPECT_THROW(enumerate_partitions(0), InvalidInput);
  EXPECT_THROW(enumerate_partitions(-3), InvalidInput);
  EXPECT_THROW(Partition(std::vector<int>{}), InvalidInput);
  EXPECT_THROW(Partition({1, 2}), InvalidInput);
  EXPECT_THROW(Partition({2, 0}), InvalidInput);
}

TEST(Partition, CellData) {
  Partition mu{5, 5, 4, 3, 1};
  Cell c = mu.cell(1, 1);
  EXPECT_EQ(c.arm, 3);
  EXPECT_EQ(c.leg, 2);
  EXPECT_EQ(c.hook, 6);

  for (int n = 1; n <= 6; ++n) {
    Cell r = Partition::row(n).cell(0, 0);
    EXPECT_EQ(r.arm, n - 1);
    EXPECT_EQ(r.leg, 0);
    EXPECT_EQ(r.hook, n);
  }
  Cell h = Partition({2, 1}).cell(0, 0);
  EXPECT_EQ(h.arm, 1);
  EXPECT_EQ(h.leg, 1);
  EXPECT_EQ(h.hook, 3);

  EXPECT_THROW(mu.cell(0, 5), OutOfRange);
  EXPECT_THROW(mu.cell(5, 0), OutOfRange);
  EXPECT_THROW(mu.cell(4, 1), OutOfRange);
}

TEST(Partition, Transpose) {
  EXPECT_EQ(Partition({3}).transpose(), Partition({1, 1, 1}));
  EXPECT_EQ(Partition({2, 1}).transpose(), Partition({2, 1}));
  EXPECT_EQ(Partition({5, 5, 4, 3, 1}).transpose(), Partition({5, 4, 4, 3, 2}));
  for (int n = 1; n <= 10; ++n)
    for (const auto& mu : enumerate_partitions(n)) {
      EXPECT_EQ(mu.transpose().transpose(), mu);
      EXPECT_EQ(mu.transpose().size(), mu.size());
    }
}

TEST(Partition, Nstat) {
  for (int n = 1; n <= 8; ++n) {
    EXPECT_EQ(Partition::row(n).nstat(), 0);
    EXPECT_EQ(Partition::column(n).nstat(), n * (n - 1) / 2);
  }
  EXPECT_EQ(Partition({2, 1}).nstat(), 1);
}

TEST(Partition, CellGeometryInvariants) {
  for (int n = 1; n <= 10; ++n)
    for (const auto& mu : enumerate_partitions(n)) {
      auto cells = mu.cells();
      EXPECT_EQ(static_cast<int>(cells.size()), n);
      long legs = 0, hooks = 0;
      for (const auto& c : cells) {
        EXPECT_EQ(c.hook, 1 + c.arm + c.leg);
        legs += c.leg;
        hooks += c.hook;
      }
      EXPECT_EQ(mu.hooks(), mu.transpose().hooks()) << mu.to_string();
      EXPECT_EQ(mu.nstat(), legs) << mu.to_string();
      EXPECT_EQ(mu.nstat() + mu.transpose().nstat() + n, hooks) << mu.to_string();
    }
}

TEST(Dominance, Examples) {
  auto rel = compare_dominance(Partition({6, 1, 1}), Partition({4, 4}));
  EXPECT_FALSE(rel.leq);
  EXPECT_FALSE(rel.geq);
  EXPECT_TRUE(dominance_leq(Partition({2, 2}), Partition({3, 1})));
  EXPECT_FALSE(dominance_leq(Partition({3, 1}), Partition({2, 2})));
  for (int n = 1; n <= 8; ++n)
    for (const auto& mu : enumerate_partitions(n)) {
      EXPECT_TRUE(dominance_leq(Partition::column(n), mu));
      EXPECT_TRUE(dominance_leq(mu, Partition::row(n)));
    }
  EXPECT_THROW(compare_dominance(Partition({2}), Partition({2, 1})), InvalidInput);
}

TEST(Dominance, PartialOrderAndTransposeReversal) {
  for (int n = 1; n <= 8; ++n) {
    auto ps = enumerate_partitions(n);
    for (const auto& a : ps) {
      EXPECT_TRUE(dominance_leq(a, a));
      for (const auto& b : ps) {
        bool ab = dominance_leq(a, b);
        if (!ab) continue;
        if (dominance_leq(b, a)) {
          EXPECT_EQ(a, b);
        }
        EXPECT_TRUE(dominance_leq(b.transpose(), a.transpose()));
        for (const auto& c : ps) {
          if (dominance_leq(b, c)) {
            EXPECT_TRUE(dominance_leq(a, c));
          }
        }
      }
    }
  }
}

TEST(Tableaux, SmallShapes) {
  for (int n = 1; n <= 6; ++n) {
    auto ts = enumerate_syt(Partition::row(n));
    ASSERT_EQ(ts.size(), 1u);
    EXPECT_EQ(ts[0].maj, 0);
  }
  auto t21 = enumerate_syt(Partition({2, 1}));
  ASSERT_EQ(t21.size(), 2u);
  std::multiset<int> majs{t21[0].maj, t21[1].maj};
  EXPECT_EQ(majs, (std::multiset<int>{1, 2}));
  EXPECT_EQ(enumerate_syt(Partition({2, 2})).size(), 2u);
}

TEST(Tableaux, StandardnessAndHookLengthFormula) {
  for (int n = 1; n <= 8; ++n)
    for (const auto& mu : enumerate_partitions(n)) {
      auto ts = enumerate_syt(mu);
      EXPECT_EQ(Integer(static_cast<long>(ts.size())), syt_count(mu)) << mu.to_string();
      for (const auto& t : ts) {
        std::set<int> seen;
        for (std::size_t i = 0; i < t.rows.size(); ++i) {
          ASSERT_EQ(static_cast<int>(t.rows[i].size()), mu[i]);
          for (std::size_t j = 0; j < t.rows[i].size(); ++j) {
            seen.insert(t.rows[i][j]);
            if (j > 0) {
              EXPECT_LT(t.rows[i][j - 1], t.rows[i][j]);
            }
            if (i > 0) {
              EXPECT_LT(t.rows[i - 1][j], t.rows[i][j]);
            }
          }
        }
        EXPECT_EQ(static_cast<int>(seen.size()), n);
        EXPECT_GE(t.maj, 0);
        EXPECT_LE(t.maj, n * (n - 1) / 2);
      }
    }
}
