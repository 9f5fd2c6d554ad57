#include <gtest/gtest.h>

#include "cherpoi/hilbert_series.hpp"
#include "cherpoi/oracle.hpp"

using namespace cherpoi;

TEST(ReflectionAction, Generators) {
  auto two = reflection_action(2);
  ASSERT_EQ(two.generators.size(), 1u);
  EXPECT_EQ(two.generators[0], (IntMatrix{{-1}}));
  auto three = reflection_action(3);
  EXPECT_EQ(three.generators[0], (IntMatrix{{-1, 1}, {0, 1}}));
  EXPECT_EQ(three.generators[1], (IntMatrix{{1, 0}, {1, -1}}));
  for (int n = 2; n <= 4; ++n) {
    auto act = reflection_action(n);
    const std::size_t r = static_cast<std::size_t>(n - 1);
    auto id = int_identity(r);
    for (std::size_t i = 0; i < r; ++i) {
      const auto& s = act.generators[i];
      EXPECT_EQ(int_determinant(s), -1);
      EXPECT_EQ(int_multiply(s, s), id);
      // dual is the inverse transpose
      IntMatrix st(r, std::vector<long>(r));
      for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b) st[a][b] = s[b][a];
      EXPECT_EQ(int_multiply(st, act.dual_generators[i]), id);
      for (std::size_t j = i + 1; j < r; ++j) {
        auto st2 = int_multiply(s, act.generators[j]);
        auto power = j == i + 1 ? int_multiply(st2, int_multiply(st2, st2)) : int_multiply(st2, st2);
        EXPECT_EQ(power, id);
      }
    }
  }
  EXPECT_THROW(reflection_action(5), ResourceError);
  EXPECT_THROW(reflection_action(1), ResourceError);
}

TEST(Alternants, Dimensions) {
  auto two = alternants_dims(2, {6, 6});
  for (int a = 0; a <= 6; ++a)
    for (int b = 0; b <= 6; ++b) EXPECT_EQ(two.at(a, b), (a + b) % 2);
  for (int n = 2; n <= 4; ++n) {
    const int N = n * (n - 1) / 2;
    auto dims = alternants_dims(n, {N, N, n == 4 ? 8 : -1});
    EXPECT_EQ(dims.at(0, 0), 0);
    EXPECT_EQ(dims.at(N, 0), 1);
    EXPECT_EQ(dims.at(0, N), 1);
    for (int a = 0; a < N; ++a) EXPECT_EQ(dims.at(a, 0), 0);
  }
}

TEST(IdealPowers, WholeRingAndMaximalIdeal) {
  for (int n = 2; n <= 3; ++n) {
    OracleWindow w{6, 6};
    auto j0 = ideal_power_dims(n, 0, w);
    EXPECT_EQ(j0.dims, polynomial_ring_dims(n, w).dims);
  }
  auto j0 = ideal_power_dims(4, 0, {8, 8, 8});
  EXPECT_EQ(j0.dims, polynomial_ring_dims(4, {8, 8, 8}).dims);
  auto j1 = ideal_power_dims(2, 1, {6, 6});
  for (int a = 0; a <= 6; ++a)
    for (int b = 0; b <= 6; ++b) EXPECT_EQ(j1.at(a, b), a + b > 0 ? 1 : 0);
}

TEST(IdealPowers, DecreasingAndContainsDeltaPowers) {
  for (int n = 2; n <= 3; ++n) {
    const int N = n * (n - 1) / 2;
    OracleWindow w{3 * N, 4, 3 * N + 2};
    DiagonalRing ring(n);
    IdealPowers powers(ring, w);
    for (int d = 1; d <= 3; ++d) {
      auto hi = dims_of(powers.power(d), w), lo = dims_of(powers.power(d - 1), w);
      for (const auto& [c, v] : hi.dims) EXPECT_LE(v, lo.dims.at(c));
      EXPECT_GE(hi.at(d * N, 0), 1);
      if (d * N > 0) {
        EXPECT_EQ(hi.at(d * N - 1, 0), 0);
      }
    }
  }
}

TEST(IdealPowers, MatchesFormulaForSmallN) {
  for (int d = 0; d <= 3; ++d) {
    auto dims = ideal_power_dims(2, d, {10, 10});
    Poly2 series = bigraded_J_window(2, d, 10, 10);
    for (const auto& [c, v] : dims.dims) EXPECT_EQ(Rational(v), series.coefficient({c.first, c.second}));
  }
  for (int d = 0; d <= 2; ++d) {
    auto dims = ideal_power_dims(3, d, {8, 8, 8});
    Poly2 series = bigraded_J_window(3, d, 8, 8);
    for (const auto& [c, v] : dims.dims) EXPECT_EQ(Rational(v), series.coefficient({c.first, c.second})) << d;
  }
}

TEST(Parity, CorrectParityPartIsAd) {
  for (int n = 2; n <= 3; ++n)
    for (int d = 0; d <= 2; ++d) EXPECT_TRUE(parity_check(n, d, {3 * d + 3, 3 * d + 3, 3 * d + 3})) << n << d;
  EXPECT_TRUE(parity_check(2, 3, {8, 8}));
}

TEST(Jbar, TwoPointsDegreeZero) {
  auto dd = jbar_dims(2, 0, {6, 6});
  EXPECT_EQ(dd.dims.at(1), 1);
  EXPECT_TRUE(dd.saturated.at(1));
  for (long g = -3; g <= 0; ++g) {
    EXPECT_TRUE(dd.saturated.at(g));
    EXPECT_EQ(dd.dims.at(g), 2);
  }
  for (long g = 2; g <= 6; ++g) EXPECT_EQ(dd.dims.at(g), 0);
}

TEST(Jbar, QuotientIsFreeOverInvariants) {
  // J^d is free over C[h]^W, so the quotient's Hilbert function is the
  // alternating sum over subsets of the invariant degrees.
  for (int d = 0; d <= 2; ++d) {
    OracleWindow w{8, 4};
    auto cells = jbar_cell_dims(3, d, w);
    auto ideal = ideal_power_dims(3, d, w);
    for (const auto& [c, v] : cells.dims) {
      long expect = ideal.at(c.first, c.second) - ideal.at(c.first - 2, c.second) - ideal.at(c.first - 3, c.second) +
                    ideal.at(c.first - 5, c.second);
      EXPECT_EQ(v, expect) << c.first << "," << c.second;
    }
  }
}

TEST(Jbar, SaturatedDiagonalsMatchClosedForm) {
  for (int n = 2; n <= 3; ++n)
    for (int d = 0; d <= 2; ++d) {
      auto dd = jbar_dims(n, d, {6, 6});
      Poly1 series = jbar_closed(n, d).expand_window({Direction::descending}, {{-6}, {6}});
      int saturated = 0;
      for (const auto& [g, v] : dd.dims) {
        if (!dd.saturated.at(g)) continue;
        ++saturated;
        EXPECT_EQ(Rational(v), series.coefficient({g})) << n << " " << d << " " << g;
      }
      EXPECT_GE(saturated, 5);
    }
}

TEST(Coinvariants, Multiplicities) {
  auto two = coinvariant_multiplicities(2);
  EXPECT_EQ(two.size(), 2u);
  EXPECT_EQ(two[0], (std::map<Partition, long>{{Partition({2}), 1}}));
  EXPECT_EQ(two[1], (std::map<Partition, long>{{Partition({1, 1}), 1}}));
  for (int n = 2; n <= 4; ++n) {
    auto c = coinvariant_multiplicities(n);
    for (const auto& mu : enumerate_partitions(n)) {
      long total = 0;
      Poly1 f = fake_degree(mu);
      for (int i = 0; i <= n * (n - 1) / 2 + 1; ++i) {
        long m = c[i].count(mu) ? c[i][mu] : 0;
        total += m;
        EXPECT_EQ(Rational(m), f.coefficient({i})) << mu.to_string() << " " << i;
      }
      EXPECT_EQ(Integer(total), dim_irr(mu));
    }
  }
}

TEST(Budget, Bounds) {
  EXPECT_THROW(ideal_power_dims(5, 0, {2, 2}), ResourceError);
  EXPECT_THROW(ideal_power_dims(3, 4, {2, 2}), ResourceError);
  EXPECT_THROW(ideal_power_dims(4, 2, {2, 2}), ResourceError);
  EXPECT_THROW(ideal_power_dims(4, 1, {5, 5}), ResourceError);
  EXPECT_THROW(ideal_power_dims(3, 1, {kOracleMaxBidegree + 1, 2}), ResourceError);
  EXPECT_THROW(jbar_dims(4, 1, {2, 2}), ResourceError);
  EXPECT_THROW(ideal_power_dims(3, -1, {2, 2}), InvalidInput);
  EXPECT_NO_THROW(ideal_power_dims(4, 1, {5, 5, 8}));
}
