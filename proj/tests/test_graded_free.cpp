#include <gtest/gtest.h>

#include <random>
#include <set>

#include "cherpoi/graded_free.hpp"

using namespace cherpoi;

namespace {

std::shared_ptr<const ConnectedGradedAlgebra> poly(std::size_t vars, int cutoff) {
  return std::make_shared<const ConnectedGradedAlgebra>(ConnectedGradedAlgebra::polynomial(vars, cutoff));
}

// every component of g lies in the degree |g| - shift_i
void expect_homogeneous(const FreeModule& f, const FreeElement& g) {
  ASSERT_EQ(g.components.size(), f.rank());
  for (std::size_t i = 0; i < f.rank(); ++i) EXPECT_EQ(g.components[i].size(), f.algebra().dim(g.degree - f.shifts()[i]));
}

void expect_hilbert_equality(const GradedIdempotent& e, const HomogeneousBasis& b) {
  FreeModule f(e.matrix.algebra, e.shifts());
  for (int deg = min_shift(e.shifts()); deg <= b.horizon; ++deg) {
    std::size_t free_dim = 0;
    for (const auto& g : b.generators) free_dim += f.algebra().dim(deg - g.degree);
    EXPECT_EQ(free_dim, image_dimension(f, e.matrix, deg)) << deg;
    EXPECT_EQ(b.image_dims.at(deg), free_dim);
  }
}

}  // namespace

TEST(Algebra, ConnectedAndAssociative) {
  auto a = poly(2, 6);
  EXPECT_EQ(a->dim(0), 1u);
  EXPECT_EQ(a->dim(3), 4u);
  EXPECT_EQ(a->dim(7), 0u);
  EXPECT_TRUE(a->check_associative());
  ConnectedGradedAlgebra t({"x"}, {1}, 6, 3);
  EXPECT_EQ(t.dim(2), 1u);
  EXPECT_EQ(t.dim(3), 0u);
  EXPECT_TRUE(t.check_associative());
  ConnectedGradedAlgebra w({"x", "y"}, {1, 2}, 6);
  EXPECT_EQ(w.dim(4), 3u);
  EXPECT_TRUE(w.check_associative());
  EXPECT_THROW(ConnectedGradedAlgebra({"x"}, {0}, 4), InvalidInput);
}

TEST(Extraction, IdentityAndCoordinateProjection) {
  auto a = poly(1, 8);
  std::vector<int> shifts{0, 2, 3};
  GradedIdempotent id{HomogeneousMatrix::identity(a, shifts), 8};
  auto b = extract_homogeneous_basis(id);
  ASSERT_EQ(b.generators.size(), 3u);
  FreeModule f(a, shifts);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(b.generators[i].degree, shifts[i]);
    EXPECT_EQ(f.flatten(b.generators[i]), f.flatten(f.basis_times(i, shifts[i], a->one())));
  }
  EXPECT_EQ(b.horizon, 5);

  auto d = HomogeneousMatrix::zero(a, shifts);
  d.entries[0][0] = a->one();
  auto p = extract_homogeneous_basis({d, 8});
  ASSERT_EQ(p.generators.size(), 1u);
  EXPECT_EQ(f.flatten(p.generators[0]), f.flatten(f.basis_times(0, 0, a->one())));
}

TEST(Extraction, UnipotentConjugateOverPolynomialRing) {
  // E = U diag(1,0) U^{-1}, U = I + x e_21, shifts (2, 1)
  auto a = poly(1, 12);
  std::vector<int> shifts{2, 1};
  auto u = HomogeneousMatrix::identity(a, shifts);
  u.entries[1][0] = a->basis_element(1, 0);
  auto uinv = HomogeneousMatrix::identity(a, shifts);
  uinv.entries[1][0] = a->basis_element(1, 0);
  uinv.entries[1][0][0] = -1;
  auto d = HomogeneousMatrix::zero(a, shifts);
  d.entries[0][0] = a->one();
  GradedIdempotent e{u * d * uinv, 12};
  auto b = extract_homogeneous_basis(e);
  ASSERT_EQ(b.generators.size(), 1u);
  EXPECT_EQ(b.generators[0].degree, 2);
  EXPECT_EQ(b.horizon, 10);
  expect_hilbert_equality(e, b);
  FreeModule f(a, shifts);
  expect_homogeneous(f, b.generators[0]);
  EXPECT_EQ(f.flatten(f.apply(e.matrix, b.generators[0])), f.flatten(b.generators[0]));
}

TEST(Extraction, RandomConjugates) {
  std::mt19937_64 seeds(12345);
  for (int trial = 0; trial < 50; ++trial) {
    auto a = poly(trial % 2 ? 2 : 1, 12);
    std::vector<int> shifts{0, 1, 1, 3};
    std::vector<bool> keep{trial % 3 != 0, true, trial % 2 == 0, trial % 5 != 1};
    auto e = conjugated_projection(a, shifts, keep, seeds());
    auto b = extract_homogeneous_basis(e);
    FreeModule f(a, shifts);
    std::multiset<int> want, got;
    for (std::size_t i = 0; i < shifts.size(); ++i)
      if (keep[i]) want.insert(shifts[i]);
    for (const auto& g : b.generators) {
      got.insert(g.degree);
      expect_homogeneous(f, g);
      EXPECT_EQ(f.flatten(f.apply(e.matrix, g)), f.flatten(g));
    }
    EXPECT_EQ(got, want) << trial;
    expect_hilbert_equality(e, b);
  }
}

TEST(Extraction, Fixpoint) {
  auto a = poly(2, 10);
  std::vector<int> shifts{0, 1, 2};
  auto e = conjugated_projection(a, shifts, {true, false, true}, 7);
  auto first = extract_homogeneous_basis(e);
  std::vector<int> degrees;
  for (const auto& g : first.generators) degrees.push_back(g.degree);
  // the free module on the output, presented by the identity
  auto again = extract_homogeneous_basis({HomogeneousMatrix::identity(a, degrees), 10});
  ASSERT_EQ(again.generators.size(), degrees.size());
  for (std::size_t i = 0; i < degrees.size(); ++i) EXPECT_EQ(again.generators[i].degree, degrees[i]);
  // and extraction is deterministic on the original presentation
  auto second = extract_homogeneous_basis(e);
  ASSERT_EQ(second.generators.size(), first.generators.size());
  FreeModule f(a, shifts);
  for (std::size_t i = 0; i < first.generators.size(); ++i)
    EXPECT_EQ(f.flatten(first.generators[i]), f.flatten(second.generators[i]));
}

TEST(Extraction, Errors) {
  auto a = poly(1, 3);
  std::vector<int> shifts{0, 5};
  EXPECT_THROW(extract_homogeneous_basis({HomogeneousMatrix::identity(a, shifts), 3}), CertificationError);
  try {
    extract_homogeneous_basis({HomogeneousMatrix::identity(a, shifts), 3});
  } catch (const CertificationError& err) {
    EXPECT_EQ(err.first_uncertified_degree(), 0);
  }
  auto twice = HomogeneousMatrix::identity(a, {0});
  twice.entries[0][0][0] = 2;
  EXPECT_THROW(extract_homogeneous_basis({twice, 3}), InvalidInput);
}

TEST(MinimalExpression, Examples) {
  auto a = poly(1, 8);
  std::vector<int> shifts{0, 0};
  FreeModule f(a, shifts);
  auto m = minimal_expression(f, f.basis_times(0, 0, a->one()));
  EXPECT_EQ(m.support, (std::vector<std::size_t>{0}));
  auto x = a->basis_element(1, 0);
  auto m2 = minimal_expression(f, f.basis_times(0, 1, x));
  EXPECT_EQ(m2.support.size(), 1u);
  // u_1 x + u_2 x: a_2 = 1 * a_1, so one term after u_1' = u_1 + u_2
  FreeElement both = f.basis_times(0, 1, x);
  both.components[1] = x;
  auto m3 = minimal_expression(f, both);
  ASSERT_EQ(m3.support.size(), 1u);
  FreeElement rebuilt = f.times(f.column(m3.basis, m3.support[0]), 1, m3.coefficients[0]);
  EXPECT_EQ(f.flatten(rebuilt), f.flatten(both));
  // u_1 x + u_2 y over k[x,y] is already minimal
  auto b = poly(2, 6);
  FreeModule g(b, shifts);
  FreeElement xy = g.basis_times(0, 1, b->basis_element(1, 0));
  xy.components[1] = b->basis_element(1, 1);
  EXPECT_EQ(minimal_expression(g, xy).support.size(), 2u);
  EXPECT_THROW(minimal_expression(f, f.zero(2)), InvalidInput);
}

TEST(Eilenberg, Homogenize) {
  auto a = poly(1, 10);
  std::vector<int> shifts{0, 1};
  auto e = conjugated_projection(a, shifts, {true, true}, 3);
  FreeModule f(a, shifts);
  std::vector<FreeElement> phi{f.column(HomogeneousMatrix::identity(a, shifts), 0),
                               f.column(HomogeneousMatrix::identity(a, shifts), 1)};
  // homogeneous splitting of the identity is the identity; add junk of other degrees
  std::vector<std::vector<InhomogeneousElement>> theta(2, std::vector<InhomogeneousElement>(2));
  theta[0][0][0] = a->one();
  theta[1][1][0] = a->one();
  auto clean = eilenberg_homogenize(f, f, phi, theta, shifts);
  theta[0][0][3] = a->basis_element(3, 0);
  theta[1][0][4] = a->basis_element(4, 0);
  auto dirty = eilenberg_homogenize(f, f, phi, theta, shifts);
  for (std::size_t i = 0; i < 2; ++i) EXPECT_EQ(f.flatten(clean.columns[i]), f.flatten(dirty.columns[i]));
  // a splitting whose homogeneous part is wrong is rejected
  theta[0][0][0] = Coeffs{2};
  EXPECT_THROW(eilenberg_homogenize(f, f, phi, theta, shifts), InvalidSplitting);
  (void)e;
}

TEST(Eilenberg, RandomKernelJunk) {
  // phi = E : F -> F, theta(p_i) = E u_i + (1 - E) w_i with w_i inhomogeneous
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int trial = 0; trial < 10; ++trial) {
    auto a = poly(2, 8);
    std::vector<int> shifts{0, 1, 2};
    auto e = conjugated_projection(a, shifts, {true, trial % 2 == 0, true}, rng());
    FreeModule f(a, shifts);
    std::vector<FreeElement> phi;
    for (std::size_t j = 0; j < 3; ++j) phi.push_back(f.column(e.matrix, j));
    std::vector<std::vector<InhomogeneousElement>> theta(3, std::vector<InhomogeneousElement>(3));
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) theta[i][j][shifts[i] - shifts[j]] = e.matrix.entries[j][i];
      for (int deg = shifts[i] + 1; deg <= shifts[i] + 2; ++deg) {
        FreeElement w = f.zero(deg);
        for (auto& comp : w.components)
          for (auto& c : comp) c = coef(rng);
        FreeElement ew = f.apply(e.matrix, w);
        for (std::size_t j = 0; j < 3; ++j) {
          Coeffs junk = w.components[j];
          for (std::size_t t = 0; t < junk.size(); ++t) junk[t] -= ew.components[j][t];
          theta[i][j][deg - shifts[j]] = junk;
        }
      }
    }
    auto out = eilenberg_homogenize(f, f, phi, theta, shifts);
    for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(f.flatten(out.columns[i]), f.flatten(phi[i]));
  }
}
