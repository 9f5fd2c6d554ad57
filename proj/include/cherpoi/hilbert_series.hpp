#pragma once

// Closed-form Poincare series: standard modules, the ideal powers J^d and
// their fixed-point sums, the quotients by the invariants of positive degree,
// and the N(k) / M(k) series in both the h- and E-gradings.

#include <map>
#include <string>
#include <vector>

#include "cherpoi/errors.hpp"
#include "cherpoi/laurent.hpp"
#include "cherpoi/macdonald.hpp"
#include "cherpoi/partition.hpp"
#include "cherpoi/rational_function.hpp"
#include "cherpoi/sn_rep.hpp"

namespace cherpoi {

enum class Grading { h, E };

inline void require_rank_at_least_two(int n) {
  if (n < 2) throw InvalidInput("series need n >= 2");
}

inline long big_n(int n) { return static_cast<long>(n) * (n - 1) / 2; }

// n(mu) - n(mu^t)
inline long nstat_gap(const Partition& mu) { return mu.nstat() - mu.transpose().nstat(); }

struct WGradedSeries {
  int n = 0;
  CExponent prefix;
  std::map<Partition, RF1> components;

  // [lambda] -> f_lambda(1), leaving the prefix aside.
  RF1 dimension_series() const {
    RF1 total;
    for (const auto& [lambda, s] : components) total += s * Rational(dim_irr(lambda));
    return total;
  }
};

// ((n-1)/2, n(mu) - n(mu^t)), read as (n-1)/2 + c (n(mu) - n(mu^t))
inline CExponent canonical_weight(const Partition& mu) {
  return {make_rational(mu.size() - 1, 2), nstat_gap(mu)};
}

inline long shift_amount(long i, long j, const Partition& mu) {
  if (i < j || j < 0) throw InvalidInput("shift_amount needs i >= j >= 0");
  return (i - j) * nstat_gap(mu);
}

inline std::vector<Poly1> invariant_degree_factors(int n, std::int64_t sign = 1) {
  return one_minus_v_powers(2, n, sign);
}

// v^{m + c(n(mu)-n(mu^t))} sum_lambda f_lambda(v) [lambda (x) mu] / prod_{i=2}^n (1 - v^i)
inline WGradedSeries standard_series_W(const Partition& mu) {
  const int n = mu.size();
  require_rank_at_least_two(n);
  WGradedSeries out{n, canonical_weight(mu), {}};
  const auto den = invariant_degree_factors(n);
  for (const auto& nu : enumerate_partitions(n)) {
    Poly1 num;
    for (const auto& lambda : enumerate_partitions(n)) {
      long k = kronecker(lambda, mu, nu);
      if (k) num += fake_degree(lambda) * Rational(k);
    }
    if (!num.is_zero()) out.components.emplace(nu, RF1(num, den));
  }
  return out;
}

struct PrefixedSeries {
  CExponent prefix;
  RF1 body;
};

// p(e Delta_d(mu), v) = v^{D(d,mu)} f_mu(v) / prod_{i=2}^n (1 - v^i)
inline PrefixedSeries e_standard_series(const Partition& mu) {
  require_rank_at_least_two(mu.size());
  return {canonical_weight(mu), RF1(fake_degree(mu), invariant_degree_factors(mu.size()))};
}

// sum_mu P_mu(s,t) Omega(mu)^{-1} s^{d n(mu)} t^{d n(mu^t)}
inline RF2 bigraded_JJ(int n, int d, KostkaArgumentOrder order = KostkaArgumentOrder::t_sinv) {
  require_rank_at_least_two(n);
  if (d < 0) throw InvalidInput("d must be nonnegative");
  RF2 total;
  for (const auto& mu : enumerate_partitions(n)) {
    Poly2 num = procesi_fiber(mu, order) * mono2(d * mu.nstat(), d * mu.transpose().nstat());
    total += RF2(num, omega_factors(mu));
  }
  return total;
}

inline std::vector<Poly2> polynomial_ring_factors(int n) {
  std::vector<Poly2> out;
  for (int i = 1; i < n; ++i) {
    out.push_back(Poly2::one_minus({1, 0}));
    out.push_back(Poly2::one_minus({0, 1}));
  }
  return out;
}

// (1-s)(1-t) times the J^d fixed-point sum
inline RF2 bigraded_J(int n, int d, KostkaArgumentOrder order = KostkaArgumentOrder::t_sinv) {
  RF2 jj = bigraded_JJ(n, d, order);
  return jj * RF2(Poly2::one_minus({1, 0}) * Poly2::one_minus({0, 1}));
}

// Coefficients of p(J^d) on the box [0,A] x [0,B], after rewriting over
// ((1-s)(1-t))^{n-1}.
inline Poly2 bigraded_J_window(int n, int d, std::int64_t max_a, std::int64_t max_b,
                               KostkaArgumentOrder order = KostkaArgumentOrder::t_sinv) {
  RF2 j = bigraded_J(n, d, order).rewrite_over(polynomial_ring_factors(n));
  return j.expand_window({Direction::ascending, Direction::ascending}, {{0, 0}, {max_a, max_b}});
}

// sum_mu f_mu(1) f_mu(v^{-1}) v^{-d(n(mu)-n(mu^t))} [n]_v! / prod_{i=2}^n (1 - v^{-i})
inline RF1 jbar_closed(int n, int d) {
  require_rank_at_least_two(n);
  Poly1 num;
  for (const auto& mu : enumerate_partitions(n)) {
    Poly1 f = fake_degree(mu);
    num += invert_variable(f) * at_one(f) * vpow(-d * nstat_gap(mu));
  }
  return RF1(num, invariant_degree_factors(n, -1)) * q_factorial(n);
}

// (1-t) prod_{i=1}^n (1-s^i) sum_mu P_mu Omega^{-1} s^{dn(mu)} t^{dn(mu^t)} at s = v, t = v^{-1},
// specialised factor by factor so no cell factor is ever evaluated at 0/0.
inline RF1 jbar_via_specialization(int n, int d, KostkaArgumentOrder order = KostkaArgumentOrder::t_sinv) {
  require_rank_at_least_two(n);
  Poly2 prefactor = Poly2::one_minus({0, 1});
  for (int i = 1; i <= n; ++i) prefactor *= Poly2::one_minus({i, 0});
  const std::array<Exponent<1>, 2> at_v{Exponent<1>{1}, Exponent<1>{-1}};
  RF1 total;
  for (const auto& mu : enumerate_partitions(n)) {
    Poly2 num = prefactor * procesi_fiber(mu, order) * mono2(d * mu.nstat(), d * mu.transpose().nstat());
    total += RF2(num, omega_factors(mu)).substitute<1>(at_v, VarSet::v);
  }
  return total;
}

// Omega(mu) at s = v, t = v^{-1}, specialised cell by cell.
inline RF1 omega_specialized(const Partition& mu) {
  const std::array<Exponent<1>, 2> at_v{Exponent<1>{1}, Exponent<1>{-1}};
  Poly1 prod = Poly1::constant(1);
  for (const auto& f : omega_factors(mu)) prod *= f.substitute<1>(at_v, VarSet::v);
  return RF1(prod);
}

// prod_{i=1}^n (1 - v^i)(1 - v^{-i}) / (f_mu(v) f_mu(v^{-1}))
inline RF1 omega_specialization_closed(const Partition& mu) {
  Poly1 num = Poly1::constant(1);
  for (int i = 1; i <= mu.size(); ++i) num *= Poly1::one_minus({i}) * Poly1::one_minus({-i});
  Poly1 f = fake_degree(mu);
  return RF1(num) / RF1(f * invert_variable(f));
}

inline RF1 grading_shift(int n, int k, Grading g) { return g == Grading::E ? vmono(k * big_n(n)) : vmono(0); }

inline RF1 nbar_series(int n, int k, Grading g) {
  require_rank_at_least_two(n);
  if (k < 0) throw InvalidInput("k must be nonnegative");
  Poly1 num;
  for (const auto& mu : enumerate_partitions(n)) {
    Poly1 f = fake_degree(mu);
    num += at_one(f) * invert_variable(f) * vpow(-k * nstat_gap(mu));
  }
  return grading_shift(n, k, g) * q_factorial(n) * RF1(num, invariant_degree_factors(n, -1));
}

// sum_mu f_mu(1) f_mu(v) v^{k(n(mu)-n(mu^t))}, shared by the N(k)_under forms
inline Poly1 nunder_numerator(int n, int k) {
  Poly1 num;
  for (const auto& mu : enumerate_partitions(n)) {
    Poly1 f = fake_degree(mu);
    num += at_one(f) * f * vpow(k * nstat_gap(mu));
  }
  return num;
}

inline RF1 nunder_series(int n, int k, Grading g) {
  require_rank_at_least_two(n);
  if (k < 0) throw InvalidInput("k must be nonnegative");
  return grading_shift(n, k, g) * RF1(nunder_numerator(n, k), invariant_degree_factors(n));
}

// The same numerator over (1 - v^{-1})^{n-1}: the quotient series before rearranging.
inline RF1 nbar_unrearranged(int n, int k) {
  require_rank_at_least_two(n);
  std::vector<Poly1> den(static_cast<std::size_t>(n - 1), Poly1::one_minus({-1}));
  return RF1(nunder_numerator(n, k), den);
}

inline RF1 mbar_series(int n, int k, Grading g) {
  require_rank_at_least_two(n);
  if (k < 1) throw InvalidInput("M(k) series need k >= 1");
  Poly1 num;
  for (const auto& mu : enumerate_partitions(n)) {
    Poly1 f = fake_degree(mu);
    num += at_one(f) * invert_variable(f) * vpow(-(k - 1) * nstat_gap(mu));
  }
  return grading_shift(n, k, g) * RF1(num, invariant_degree_factors(n, -1));
}

// sum_mu f_mu(1) f_mu(v^{-1}) v^{k(n(mu)-n(mu^t))} / (1-v)^{n-1}
inline RF1 munder_series(int n, int k, Grading g) {
  require_rank_at_least_two(n);
  if (k < 1) throw InvalidInput("M(k) series need k >= 1");
  Poly1 num;
  for (const auto& mu : enumerate_partitions(n)) {
    Poly1 f = fake_degree(mu);
    num += at_one(f) * invert_variable(f) * vpow(k * nstat_gap(mu));
  }
  std::vector<Poly1> den(static_cast<std::size_t>(n - 1), Poly1::one_minus({1}));
  return grading_shift(n, k, g) * RF1(num, den);
}

// M(k)_under series cut down by C[h] and extended by the x-side invariants,
// before the transpose rearrangement.
inline RF1 mbar_unrearranged(int n, int k) {
  RF1 under = munder_series(n, k, Grading::h);
  std::vector<Poly1> cut(static_cast<std::size_t>(n - 1), Poly1::one_minus({1}));
  Poly1 c = Poly1::constant(1);
  for (const auto& f : cut) c *= f;
  return under * RF1(c, invariant_degree_factors(n, -1));
}

enum class FakeDegreeVariant { printed, lambda };

struct IdentitySides {
  RF1 lhs;
  RF1 rhs;
};

// sum_lambda v^{n(mu)} K_{lambda mu}(v^{-1}, v^{-1}) f_?(v^{-1}) f_lambda(1)
//   vs sum_lambda f_lambda(v^{-1}) f_mu(1) f_lambda(1)
// with ? = mu as printed, or ? = lambda.
inline IdentitySides kostka_fake_degree_identity(const Partition& mu, FakeDegreeVariant variant) {
  const int n = mu.size();
  auto km = kostka_macdonald(n);
  const std::size_t m = km->index(mu);
  const std::array<Exponent<1>, 2> both_inverse{Exponent<1>{-1}, Exponent<1>{-1}};
  Poly1 lhs, rhs;
  Poly1 fmu_inv = invert_variable(fake_degree(mu));
  Rational fmu_one = Rational(dim_irr(mu));
  for (std::size_t l = 0; l < km->partitions.size(); ++l) {
    const Partition& lambda = km->partitions[l];
    Poly1 fl_inv = invert_variable(fake_degree(lambda));
    Rational fl_one = Rational(dim_irr(lambda));
    Poly1 kval = km->entries[l][m].substitute<1>(both_inverse, VarSet::v);
    lhs += vpow(mu.nstat()) * kval * (variant == FakeDegreeVariant::printed ? fmu_inv : fl_inv) * fl_one;
    rhs += fl_inv * fmu_one * fl_one;
  }
  return {RF1(lhs), RF1(rhs)};
}

}  // namespace cherpoi
