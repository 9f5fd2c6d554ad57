#pragma once

// Macdonald polynomials and the Kostka-Macdonald matrix.
//
// The matrix is computed by running Gram-Schmidt exactly at rational points
// (q0, t0), reading K off each integral form J_mu = c_mu P_mu by character
// orthogonality, and interpolating on a grid. The interpolated matrix is then
// certified in Q[q,t]: the rebuilt J_mu must be triangular in the monomial
// basis with leading coefficient c_mu and pairwise orthogonal, which pins
// P_mu uniquely.

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "cherpoi/errors.hpp"
#include "cherpoi/laurent.hpp"
#include "cherpoi/linalg.hpp"
#include "cherpoi/partition.hpp"
#include "cherpoi/rational_function.hpp"
#include "cherpoi/sn_rep.hpp"
#include "cherpoi/symmetric.hpp"

namespace cherpoi {

inline constexpr int kMaxKostkaN = 7;
inline constexpr const char* kEngineVersion = "cherpoi-kostka-1";

struct KostkaMacdonaldMatrix {
  int n = 0;
  std::vector<Partition> partitions;  // row and column labels, enumeration order
  std::vector<std::vector<Poly2>> entries;  // entries[lambda][mu], variables q, t

  const Poly2& at(const Partition& lambda, const Partition& mu) const {
    return entries.at(index(lambda)).at(index(mu));
  }
  std::size_t index(const Partition& p) const {
    auto it = std::find(partitions.begin(), partitions.end(), p);
    if (it == partitions.end()) throw InvalidInput("partition " + p.to_string() + " not in matrix");
    return static_cast<std::size_t>(it - partitions.begin());
  }
};

// c_mu = prod_{x in mu} (1 - q^{a(x)} t^{l(x)+1})
inline std::vector<Poly2> integral_form_factors(const Partition& mu) {
  std::vector<Poly2> out;
  for (const auto& c : mu.cells()) out.push_back(Poly2::one_minus({c.arm, c.leg + 1}, 1, VarSet::qt));
  return out;
}

inline Poly2 integral_form_constant(const Partition& mu) {
  Poly2 c = qt_poly(1);
  for (const auto& f : integral_form_factors(mu)) c *= f;
  return c;
}

// Ascending linear extension of dominance (smallest first), as indices into
// enumerate_partitions(n).
inline std::vector<std::size_t> default_extension(int n) {
  std::vector<std::size_t> order(enumerate_partitions(n).size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = order.size() - 1 - i;
  return order;
}

inline bool is_linear_extension(int n, const std::vector<std::size_t>& order) {
  auto ps = enumerate_partitions(n);
  if (order.size() != ps.size()) return false;
  std::vector<bool> seen(ps.size(), false);
  for (auto i : order) {
    if (i >= ps.size() || seen[i]) return false;
    seen[i] = true;
  }
  for (std::size_t a = 0; a < order.size(); ++a)
    for (std::size_t b = a + 1; b < order.size(); ++b)
      if (dominance_leq(ps[order[b]], ps[order[a]]) && ps[order[a]] != ps[order[b]]) return false;
  return true;
}

struct MacdonaldPoint {
  Rational q, t;
  std::vector<std::vector<Rational>> P;  // P[mu][lambda]: coefficient of m_lambda in P_mu
  std::vector<std::vector<Rational>> K;  // K[lambda][mu]
};

// Gram-Schmidt at a point. nullopt when the point is degenerate for this order.
inline std::optional<MacdonaldPoint> macdonald_at_point(int n, const Rational& q0, const Rational& t0,
                                                        const std::vector<std::size_t>& order) {
  auto tr = symmetric_transitions(n);
  const auto& ps = tr->partitions();
  const std::size_t k = ps.size();
  std::vector<Rational> w(k);
  for (std::size_t r = 0; r < k; ++r) {
    Rational num = Rational(centralizer_order(ps[r])), den = 1;
    for (int part : ps[r].parts()) {
      num *= 1 - pow(q0, part);
      den *= 1 - pow(t0, part);
    }
    if (den == 0 || num == 0) return std::nullopt;
    w[r] = num / den;
  }
  const QMatrix& mp = tr->m_to_p();
  QMatrix gram(k, std::vector<Rational>(k, 0));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a; b < k; ++b) {
      Rational s = 0;
      for (std::size_t r = 0; r < k; ++r) s += mp[a][r] * mp[b][r] * w[r];
      gram[a][b] = gram[b][a] = s;
    }

  MacdonaldPoint out{q0, t0, QMatrix(k, std::vector<Rational>(k, 0)), QMatrix(k, std::vector<Rational>(k, 0))};
  for (std::size_t pos = 0; pos < k; ++pos) {
    const std::size_t mu = order[pos];
    out.P[mu][mu] = 1;
    if (pos == 0) continue;
    QMatrix a(pos, std::vector<Rational>(pos, 0)), b(pos, std::vector<Rational>(1, 0));
    for (std::size_t i = 0; i < pos; ++i) {
      for (std::size_t j = 0; j < pos; ++j) a[i][j] = gram[order[i]][order[j]];
      b[i][0] = -gram[order[i]][mu];
    }
    auto c = solve(a, b);
    if (!c) return std::nullopt;
    for (std::size_t j = 0; j < pos; ++j) out.P[mu][order[j]] = (*c)[j][0];
  }

  for (std::size_t mu = 0; mu < k; ++mu) {
    Rational cmu = integral_form_constant(ps[mu]).evaluate({q0, t0});
    std::vector<Rational> j(k, 0);
    for (std::size_t l = 0; l < k; ++l) {
      if (out.P[mu][l] == 0) continue;
      for (std::size_t r = 0; r < k; ++r) j[r] += cmu * out.P[mu][l] * mp[l][r];
    }
    for (std::size_t r = 0; r < k; ++r) {
      Rational den = 1;
      for (int part : ps[r].parts()) den *= 1 - pow(t0, part);
      j[r] /= den;
    }
    for (std::size_t l = 0; l < k; ++l) {
      Rational s = 0;
      for (std::size_t r = 0; r < k; ++r) s += Rational(tr->characters().value(l, r)) * j[r];
      out.K[l][mu] = s;
    }
  }
  return out;
}

namespace detail {

// Coefficients (ascending powers) of the polynomial through the given points.
inline std::vector<Rational> interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  const std::size_t m = xs.size();
  std::vector<Rational> dd = ys;
  for (std::size_t level = 1; level < m; ++level)
    for (std::size_t i = m - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
      if (i == level) break;
    }
  // Horner on the Newton form.
  std::vector<Rational> poly(1, dd[m - 1]);
  for (std::size_t i = m - 1; i-- > 0;) {
    std::vector<Rational> next(poly.size() + 1, 0);
    for (std::size_t d = 0; d < poly.size(); ++d) {
      next[d + 1] += poly[d];
      next[d] -= poly[d] * xs[i];
    }
    next[0] += dd[i];
    poly = std::move(next);
  }
  return poly;
}

// 2, -2, 3, -3, ...
inline Rational sample_value(std::size_t i) {
  long mag = 2 + static_cast<long>(i / 2);
  return Rational(i % 2 == 0 ? mag : -mag);
}

}  // namespace detail

// Certification in Q[q,t]. Returns an empty string on success, otherwise a
// description of the first failed condition.
inline std::string certify_kostka_macdonald(const KostkaMacdonaldMatrix& km) {
  const int n = km.n;
  auto tr = symmetric_transitions(n);
  const auto& ps = tr->partitions();
  const std::size_t k = ps.size();
  // u[mu][rho] = sum_lambda K_{lambda mu} chi_lambda(rho), so that
  // J_mu = sum_rho u[mu][rho] prod(1 - t^{rho_i}) / z_rho p_rho.
  std::vector<std::vector<Poly2>> u(k, std::vector<Poly2>(k, qt_poly(0)));
  for (std::size_t mu = 0; mu < k; ++mu)
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t l = 0; l < k; ++l) {
        long chi = tr->characters().value(l, r);
        if (chi) u[mu][r] += km.entries[l][mu] * Rational(chi);
      }
  std::vector<Poly2> tfac(k), qfac(k);
  for (std::size_t r = 0; r < k; ++r) {
    tfac[r] = one_minus_power_product(ps[r], 1);
    qfac[r] = one_minus_power_product(ps[r], 0);
  }
  for (std::size_t mu = 0; mu < k; ++mu) {
    std::vector<Poly2> jp(k);
    for (std::size_t r = 0; r < k; ++r) jp[r] = u[mu][r] * tfac[r] * (1 / Rational(centralizer_order(ps[r])));
    for (std::size_t l = 0; l < k; ++l) {
      Poly2 coeff = qt_poly(0);
      for (std::size_t r = 0; r < k; ++r)
        if (tr->p_to_m()[r][l] != 0) coeff += jp[r] * Rational(tr->p_to_m()[r][l]);
      if (l == mu) {
        if (coeff != integral_form_constant(ps[mu]))
          return "leading coefficient of J" + ps[mu].to_string() + " is not c_mu";
      } else if (!dominance_leq(ps[l], ps[mu]) && !coeff.is_zero()) {
        return "J" + ps[mu].to_string() + " has a term m" + ps[l].to_string() + " outside the dominance order";
      }
    }
  }
  // <J_mu, J_nu> = sum_rho u_mu u_nu prod(1 - q^{rho_i})(1 - t^{rho_i}) / z_rho
  for (std::size_t mu = 0; mu < k; ++mu)
    for (std::size_t nu = mu + 1; nu < k; ++nu) {
      Poly2 total = qt_poly(0);
      for (std::size_t r = 0; r < k; ++r) {
        if (u[mu][r].is_zero() || u[nu][r].is_zero()) continue;
        total += u[mu][r] * u[nu][r] * qfac[r] * tfac[r] * (1 / Rational(centralizer_order(ps[r])));
      }
      if (!total.is_zero()) return "J" + ps[mu].to_string() + " and J" + ps[nu].to_string() + " are not orthogonal";
    }
  return "";
}

// Interpolated and certified matrix. The order argument selects the linear
// extension of dominance used by Gram-Schmidt.
inline KostkaMacdonaldMatrix compute_kostka_macdonald(int n, const std::vector<std::size_t>& order) {
  if (n < 1 || n > kMaxKostkaN) throw ResourceError("kostka_macdonald: n outside the configured bound");
  if (!is_linear_extension(n, order)) throw InvalidInput("order is not a linear extension of dominance");
  auto tr = symmetric_transitions(n);
  const std::size_t k = tr->partitions().size();
  const std::size_t grid = static_cast<std::size_t>(n * (n - 1) / 2) + 1;  // q- and t-degrees are at most N

  std::vector<Rational> ts;
  for (std::size_t j = 0; j < grid; ++j) ts.push_back(detail::sample_value(j));
  std::vector<Rational> qs;
  // values[i][j] is the matrix at (qs[i], ts[j])
  std::vector<std::vector<MacdonaldPoint>> values;
  for (std::size_t cand = 0; qs.size() < grid; ++cand) {
    if (cand > 4 * grid + 16) throw InternalConsistencyError("could not find enough regular sample points");
    Rational q0 = detail::sample_value(cand);
    std::vector<MacdonaldPoint> row;
    for (const auto& t0 : ts) {
      auto pt = macdonald_at_point(n, q0, t0, order);
      if (!pt) break;
      row.push_back(std::move(*pt));
    }
    if (row.size() != grid) continue;
    qs.push_back(q0);
    values.push_back(std::move(row));
  }

  KostkaMacdonaldMatrix km{n, tr->partitions(), std::vector<std::vector<Poly2>>(k, std::vector<Poly2>(k, qt_poly(0)))};
  for (std::size_t l = 0; l < k; ++l)
    for (std::size_t mu = 0; mu < k; ++mu) {
      // Interpolate in t along each q row, then each t-coefficient in q.
      std::vector<std::vector<Rational>> tcoeffs;
      for (std::size_t i = 0; i < grid; ++i) {
        std::vector<Rational> ys;
        for (std::size_t j = 0; j < grid; ++j) ys.push_back(values[i][j].K[l][mu]);
        tcoeffs.push_back(detail::interpolate(ts, ys));
      }
      Poly2 entry = qt_poly(0);
      for (std::size_t b = 0; b < grid; ++b) {
        std::vector<Rational> ys;
        for (std::size_t i = 0; i < grid; ++i) ys.push_back(tcoeffs[i][b]);
        auto qc = detail::interpolate(qs, ys);
        for (std::size_t a = 0; a < qc.size(); ++a)
          entry.add_term({static_cast<std::int64_t>(a), static_cast<std::int64_t>(b)}, qc[a]);
      }
      km.entries[l][mu] = std::move(entry);
    }

  std::string failure = certify_kostka_macdonald(km);
  if (!failure.empty()) throw InternalConsistencyError("Kostka-Macdonald certification failed: " + failure);
  return km;
}

inline KostkaMacdonaldMatrix compute_kostka_macdonald(int n) { return compute_kostka_macdonald(n, default_extension(n)); }

// Optional persistent store consulted before computing; installed by the CLI.
struct KostkaStore {
  std::function<std::optional<KostkaMacdonaldMatrix>(int)> load;
  std::function<void(const KostkaMacdonaldMatrix&)> save;
};

namespace detail {
inline KostkaStore& kostka_store() {
  static KostkaStore store;
  return store;
}
inline std::mutex& kostka_mutex() {
  static std::mutex mu;
  return mu;
}
}  // namespace detail

inline void set_kostka_store(KostkaStore store) {
  std::lock_guard lock(detail::kostka_mutex());
  detail::kostka_store() = std::move(store);
}

// Memoised per n; consults the persistent store when one is installed.
inline std::shared_ptr<const KostkaMacdonaldMatrix> kostka_macdonald(int n) {
  if (n < 1 || n > kMaxKostkaN) throw ResourceError("kostka_macdonald: n outside the configured bound");
  static std::map<int, std::shared_ptr<const KostkaMacdonaldMatrix>> memo;
  std::lock_guard lock(detail::kostka_mutex());
  auto& slot = memo[n];
  if (slot) return slot;
  const auto& store = detail::kostka_store();
  if (store.load) {
    if (auto loaded = store.load(n)) {
      slot = std::make_shared<const KostkaMacdonaldMatrix>(std::move(*loaded));
      return slot;
    }
  }
  auto km = compute_kostka_macdonald(n);
  if (store.save) store.save(km);
  slot = std::make_shared<const KostkaMacdonaldMatrix>(std::move(km));
  return slot;
}

// J_mu in the monomial basis; coefficients are polynomials in q, t.
inline SymmetricFunction macdonald_J(const Partition& mu) {
  const int n = mu.size();
  auto km = kostka_macdonald(n);
  auto tr = symmetric_transitions(n);
  const std::size_t m = tr->index(mu), k = tr->partitions().size();
  SymmetricFunction pf{n, SymBasis::power_sum, {}};
  for (std::size_t r = 0; r < k; ++r) {
    Poly2 c = qt_poly(0);
    for (std::size_t l = 0; l < k; ++l) {
      long chi = tr->characters().value(l, r);
      if (chi) c += km->entries[l][m] * Rational(chi);
    }
    c *= one_minus_power_product(tr->partitions()[r], 1) * (1 / Rational(centralizer_order(tr->partitions()[r])));
    pf.coeffs.emplace_back(c);
  }
  return convert(pf, SymBasis::monomial);
}

// P_mu = J_mu / c_mu in the monomial basis.
inline SymmetricFunction macdonald_P(const Partition& mu) {
  SymmetricFunction j = macdonald_J(mu);
  const auto factors = integral_form_factors(mu);
  for (auto& c : j.coeffs) c = QtFunction(c.numerator(), factors);
  return j;
}

enum class KostkaArgumentOrder {
  t_sinv,  // K_{lambda mu}(t, s^{-1}): q -> t, t -> s^{-1}
  sinv_t   // K_{lambda mu}(s^{-1}, t): q -> s^{-1}, t -> t
};

inline Poly2 kostka_in_st(const Poly2& k, KostkaArgumentOrder order) {
  if (order == KostkaArgumentOrder::t_sinv)
    return k.substitute<2>({Exponent<2>{0, 1}, Exponent<2>{-1, 0}}, VarSet::st);
  return k.substitute<2>({Exponent<2>{-1, 0}, Exponent<2>{0, 1}}, VarSet::st);
}

// P_mu(s,t) = sum_lambda s^{n(mu)} K_{lambda mu}(t, s^{-1}) f_lambda(1)
inline Poly2 procesi_fiber(const Partition& mu, KostkaArgumentOrder order = KostkaArgumentOrder::t_sinv) {
  auto km = kostka_macdonald(mu.size());
  const std::size_t m = km->index(mu);
  Poly2 total(VarSet::st);
  for (std::size_t l = 0; l < km->partitions.size(); ++l)
    total += kostka_in_st(km->entries[l][m], order) * Rational(dim_irr(km->partitions[l]));
  return total * mono2(mu.nstat(), 0);
}

// Omega(mu) as its list of cell factors (1 - s^{1+l} t^{-a}), (1 - s^{-l} t^{1+a}).
inline std::vector<Poly2> omega_factors(const Partition& mu) {
  std::vector<Poly2> out;
  for (const auto& c : mu.cells()) {
    out.push_back(Poly2::one_minus({1 + c.leg, -c.arm}));
    out.push_back(Poly2::one_minus({-c.leg, 1 + c.arm}));
  }
  return out;
}

inline RF2 omega(const Partition& mu) {
  Poly2 prod = Poly2::constant(1);
  for (const auto& f : omega_factors(mu)) prod *= f;
  return RF2(prod);
}

inline RF2 omega_inverse(const Partition& mu) { return RF2(Poly2::constant(1), omega_factors(mu)); }

// s^{n(mu)} t^{n(mu^t)}
inline Poly2 line_bundle_fiber(const Partition& mu) { return mono2(mu.nstat(), mu.transpose().nstat()); }

}  // namespace cherpoi
