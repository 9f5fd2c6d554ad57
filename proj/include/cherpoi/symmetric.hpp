#pragma once

// Degree-n symmetric functions as coefficient vectors over partitions of n in
// the monomial, power-sum or Schur basis. Coefficients live in Q(q,t).

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "cherpoi/errors.hpp"
#include "cherpoi/linalg.hpp"
#include "cherpoi/partition.hpp"
#include "cherpoi/rational_function.hpp"
#include "cherpoi/sn_rep.hpp"

namespace cherpoi {

enum class SymBasis { monomial, power_sum, schur };

inline std::string basis_name(SymBasis b) {
  switch (b) {
    case SymBasis::monomial: return "monomial";
    case SymBasis::power_sum: return "power-sum";
    case SymBasis::schur: return "schur";
  }
  return "";
}

// Field element in q, t.
using QtFunction = RF2;

inline QtFunction qt_constant(const Rational& c) { return QtFunction::constant(c, VarSet::qt); }
inline Poly2 qt_poly(const Rational& c) { return Poly2::constant(c, VarSet::qt); }
inline Poly2 qt_mono(std::int64_t a, std::int64_t b, const Rational& c = 1) { return mono2(a, b, c, VarSet::qt); }

namespace detail {

// Coefficient of x^lambda in p_rho: assignments of the parts of rho to the
// rows of lambda filling each row exactly.
inline long count_fillings(const std::vector<int>& rho, std::size_t next, std::vector<int>& room) {
  if (next == rho.size()) {
    for (int r : room)
      if (r) return 0;
    return 1;
  }
  long total = 0;
  for (auto& r : room) {
    if (r < rho[next]) continue;
    r -= rho[next];
    total += count_fillings(rho, next + 1, room);
    r += rho[next];
  }
  return total;
}

}  // namespace detail

// Transition matrices among the three bases for one n. Index order is the
// order of enumerate_partitions(n).
class SymmetricTransitions {
 public:
  explicit SymmetricTransitions(int n) : n_(n), table_(character_table(n)) {
    const auto& ps = table_->partitions();
    const std::size_t k = ps.size();
    p_to_m_.assign(k, std::vector<Integer>(k, 0));
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t l = 0; l < k; ++l) {
        std::vector<int> room = ps[l].parts();
        p_to_m_[r][l] = detail::count_fillings(ps[r].parts(), 0, room);
      }
    auto inv = bareiss_inverse(p_to_m_);
    if (!inv) throw InternalConsistencyError("power-sum to monomial transition is singular");
    m_to_p_ = std::move(*inv);
  }

  int n() const { return n_; }
  const std::vector<Partition>& partitions() const { return table_->partitions(); }
  std::size_t index(const Partition& p) const { return table_->index(p); }
  const CharacterTable& characters() const { return *table_; }

  // p_rho = sum_lambda p_to_m[rho][lambda] m_lambda
  const ZMatrix& p_to_m() const { return p_to_m_; }
  // m_lambda = sum_rho m_to_p[lambda][rho] p_rho
  const QMatrix& m_to_p() const { return m_to_p_; }
  // s_lambda = sum_rho chi_lambda(rho) / z_rho p_rho
  Rational s_to_p(std::size_t lambda, std::size_t rho) const {
    return Rational(table_->value(lambda, rho)) / Rational(table_->centralizer(rho));
  }
  // p_rho = sum_lambda chi_lambda(rho) s_lambda
  Rational p_to_s(std::size_t rho, std::size_t lambda) const { return table_->value(lambda, rho); }

 private:
  int n_;
  std::shared_ptr<const CharacterTable> table_;
  ZMatrix p_to_m_;
  QMatrix m_to_p_;
};

inline std::shared_ptr<const SymmetricTransitions> symmetric_transitions(int n) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const SymmetricTransitions>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = std::make_shared<const SymmetricTransitions>(n);
  return slot;
}

struct SymmetricFunction {
  int n = 0;
  SymBasis basis = SymBasis::monomial;
  std::vector<QtFunction> coeffs;

  static SymmetricFunction basis_element(int n, SymBasis b, const Partition& lambda) {
    auto tr = symmetric_transitions(n);
    SymmetricFunction f{n, b, std::vector<QtFunction>(tr->partitions().size(), QtFunction(VarSet::qt))};
    f.coeffs[tr->index(lambda)] = qt_constant(1);
    return f;
  }

  const QtFunction& operator[](const Partition& lambda) const { return coeffs.at(symmetric_transitions(n)->index(lambda)); }
};

namespace detail {

inline std::vector<QtFunction> transform(const std::vector<QtFunction>& c, std::size_t k,
                                         const std::function<Rational(std::size_t, std::size_t)>& t) {
  std::vector<QtFunction> out(k, QtFunction(VarSet::qt));
  for (std::size_t a = 0; a < k; ++a) {
    if (c[a].is_zero()) continue;
    for (std::size_t b = 0; b < k; ++b) {
      Rational x = t(a, b);
      if (x != 0) out[b] += c[a] * x;
    }
  }
  return out;
}

}  // namespace detail

inline SymmetricFunction to_power_sums(const SymmetricFunction& f) {
  auto tr = symmetric_transitions(f.n);
  const std::size_t k = tr->partitions().size();
  if (f.coeffs.size() != k) throw InvalidInput("coefficient vector does not match degree");
  switch (f.basis) {
    case SymBasis::power_sum: return f;
    case SymBasis::monomial:
      return {f.n, SymBasis::power_sum,
              detail::transform(f.coeffs, k, [&](std::size_t a, std::size_t b) { return tr->m_to_p()[a][b]; })};
    case SymBasis::schur:
      return {f.n, SymBasis::power_sum,
              detail::transform(f.coeffs, k, [&](std::size_t a, std::size_t b) { return tr->s_to_p(a, b); })};
  }
  return f;
}

inline SymmetricFunction convert(const SymmetricFunction& f, SymBasis target) {
  if (f.basis == target) return f;
  SymmetricFunction p = to_power_sums(f);
  auto tr = symmetric_transitions(f.n);
  const std::size_t k = tr->partitions().size();
  switch (target) {
    case SymBasis::power_sum: return p;
    case SymBasis::monomial:
      return {f.n, target,
              detail::transform(p.coeffs, k, [&](std::size_t a, std::size_t b) { return Rational(tr->p_to_m()[a][b]); })};
    case SymBasis::schur:
      return {f.n, target, detail::transform(p.coeffs, k, [&](std::size_t a, std::size_t b) { return tr->p_to_s(a, b); })};
  }
  return p;
}

inline bool sym_equal(const SymmetricFunction& f, const SymmetricFunction& g) {
  if (f.n != g.n) throw InvalidInput("degree mismatch");
  SymmetricFunction a = to_power_sums(f), b = to_power_sums(g);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    if (!rf_equal(a.coeffs[i], b.coeffs[i])) return false;
  return true;
}

// prod_i (1 - x^{rho_i}) in the chosen variable (index 0 = q, 1 = t).
inline Poly2 one_minus_power_product(const Partition& rho, std::size_t var) {
  Poly2 r = qt_poly(1);
  for (int part : rho.parts()) {
    Exponent<2> e{0, 0};
    e[var] = part;
    r *= Poly2::one_minus(e, 1, VarSet::qt);
  }
  return r;
}

// <p_lambda, p_mu>_{q,t} = delta z_lambda prod (1 - q^{lambda_i}) / (1 - t^{lambda_i})
inline QtFunction power_sum_pairing(const Partition& rho) {
  std::vector<Poly2> den;
  for (int part : rho.parts()) den.push_back(Poly2::one_minus({0, part}, 1, VarSet::qt));
  return QtFunction(one_minus_power_product(rho, 0) * Rational(centralizer_order(rho)), den);
}

inline QtFunction qt_inner_product(const SymmetricFunction& f, const SymmetricFunction& g) {
  if (f.n != g.n) throw InvalidInput("degree mismatch");
  SymmetricFunction a = to_power_sums(f), b = to_power_sums(g);
  auto tr = symmetric_transitions(f.n);
  QtFunction total(VarSet::qt);
  for (std::size_t r = 0; r < a.coeffs.size(); ++r) {
    if (a.coeffs[r].is_zero() || b.coeffs[r].is_zero()) continue;
    total += a.coeffs[r] * b.coeffs[r] * power_sum_pairing(tr->partitions()[r]);
  }
  return total;
}

// S_lambda: the Schur function under p_r -> (1 - t^r) p_r, in the power-sum basis.
inline SymmetricFunction transformed_schur(const Partition& lambda) {
  const int n = lambda.size();
  auto tr = symmetric_transitions(n);
  const std::size_t l = tr->index(lambda);
  SymmetricFunction f{n, SymBasis::power_sum, {}};
  for (std::size_t r = 0; r < tr->partitions().size(); ++r)
    f.coeffs.emplace_back(one_minus_power_product(tr->partitions()[r], 1) * tr->s_to_p(l, r));
  return f;
}

}  // namespace cherpoi
