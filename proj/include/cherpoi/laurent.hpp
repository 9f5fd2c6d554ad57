#pragma once

// Exact Laurent polynomials in one variable (v) or two (s,t / q,t) over Q.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cherpoi/errors.hpp"
#include "cherpoi/rational.hpp"

namespace cherpoi {

enum class VarSet { v, st, qt };

inline std::size_t var_count(VarSet vars) { return vars == VarSet::v ? 1 : 2; }

inline std::vector<std::string> var_names(VarSet vars) {
  switch (vars) {
    case VarSet::v: return {"v"};
    case VarSet::st: return {"s", "t"};
    case VarSet::qt: return {"q", "t"};
  }
  return {};
}

inline VarSet varset_from_names(const std::vector<std::string>& names) {
  if (names == std::vector<std::string>{"v"}) return VarSet::v;
  if (names == std::vector<std::string>{"s", "t"}) return VarSet::st;
  if (names == std::vector<std::string>{"q", "t"}) return VarSet::qt;
  throw InvalidInput("unknown variable set");
}

template <std::size_t N>
using Exponent = std::array<std::int64_t, N>;

template <std::size_t N>
constexpr VarSet default_vars() {
  return N == 1 ? VarSet::v : VarSet::st;
}

template <std::size_t N>
Exponent<N> add_exp(const Exponent<N>& a, const Exponent<N>& b) {
  Exponent<N> r;
  for (std::size_t i = 0; i < N; ++i) r[i] = checked_add(a[i], b[i]);
  return r;
}

template <std::size_t N>
Exponent<N> sub_exp(const Exponent<N>& a, const Exponent<N>& b) {
  Exponent<N> r;
  for (std::size_t i = 0; i < N; ++i) r[i] = checked_add(a[i], -b[i]);
  return r;
}

template <std::size_t N>
Exponent<N> neg_exp(const Exponent<N>& a) {
  Exponent<N> r;
  for (std::size_t i = 0; i < N; ++i) r[i] = -a[i];
  return r;
}

template <std::size_t N>
class LaurentPoly {
 public:
  using Exp = Exponent<N>;
  using Terms = std::map<Exp, Rational>;

  LaurentPoly() : vars_(default_vars<N>()) {}
  explicit LaurentPoly(VarSet vars) : vars_(vars) { check_arity(); }

  static LaurentPoly constant(const Rational& c, VarSet vars = default_vars<N>()) {
    LaurentPoly p(vars);
    if (c != 0) p.terms_[Exp{}] = c;
    return p;
  }

  static LaurentPoly monomial(const Exp& e, const Rational& c = 1, VarSet vars = default_vars<N>()) {
    LaurentPoly p(vars);
    if (c != 0) p.terms_[e] = c;
    return p;
  }

  // 1 - c * x^e, the shape of nearly every denominator factor.
  static LaurentPoly one_minus(const Exp& e, const Rational& c = 1, VarSet vars = default_vars<N>()) {
    return constant(1, vars) - monomial(e, c, vars);
  }

  VarSet vars() const { return vars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coefficient(const Exp& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const Exp& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exp{}); }

  bool is_monomial() const { return terms_.size() == 1; }

  // Lex-smallest and lex-largest terms; caller guarantees nonzero.
  std::pair<Exp, Rational> lowest_term() const {
    require_nonzero();
    return *terms_.begin();
  }
  std::pair<Exp, Rational> leading_term() const {
    require_nonzero();
    return *terms_.rbegin();
  }

  std::int64_t min_degree(std::size_t var) const {
    require_nonzero();
    std::int64_t m = terms_.begin()->first[var];
    for (const auto& [e, c] : terms_) m = std::min(m, e[var]);
    return m;
  }

  std::int64_t max_degree(std::size_t var) const {
    require_nonzero();
    std::int64_t m = terms_.begin()->first[var];
    for (const auto& [e, c] : terms_) m = std::max(m, e[var]);
    return m;
  }

  bool has_nonnegative_integer_coefficients() const {
    for (const auto& [e, c] : terms_)
      if (c < 0 || c.get_den() != 1) return false;
    return true;
  }

  bool is_polynomial() const {
    for (const auto& [e, c] : terms_)
      for (auto x : e)
        if (x < 0) return false;
    return true;
  }

  LaurentPoly operator-() const {
    LaurentPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    check_same_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  LaurentPoly& operator-=(const LaurentPoly& o) {
    check_same_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  LaurentPoly& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const Rational& s) { return a *= s; }
  friend LaurentPoly operator*(const Rational& s, LaurentPoly a) { return a *= s; }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_same_vars(b);
    LaurentPoly r(a.vars_);
    if (a.is_zero() || b.is_zero()) return r;
    const LaurentPoly& small = a.size() <= b.size() ? a : b;
    const LaurentPoly& large = a.size() <= b.size() ? b : a;
    for (const auto& [ea, ca] : small.terms_) {
      for (const auto& [eb, cb] : large.terms_) {
        r.add_term(add_exp(ea, eb), ca * cb);
      }
    }
    return r;
  }

  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_same_vars(b);
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  // Structural order (used to keep factor multisets canonical).
  friend bool operator<(const LaurentPoly& a, const LaurentPoly& b) {
    return std::lexicographical_compare(a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(),
                                        [](const auto& x, const auto& y) {
                                          if (x.first != y.first) return x.first < y.first;
                                          return x.second < y.second;
                                        });
  }

  LaurentPoly shifted(const Exp& e) const {
    LaurentPoly r(vars_);
    for (const auto& [ex, c] : terms_) r.terms_.emplace(add_exp(ex, e), c);
    return r;
  }

  LaurentPoly pow(unsigned k) const {
    LaurentPoly r = constant(1, vars_);
    LaurentPoly base = *this;
    while (k) {
      if (k & 1u) r *= base;
      k >>= 1;
      if (k) base *= base;
    }
    return r;
  }

  Rational evaluate(const std::array<Rational, N>& point) const {
    Rational total = 0;
    for (const auto& [e, c] : terms_) {
      Rational t = c;
      for (std::size_t i = 0; i < N; ++i) t *= cherpoi::pow(point[i], e[i]);
      total += t;
    }
    return total;
  }

  // Monomial substitution: variable j maps to x^{images[j]} in the target ring.
  template <std::size_t M>
  LaurentPoly<M> substitute(const std::array<Exponent<M>, N>& images, VarSet target) const {
    LaurentPoly<M> r(target);
    for (const auto& [e, c] : terms_) {
      Exponent<M> out{};
      for (std::size_t j = 0; j < N; ++j)
        for (std::size_t i = 0; i < M; ++i) out[i] = checked_add(out[i], checked_mul(e[j], images[j][i]));
      r.add_term(out, c);
    }
    return r;
  }

  // Exact division; nullopt when the divisor does not divide.
  std::optional<LaurentPoly> divide_exact(const LaurentPoly& d) const {
    check_same_vars(d);
    if (d.is_zero()) throw InvalidInput("division by the zero polynomial");
    LaurentPoly q(vars_);
    if (is_zero()) return q;
    // Every quotient exponent lies in the box [min(P)-min(D), max(P)-max(D)] per variable.
    Exp lo, hi;
    for (std::size_t i = 0; i < N; ++i) {
      lo[i] = checked_add(min_degree(i), -d.min_degree(i));
      hi[i] = checked_add(max_degree(i), -d.max_degree(i));
      if (lo[i] > hi[i]) return std::nullopt;
    }
    LaurentPoly r = *this;
    const auto [dlead_e, dlead_c] = d.leading_term();
    while (!r.is_zero()) {
      const auto [rl_e, rl_c] = r.leading_term();
      Exp qe = sub_exp(rl_e, dlead_e);
      for (std::size_t i = 0; i < N; ++i)
        if (qe[i] < lo[i] || qe[i] > hi[i]) return std::nullopt;
      Rational qc = rl_c / dlead_c;
      q.add_term(qe, qc);
      for (const auto& [de, dc] : d.terms_) r.add_term(add_exp(qe, de), -qc * dc);
    }
    return q;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    const auto names = var_names(vars_);
    std::ostringstream out;
    bool first = true;
    // Highest-degree term first reads naturally for polynomials in one variable.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      bool unit_monomial = std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
      Rational mag = abs(c);
      if (first) {
        if (c < 0) out << "-";
      } else {
        out << (c < 0 ? " - " : " + ");
      }
      first = false;
      bool wrote = false;
      if (unit_monomial || mag != 1) {
        out << mag.get_str();
        wrote = true;
      }
      for (std::size_t i = 0; i < N; ++i) {
        if (e[i] == 0) continue;
        if (wrote) out << "*";
        out << names[i];
        if (e[i] != 1) out << "^" << (e[i] < 0 ? "(" + std::to_string(e[i]) + ")" : std::to_string(e[i]));
        wrote = true;
      }
    }
    return out.str();
  }

 private:
  void check_arity() const {
    if (var_count(vars_) != N) throw InvalidInput("variable set does not match polynomial arity");
  }
  void check_same_vars(const LaurentPoly& o) const {
    if (vars_ != o.vars_) throw InvalidInput("mixed variable sets");
  }
  void require_nonzero() const {
    if (terms_.empty()) throw InvalidInput("operation undefined on the zero polynomial");
  }

  VarSet vars_;
  Terms terms_;
};

using Poly1 = LaurentPoly<1>;
using Poly2 = LaurentPoly<2>;

// v^k
inline Poly1 vpow(std::int64_t k, const Rational& c = 1) { return Poly1::monomial({k}, c); }

// s^a t^b (or q^a t^b with vars = qt)
inline Poly2 mono2(std::int64_t a, std::int64_t b, const Rational& c = 1, VarSet vars = VarSet::st) {
  return Poly2::monomial({a, b}, c, vars);
}

}  // namespace cherpoi
