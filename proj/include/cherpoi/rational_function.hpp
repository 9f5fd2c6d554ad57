#pragma once

// Quotients of Laurent polynomials with the denominator kept as a multiset of
// factors. There is no gcd and no canonical form: equality is decided by
// cross-multiplication after cancelling factors the two sides share.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cherpoi/errors.hpp"
#include "cherpoi/laurent.hpp"
#include "cherpoi/rational.hpp"

namespace cherpoi {

enum class Direction { ascending, descending };

template <std::size_t N>
struct Window {
  Exponent<N> lo;
  Exponent<N> hi;
};

template <std::size_t N>
class RationalFunction {
 public:
  using Poly = LaurentPoly<N>;
  using Exp = Exponent<N>;

  RationalFunction() : num_(default_vars<N>()) {}
  explicit RationalFunction(VarSet vars) : num_(vars) {}
  RationalFunction(Poly num) : num_(std::move(num)) {}  // NOLINT: polynomials embed implicitly
  RationalFunction(Poly num, const std::vector<Poly>& den_factors) : num_(std::move(num)) {
    for (const auto& f : den_factors) divide_by_factor(f);
  }

  static RationalFunction constant(const Rational& c, VarSet vars = default_vars<N>()) {
    return RationalFunction(Poly::constant(c, vars));
  }

  VarSet vars() const { return num_.vars(); }
  const Poly& numerator() const { return num_; }
  const std::vector<Poly>& denominator_factors() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  Poly denominator() const {
    Poly d = Poly::constant(1, vars());
    for (const auto& f : den_) d *= f;
    return d;
  }

  RationalFunction& operator*=(const RationalFunction& o) {
    check_vars(o);
    num_ *= o.num_;
    for (const auto& f : o.den_) insert_factor(f);
    cancel_if_zero();
    return *this;
  }

  RationalFunction& operator*=(const Poly& p) {
    check_poly_vars(p);
    num_ *= p;
    cancel_if_zero();
    return *this;
  }

  RationalFunction& operator*=(const Rational& c) {
    num_ *= c;
    cancel_if_zero();
    return *this;
  }

  RationalFunction& operator/=(const RationalFunction& o) {
    check_vars(o);
    if (o.is_zero()) throw InvalidInput("division by zero rational function");
    for (const auto& f : o.den_) num_ *= f;
    divide_by_factor(o.num_);
    cancel_if_zero();
    return *this;
  }

  RationalFunction& operator/=(const Poly& p) {
    check_poly_vars(p);
    divide_by_factor(p);
    return *this;
  }

  RationalFunction& operator+=(const RationalFunction& o) {
    check_vars(o);
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    // Common denominator: multiset LCM of the two factor lists.
    auto [only_mine, only_theirs, shared] = split_factors(den_, o.den_);
    Poly left = num_;
    for (const auto& f : only_theirs) left *= f;
    Poly right = o.num_;
    for (const auto& f : only_mine) right *= f;
    num_ = left + right;
    std::vector<Poly> lcm = shared;
    lcm.insert(lcm.end(), only_mine.begin(), only_mine.end());
    lcm.insert(lcm.end(), only_theirs.begin(), only_theirs.end());
    std::sort(lcm.begin(), lcm.end());
    den_ = std::move(lcm);
    cancel_if_zero();
    return *this;
  }

  RationalFunction& operator-=(const RationalFunction& o) { return *this += -o; }

  RationalFunction operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const Rational& c) { return a *= c; }
  friend RationalFunction operator*(const Rational& c, RationalFunction a) { return a *= c; }

  friend bool operator==(const RationalFunction& f, const RationalFunction& g) { return rf_equal(f, g); }
  friend bool operator!=(const RationalFunction& f, const RationalFunction& g) { return !rf_equal(f, g); }

  // num(f) * den(g) == num(g) * den(f), after cancelling shared factors.
  friend bool rf_equal(const RationalFunction& f, const RationalFunction& g) {
    f.check_vars(g);
    auto [only_f, only_g, shared] = split_factors(f.den_, g.den_);
    Poly lhs = f.num_;
    for (const auto& d : only_g) lhs *= d;
    Poly rhs = g.num_;
    for (const auto& d : only_f) rhs *= d;
    return lhs == rhs;
  }

  // Apply a monomial substitution factor by factor. A factor that collapses
  // to zero is reported rather than evaluated.
  template <std::size_t M>
  RationalFunction<M> substitute(const std::array<Exponent<M>, N>& images, VarSet target) const {
    RationalFunction<M> r(num_.template substitute<M>(images, target));
    for (const auto& f : den_) {
      auto sf = f.template substitute<M>(images, target);
      if (sf.is_zero()) throw InvalidInput("substitution sends a denominator factor to zero");
      r /= sf;
    }
    return r;
  }

  // Rewrite as P / prod(target) with P a Laurent polynomial, by exact division.
  RationalFunction rewrite_over(const std::vector<Poly>& target) const {
    RationalFunction t(Poly::constant(1, vars()), target);
    auto [only_mine, only_target, shared] = split_factors(den_, t.den_);
    Poly p = num_;
    for (const auto& f : only_target) p *= f;
    for (const auto& f : only_mine) {
      auto q = p.divide_exact(f);
      if (!q) throw InvalidInput("rational function is not expressible over the requested denominator");
      p = std::move(*q);
    }
    // Stored factors are normalised, so the result is over target up to units.
    RationalFunction r(p);
    r.den_ = t.den_;
    return r;
  }

  // Laurent polynomial equal to this function; throws if it is not one.
  Poly to_laurent() const {
    RationalFunction r = rewrite_over({});
    return r.num_;
  }

  // Coefficients of the expansion inside the window. Each factor must be of
  // the form c * m * (1 + g) with every term of g pointing into the chosen
  // direction cone.
  Poly expand_window(const std::array<Direction, N>& dirs, const Window<N>& window) const {
    std::array<std::int64_t, N> sigma;
    for (std::size_t i = 0; i < N; ++i) sigma[i] = dirs[i] == Direction::ascending ? 1 : -1;
    auto flip = [&](const Exp& e) {
      Exp r;
      for (std::size_t i = 0; i < N; ++i) r[i] = sigma[i] * e[i];
      return r;
    };

    Poly shifted_num = num_;
    std::vector<Poly> series_tails;  // the g of each factor, in flipped coordinates
    for (const auto& f : den_) {
      auto [unit_e, unit_c, tail] = orient_factor(f, sigma);
      shifted_num *= Poly::monomial(neg_exp(unit_e), 1 / unit_c, vars());
      series_tails.push_back(std::move(tail));
    }

    Poly result(vars());
    if (shifted_num.is_zero()) return result;

    Exp wlo, whi;
    for (std::size_t i = 0; i < N; ++i) {
      wlo[i] = std::min(sigma[i] * window.lo[i], sigma[i] * window.hi[i]);
      whi[i] = std::max(sigma[i] * window.lo[i], sigma[i] * window.hi[i]);
    }
    Poly fnum = flip_poly(shifted_num, sigma);
    Exp bound;
    for (std::size_t i = 0; i < N; ++i) bound[i] = checked_add(whi[i], -fnum.min_degree(i));
    for (std::size_t i = 0; i < N; ++i)
      if (bound[i] < 0) return result;

    Poly series = Poly::constant(1, vars());
    for (const auto& g : series_tails) series = truncated_mul(series, geometric_inverse(g, bound), bound);

    for (const auto& [en, cn] : fnum.terms()) {
      for (const auto& [es, cs] : series.terms()) {
        Exp e = add_exp(en, es);
        bool inside = true;
        for (std::size_t i = 0; i < N; ++i) inside = inside && e[i] >= wlo[i] && e[i] <= whi[i];
        if (inside) result.add_term(flip(e), cn * cs);
      }
    }
    return result;
  }

  std::string to_string() const {
    std::string s = "(" + num_.to_string() + ")";
    if (den_.empty()) return s;
    s += " / (";
    for (std::size_t i = 0; i < den_.size(); ++i) {
      if (i) s += ")*(";
      s += den_[i].to_string();
    }
    return s + ")";
  }

 private:
  template <std::size_t>
  friend class RationalFunction;

  void check_vars(const RationalFunction& o) const {
    if (vars() != o.vars()) throw InvalidInput("mixed variable sets");
  }
  void check_poly_vars(const Poly& p) const {
    if (vars() != p.vars()) throw InvalidInput("mixed variable sets");
  }

  void cancel_if_zero() {
    if (num_.is_zero()) den_.clear();
  }

  // Factors are stored with their lex-lowest term equal to 1; the unit goes
  // to the numerator. Constant factors are absorbed entirely.
  void divide_by_factor(const Poly& f) {
    if (f.is_zero()) throw InvalidInput("zero denominator factor");
    auto [e, c] = f.lowest_term();
    if (f.is_monomial()) {
      num_ *= Poly::monomial(neg_exp(e), 1 / c, vars());
      return;
    }
    num_ *= Poly::monomial(neg_exp(e), 1 / c, vars());
    Poly normal = f * Poly::monomial(neg_exp(e), 1 / c, vars());
    den_.insert(std::upper_bound(den_.begin(), den_.end(), normal), std::move(normal));
    cancel_if_zero();
  }

  void insert_factor(const Poly& normalised) {
    den_.insert(std::upper_bound(den_.begin(), den_.end(), normalised), normalised);
  }

  struct Split {
    std::vector<Poly> only_a, only_b, shared;
  };

  static Split split_factors(const std::vector<Poly>& a, const std::vector<Poly>& b) {
    Split s;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      if (a[i] < b[j]) {
        s.only_a.push_back(a[i++]);
      } else if (b[j] < a[i]) {
        s.only_b.push_back(b[j++]);
      } else {
        s.shared.push_back(a[i]);
        ++i;
        ++j;
      }
    }
    for (; i < a.size(); ++i) s.only_a.push_back(a[i]);
    for (; j < b.size(); ++j) s.only_b.push_back(b[j]);
    return s;
  }

  struct Oriented {
    Exp unit_exp;
    Rational unit_coeff;
    Poly tail;  // f = c*m*(1 + tail'), tail returned in flipped coordinates
  };

  Oriented orient_factor(const Poly& f, const std::array<std::int64_t, N>& sigma) const {
    // The base term must be componentwise minimal in flipped coordinates.
    const auto& terms = f.terms();
    std::optional<std::pair<Exp, Rational>> base;
    for (const auto& [e, c] : terms) {
      bool minimal = true;
      for (const auto& [e2, c2] : terms) {
        for (std::size_t i = 0; i < N; ++i)
          if (sigma[i] * e2[i] < sigma[i] * e[i]) minimal = false;
      }
      if (minimal) {
        base = std::make_pair(e, c);
        break;
      }
    }
    if (!base) throw ExpansionDirectionError("factor " + f.to_string() + " has no expansion in the chosen direction");
    Poly tail(vars());
    for (const auto& [e, c] : terms) {
      if (e == base->first) continue;
      Exp d = sub_exp(e, base->first);
      Exp fd;
      for (std::size_t i = 0; i < N; ++i) fd[i] = sigma[i] * d[i];
      tail.add_term(fd, c / base->second);
    }
    return {base->first, base->second, std::move(tail)};
  }

  static Poly flip_poly(const Poly& p, const std::array<std::int64_t, N>& sigma) {
    Poly r(p.vars());
    for (const auto& [e, c] : p.terms()) {
      Exp f;
      for (std::size_t i = 0; i < N; ++i) f[i] = sigma[i] * e[i];
      r.add_term(f, c);
    }
    return r;
  }

  static bool within(const Exp& e, const Exp& bound) {
    for (std::size_t i = 0; i < N; ++i)
      if (e[i] > bound[i]) return false;
    return true;
  }

  static Poly truncated_mul(const Poly& a, const Poly& b, const Exp& bound) {
    Poly r(a.vars());
    for (const auto& [ea, ca] : a.terms())
      for (const auto& [eb, cb] : b.terms()) {
        Exp e = add_exp(ea, eb);
        if (within(e, bound)) r.add_term(e, ca * cb);
      }
    return r;
  }

  // 1/(1+g) truncated to the box [0, bound], g supported in the positive cone.
  static Poly geometric_inverse(const Poly& g, const Exp& bound) {
    Poly minus_g = -g;
    Poly sum = Poly::constant(1, g.vars());
    Poly power = sum;
    while (true) {
      power = truncated_mul(power, minus_g, bound);
      if (power.is_zero()) break;
      sum += power;
    }
    return sum;
  }

  Poly num_;
  std::vector<Poly> den_;
};

using RF1 = RationalFunction<1>;
using RF2 = RationalFunction<2>;

// (1 - v^i) for i in [from, to]
inline std::vector<Poly1> one_minus_v_powers(std::int64_t from, std::int64_t to, std::int64_t sign = 1) {
  std::vector<Poly1> out;
  for (std::int64_t i = from; i <= to; ++i) out.push_back(Poly1::one_minus({sign * i}));
  return out;
}

// [n]_v! = prod_{i=1}^n (1 - v^i) / (1 - v)^n
inline RF1 q_factorial(int n) {
  if (n < 1) throw InvalidInput("q_factorial requires n >= 1");
  Poly1 num = Poly1::constant(1);
  for (int i = 1; i <= n; ++i) num *= Poly1::one_minus({i});
  std::vector<Poly1> den(static_cast<std::size_t>(n), Poly1::one_minus({1}));
  return RF1(num, den);
}

inline RF1 vmono(std::int64_t k, const Rational& c = 1) { return RF1(vpow(k, c)); }

// Formal exponent const + coeff * c, the prefix of the standard-module series.
struct CExponent {
  Rational constant = 0;
  std::int64_t c_coeff = 0;

  CExponent& operator+=(const CExponent& o) {
    constant += o.constant;
    c_coeff = checked_add(c_coeff, o.c_coeff);
    return *this;
  }
  friend CExponent operator+(CExponent a, const CExponent& b) { return a += b; }
  friend bool operator==(const CExponent& a, const CExponent& b) {
    return a.constant == b.constant && a.c_coeff == b.c_coeff;
  }
  friend bool operator!=(const CExponent& a, const CExponent& b) { return !(a == b); }

  // Concrete exponent at a given value of the parameter.
  Rational at(const Rational& c) const { return constant + c * c_coeff; }

  std::string to_string(const std::string& param = "c") const {
    std::string s = constant.get_str();
    if (c_coeff > 0) s += " + " + std::to_string(c_coeff) + "*" + param;
    if (c_coeff < 0) s += " - " + std::to_string(-c_coeff) + "*" + param;
    return s;
  }
};

}  // namespace cherpoi
