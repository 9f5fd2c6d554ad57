#pragma once

// Characters of the symmetric group: Murnaghan-Nakayama on beta-sets, class
// sizes, Kronecker coefficients, and fake degrees by two routes (hook product
// and major index over standard tableaux).

#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <vector>

#include "cherpoi/errors.hpp"
#include "cherpoi/laurent.hpp"
#include "cherpoi/partition.hpp"
#include "cherpoi/rational.hpp"
#include "cherpoi/rational_function.hpp"

namespace cherpoi {

inline constexpr int kMaxCharacterTableN = 12;

// z_rho = prod_i i^{m_i} m_i!
inline Integer centralizer_order(const Partition& rho) {
  std::map<int, unsigned> mult;
  for (int p : rho.parts()) ++mult[p];
  Integer z = 1;
  for (auto [part, m] : mult) {
    Integer pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(part), m);
    z *= pw * factorial(m);
  }
  return z;
}

inline int sign_of_class(const Partition& rho) {
  int even_cycles = 0;
  for (int p : rho.parts())
    if (p % 2 == 0) ++even_cycles;
  return even_cycles % 2 == 0 ? 1 : -1;
}

namespace detail {

using BetaSet = std::vector<int>;  // strictly decreasing

inline BetaSet beta_set(const std::vector<int>& parts) {
  const int len = static_cast<int>(parts.size());
  BetaSet b(parts.size());
  for (int i = 0; i < len; ++i) b[static_cast<std::size_t>(i)] = parts[static_cast<std::size_t>(i)] + (len - 1 - i);
  return b;
}

inline std::vector<int> parts_from_beta(BetaSet b) {
  std::sort(b.begin(), b.end(), std::greater<>());
  const int len = static_cast<int>(b.size());
  std::vector<int> parts;
  for (int i = 0; i < len; ++i) {
    int p = b[static_cast<std::size_t>(i)] - (len - 1 - i);
    if (p > 0) parts.push_back(p);
  }
  return parts;
}

class MurnaghanNakayama {
 public:
  long value(const std::vector<int>& lambda, const std::vector<int>& rho, std::size_t from) {
    if (from == rho.size()) return lambda.empty() ? 1 : 0;
    auto key = std::make_pair(lambda, std::vector<int>(rho.begin() + static_cast<std::ptrdiff_t>(from), rho.end()));
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    const int r = rho[from];
    BetaSet beta = beta_set(lambda);
    std::set<int> occupied(beta.begin(), beta.end());
    long total = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
      int b = beta[i];
      int target = b - r;
      if (target < 0 || occupied.count(target)) continue;
      int between = 0;
      for (int x : beta)
        if (x > target && x < b) ++between;
      BetaSet next = beta;
      next[i] = target;
      long sub = value(parts_from_beta(next), rho, from + 1);
      total += (between % 2 == 0 ? sub : -sub);
    }
    memo_[key] = total;
    return total;
  }

 private:
  std::map<std::pair<std::vector<int>, std::vector<int>>, long> memo_;
};

}  // namespace detail

class CharacterTable {
 public:
  explicit CharacterTable(int n) : n_(n), partitions_(enumerate_partitions(n)) {
    if (n > kMaxCharacterTableN) throw ResourceError("character table n exceeds configured bound");
    const std::size_t k = partitions_.size();
    for (std::size_t i = 0; i < k; ++i) index_[partitions_[i]] = i;
    values_.assign(k, std::vector<long>(k, 0));
    detail::MurnaghanNakayama mn;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) values_[i][j] = mn.value(partitions_[i].parts(), partitions_[j].parts(), 0);
    }
    for (const auto& rho : partitions_) centralizers_.push_back(centralizer_order(rho));
  }

  int n() const { return n_; }
  // Irreducibles and classes are both indexed by this list.
  const std::vector<Partition>& partitions() const { return partitions_; }
  std::size_t index(const Partition& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) throw InvalidInput("partition " + p.to_string() + " is not of size " + std::to_string(n_));
    return it->second;
  }

  long value(std::size_t irr, std::size_t cls) const { return values_[irr][cls]; }
  long value(const Partition& irr, const Partition& cls) const { return values_[index(irr)][index(cls)]; }
  const Integer& centralizer(std::size_t cls) const { return centralizers_[cls]; }
  const std::vector<std::vector<long>>& values() const { return values_; }

 private:
  int n_;
  std::vector<Partition> partitions_;
  std::map<Partition, std::size_t> index_;
  std::vector<std::vector<long>> values_;
  std::vector<Integer> centralizers_;
};

// Tables are built once per n and shared.
inline std::shared_ptr<const CharacterTable> character_table(int n) {
  if (n < 1 || n > kMaxCharacterTableN) throw ResourceError("character table n out of bounds");
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const CharacterTable>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = std::make_shared<const CharacterTable>(n);
  return slot;
}

inline Integer dim_irr(const Partition& mu) { return syt_count(mu); }

// <chi_lambda chi_mu, chi_nu>
inline long kronecker(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (lambda.size() != mu.size() || mu.size() != nu.size())
    throw InvalidInput("kronecker coefficients need partitions of one size");
  auto table = character_table(lambda.size());
  std::size_t a = table->index(lambda), b = table->index(mu), c = table->index(nu);
  Rational total = 0;
  for (std::size_t r = 0; r < table->partitions().size(); ++r) {
    Integer prod = Integer(table->value(a, r)) * table->value(b, r) * table->value(c, r);
    total += Rational(prod) / Rational(table->centralizer(r));
  }
  return to_long(total);
}

// Decomposition of a class function given by its values on the classes.
inline std::map<Partition, Rational> decompose_class_function(int n, const std::vector<Rational>& values) {
  auto table = character_table(n);
  std::map<Partition, Rational> out;
  for (std::size_t i = 0; i < table->partitions().size(); ++i) {
    Rational m = 0;
    for (std::size_t r = 0; r < table->partitions().size(); ++r)
      m += values[r] * table->value(i, r) / Rational(table->centralizer(r));
    if (m != 0) out[table->partitions()[i]] = m;
  }
  return out;
}

// f_mu(v) = v^{n(mu)} prod_{i=1}^n (1 - v^i) / prod_{x in mu} (1 - v^{h(x)})
inline Poly1 fake_degree(const Partition& mu) {
  Poly1 num = vpow(mu.nstat());
  for (int i = 1; i <= mu.size(); ++i) num *= Poly1::one_minus({i});
  std::vector<Poly1> den;
  for (int h : mu.hooks()) den.push_back(Poly1::one_minus({h}));
  return RF1(num, den).to_laurent();
}

// sum over standard tableaux of v^maj
inline Poly1 fake_degree_maj(const Partition& mu) {
  Poly1 f;
  for (const auto& t : enumerate_syt(mu)) f.add_term({t.maj}, 1);
  return f;
}

// f(v^{-1})
inline Poly1 invert_variable(const Poly1& f) { return f.substitute<1>({Exponent<1>{-1}}, VarSet::v); }

inline Rational at_one(const Poly1& f) { return f.evaluate({Rational(1)}); }

// Multiplicity map of the tensor product lambda (x) mu.
inline std::map<Partition, long> tensor_decomposition(const Partition& lambda, const Partition& mu) {
  std::map<Partition, long> out;
  for (const auto& nu : enumerate_partitions(lambda.size())) {
    long k = kronecker(lambda, mu, nu);
    if (k) out[nu] = k;
  }
  return out;
}

}  // namespace cherpoi
