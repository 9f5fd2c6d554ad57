#pragma once

// Brute-force linear algebra on C[h + h*] for small n.
//
// Coordinates: x-side u_i = x_i - x_{i+1}, y-side w_i the matching coordinates
// on the dual, i = 1..n-1. Bidegree (a, b) is (x-degree, y-degree). Every
// space is stored per bidegree cell as an echelon basis over Q on the
// monomials of that cell.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "cherpoi/errors.hpp"
#include "cherpoi/linalg.hpp"
#include "cherpoi/partition.hpp"
#include "cherpoi/rational.hpp"
#include "cherpoi/sn_rep.hpp"

namespace cherpoi {

inline constexpr int kOracleMaxN = 4;
inline constexpr int kOracleMaxBidegree = 18;
inline constexpr int kOracleMaxDegreeN4 = 8;

using IntMatrix = std::vector<std::vector<long>>;

inline IntMatrix int_multiply(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t k = a.size();
  IntMatrix r(k, std::vector<long>(k, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t l = 0; l < k; ++l)
      for (std::size_t j = 0; j < k; ++j) r[i][j] += a[i][l] * b[l][j];
  return r;
}

inline IntMatrix int_identity(std::size_t k) {
  IntMatrix r(k, std::vector<long>(k, 0));
  for (std::size_t i = 0; i < k; ++i) r[i][i] = 1;
  return r;
}

inline long int_determinant(IntMatrix m) {
  QMatrix q(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (long x : m[i]) q[i].push_back(Rational(x));
  Rational det = 1;
  const std::size_t k = q.size();
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t piv = c;
    while (piv < k && q[piv][c] == 0) ++piv;
    if (piv == k) return 0;
    if (piv != c) {
      std::swap(q[piv], q[c]);
      det = -det;
    }
    det *= q[c][c];
    for (std::size_t i = c + 1; i < k; ++i) {
      Rational f = q[i][c] / q[c][c];
      for (std::size_t j = c; j < k; ++j) q[i][j] -= f * q[c][j];
    }
  }
  return to_long(det);
}

// Matrix of a permutation on h in the basis u_i = x_i - x_{i+1}; column j is
// the image of u_j. perm is one-line notation on 0..n-1.
inline IntMatrix permutation_matrix_on_h(const std::vector<int>& perm) {
  const std::size_t n = perm.size(), r = n - 1;
  IntMatrix m(r, std::vector<long>(r, 0));
  for (std::size_t j = 0; j < r; ++j) {
    int p = perm[j], q = perm[j + 1];
    // x_p - x_q = +-(u_min + ... + u_{max-1})
    int lo = std::min(p, q), hi = std::max(p, q);
    long sign = p < q ? 1 : -1;
    for (int i = lo; i < hi; ++i) m[static_cast<std::size_t>(i)][j] += sign;
  }
  return m;
}

// Inverse-transpose; the generators are integral with determinant +-1.
inline IntMatrix dual_matrix(const IntMatrix& m) {
  QMatrix q(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (long x : m[i]) q[i].push_back(Rational(x));
  auto inv = solve(q, identity_matrix(m.size()));
  if (!inv) throw InternalConsistencyError("reflection matrix is singular");
  IntMatrix r(m.size(), std::vector<long>(m.size(), 0));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) r[i][j] = to_long((*inv)[j][i]);
  return r;
}

struct ReflectionAction {
  int n = 0;
  std::vector<IntMatrix> generators;       // s_1..s_{n-1} on h
  std::vector<IntMatrix> dual_generators;  // the same on h*
};

inline void require_oracle_rank(int n) {
  if (n < 2 || n > kOracleMaxN) throw ResourceError("oracle supports 2 <= n <= " + std::to_string(kOracleMaxN));
}

inline ReflectionAction reflection_action(int n) {
  require_oracle_rank(n);
  ReflectionAction act{n, {}, {}};
  for (int i = 0; i + 1 < n; ++i) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(i + 1)]);
    act.generators.push_back(permutation_matrix_on_h(perm));
    act.dual_generators.push_back(dual_matrix(act.generators.back()));
  }
  return act;
}

using Bidegree = std::pair<int, int>;

struct OracleWindow {
  int max_a = 0;
  int max_b = 0;
  int max_total = -1;  // negative: no cap on a + b

  bool contains(int a, int b) const {
    return a >= 0 && b >= 0 && a <= max_a && b <= max_b && (max_total < 0 || a + b <= max_total);
  }
  OracleWindow enlarged(int by) const {
    return {max_a + by, max_b + by, max_total < 0 ? -1 : max_total + 2 * by};
  }
};

struct BigradedDims {
  OracleWindow window;
  std::map<Bidegree, long> dims;

  long at(int a, int b) const {
    auto it = dims.find({a, b});
    return it == dims.end() ? 0 : it->second;
  }
};

// Sum of dimensions along each diagonal a - b = g.
struct DiagonalDims {
  std::map<long, long> dims;
  std::map<long, bool> saturated;
};

inline void check_oracle_budget(int n, int d, const OracleWindow& w) {
  require_oracle_rank(n);
  if (d < 0) throw InvalidInput("d must be nonnegative");
  if (w.max_a < 0 || w.max_b < 0) throw InvalidInput("window bounds must be nonnegative");
  if (n <= 3) {
    if (d > 3) throw ResourceError("oracle budget: n <= 3 allows d <= 3");
    if (w.max_a > kOracleMaxBidegree || w.max_b > kOracleMaxBidegree)
      throw ResourceError("oracle budget: bidegree bound above " + std::to_string(kOracleMaxBidegree));
    return;
  }
  if (d > 1) throw ResourceError("oracle budget: n = 4 allows d <= 1");
  int total = w.max_total < 0 ? w.max_a + w.max_b : std::min(w.max_total, w.max_a + w.max_b);
  if (total > kOracleMaxDegreeN4)
    throw ResourceError("oracle budget: n = 4 allows total degree <= " + std::to_string(kOracleMaxDegreeN4));
}

namespace detail {

using Exps = std::vector<int>;
using OPoly = std::map<Exps, Rational>;

inline void add_into(OPoly& acc, const OPoly& f, const Rational& c = 1) {
  for (const auto& [e, x] : f) {
    auto [it, fresh] = acc.emplace(e, x * c);
    if (!fresh) {
      it->second += x * c;
      if (it->second == 0) acc.erase(it);
    }
  }
}

inline OPoly poly_multiply(const OPoly& f, const OPoly& g) {
  OPoly r;
  for (const auto& [e1, c1] : f)
    for (const auto& [e2, c2] : g) {
      Exps e(e1.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
      auto [it, fresh] = r.emplace(std::move(e), c1 * c2);
      if (!fresh) {
        it->second += c1 * c2;
        if (it->second == 0) r.erase(it);
      }
    }
  return r;
}

inline void compositions(int total, int parts, Exps& cur, std::vector<Exps>& out) {
  if (parts == 1) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int k = total; k >= 0; --k) {
    cur.push_back(k);
    compositions(total - k, parts - 1, cur, out);
    cur.pop_back();
  }
}

struct Cell {
  std::vector<Exps> monomials;
  std::map<Exps, std::size_t> index;
};

struct GroupElement {
  std::vector<int> perm;
  Partition cycle_type;
  int sign = 1;
  IntMatrix x_matrix, y_matrix;
};

inline Partition cycle_type_of(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size(), false);
  std::vector<int> parts;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
      seen[j] = true;
      ++len;
    }
    parts.push_back(len);
  }
  std::sort(parts.rbegin(), parts.rend());
  return Partition(parts);
}

}  // namespace detail

// The ring C[h + h*] for one n with the W-action, cell indexing and the
// fundamental invariants. Not thread-safe; each computation owns one.
class DiagonalRing {
 public:
  using Exps = detail::Exps;
  using OPoly = detail::OPoly;

  explicit DiagonalRing(int n) : n_(n), r_(n - 1) {
    require_oracle_rank(n);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
      detail::GroupElement g;
      g.perm = perm;
      g.cycle_type = detail::cycle_type_of(perm);
      g.sign = sign_of_class(g.cycle_type);
      g.x_matrix = permutation_matrix_on_h(perm);
      g.y_matrix = dual_matrix(g.x_matrix);
      group_.push_back(std::move(g));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  int n() const { return n_; }
  int rank() const { return r_; }
  std::size_t variables() const { return static_cast<std::size_t>(2 * r_); }
  const std::vector<detail::GroupElement>& group() const { return group_; }

  const detail::Cell& cell(int a, int b) {
    auto key = Bidegree{a, b};
    auto it = cells_.find(key);
    if (it != cells_.end()) return it->second;
    detail::Cell c;
    std::vector<Exps> xs, ys;
    Exps cur;
    detail::compositions(a, r_, cur, xs);
    detail::compositions(b, r_, cur, ys);
    for (const auto& x : xs)
      for (const auto& y : ys) {
        Exps e = x;
        e.insert(e.end(), y.begin(), y.end());
        c.index.emplace(e, c.monomials.size());
        c.monomials.push_back(std::move(e));
      }
    return cells_.emplace(key, std::move(c)).first->second;
  }

  std::size_t cell_size(int a, int b) { return cell(a, b).monomials.size(); }

  SparseVec to_vector(const OPoly& f, int a, int b) {
    const auto& c = cell(a, b);
    std::map<std::size_t, Rational> m;
    for (const auto& [e, x] : f) {
      auto it = c.index.find(e);
      if (it == c.index.end()) throw InternalConsistencyError("polynomial is not homogeneous of the cell's bidegree");
      m[it->second] = x;
    }
    return sparse_from_map(m);
  }

  OPoly to_poly(const SparseVec& v, int a, int b) {
    const auto& c = cell(a, b);
    OPoly f;
    for (const auto& [i, x] : v) f.emplace(c.monomials[i], x);
    return f;
  }

  // Multiply a cell vector by variable var (0..r-1 x-side, r..2r-1 y-side).
  SparseVec shift(const SparseVec& v, int a, int b, std::size_t var) {
    const auto& src = cell(a, b);
    const bool xside = var < static_cast<std::size_t>(r_);
    const auto& dst = cell(a + (xside ? 1 : 0), b + (xside ? 0 : 1));
    SparseVec out;
    out.reserve(v.size());
    for (const auto& [i, x] : v) {
      Exps e = src.monomials[i];
      ++e[var];
      out.emplace_back(dst.index.at(e), x);
    }
    std::sort(out.begin(), out.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
    return out;
  }

  // g acting on one monomial by substitution.
  OPoly act_on_monomial(std::size_t g, const Exps& e) {
    OPoly r{{Exps(variables(), 0), Rational(1)}};
    for (std::size_t var = 0; var < variables(); ++var)
      if (e[var]) r = detail::poly_multiply(r, variable_power(g, var, e[var]));
    return r;
  }

  OPoly act(std::size_t g, const OPoly& f) {
    OPoly r;
    for (const auto& [e, x] : f) detail::add_into(r, act_on_monomial(g, e), x);
    return r;
  }

  // sum_g chi(g) g.f with chi the sign (alternating) or trivial character;
  // the 1/|W| normalisation is irrelevant for spans.
  OPoly project(const OPoly& f, bool alternating) {
    OPoly r;
    for (std::size_t g = 0; g < group_.size(); ++g) {
      const int s = alternating ? group_[g].sign : 1;
      detail::add_into(r, act(g, f), Rational(s));
    }
    return r;
  }

  // Centered power sum sum_j x_j^k on the sum-zero hyperplane, in u-coordinates.
  const OPoly& fundamental_invariant(int k) {
    auto it = invariants_.find(k);
    if (it != invariants_.end()) return it->second;
    OPoly total;
    for (int j = 0; j < n_; ++j) {
      // x_j = (1/n) sum_l (x_j - x_l)
      OPoly lin;
      for (int l = 0; l < n_; ++l) {
        if (l == j) continue;
        int lo = std::min(j, l), hi = std::max(j, l);
        Rational s = j < l ? make_rational(1, n_) : make_rational(-1, n_);
        for (int i = lo; i < hi; ++i) {
          Exps e(variables(), 0);
          e[static_cast<std::size_t>(i)] = 1;
          detail::add_into(lin, OPoly{{e, s}});
        }
      }
      OPoly p{{Exps(variables(), 0), Rational(1)}};
      for (int m = 0; m < k; ++m) p = detail::poly_multiply(p, lin);
      detail::add_into(total, p);
    }
    return invariants_.emplace(k, std::move(total)).first->second;
  }

 private:
  const OPoly& variable_power(std::size_t g, std::size_t var, int k) {
    auto key = std::make_tuple(g, var, k);
    auto it = powers_.find(key);
    if (it != powers_.end()) return it->second;
    OPoly p;
    if (k == 1) {
      const bool xside = var < static_cast<std::size_t>(r_);
      const auto& m = xside ? group_[g].x_matrix : group_[g].y_matrix;
      const std::size_t j = xside ? var : var - static_cast<std::size_t>(r_);
      const std::size_t offset = xside ? 0 : static_cast<std::size_t>(r_);
      for (std::size_t i = 0; i < static_cast<std::size_t>(r_); ++i)
        if (m[i][j]) {
          Exps e(variables(), 0);
          e[offset + i] = 1;
          p.emplace(e, Rational(m[i][j]));
        }
    } else {
      p = detail::poly_multiply(variable_power(g, var, k - 1), variable_power(g, var, 1));
    }
    return powers_.emplace(key, std::move(p)).first->second;
  }

  int n_, r_;
  std::vector<detail::GroupElement> group_;
  std::map<Bidegree, detail::Cell> cells_;
  std::map<std::tuple<std::size_t, std::size_t, int>, OPoly> powers_;
  std::map<int, OPoly> invariants_;
};

namespace detail {

inline std::vector<Bidegree> cells_in_window(const OracleWindow& w) {
  std::vector<Bidegree> out;
  for (int total = 0; total <= w.max_a + w.max_b; ++total)
    for (int a = 0; a <= total; ++a)
      if (w.contains(a, total - a)) out.emplace_back(a, total - a);
  return out;
}

inline std::vector<SparseVec> basis_rows(const EchelonBasis& e) {
  std::vector<SparseVec> out;
  for (const auto& [k, row] : e.rows()) out.push_back(row);
  return out;
}

}  // namespace detail

// A^1 per cell: the image of the antisymmetriser.
class AlternantSpaces {
 public:
  explicit AlternantSpaces(DiagonalRing& ring) : ring_(ring) {}

  const EchelonBasis& at(int a, int b) {
    auto it = spaces_.find({a, b});
    if (it != spaces_.end()) return it->second;
    EchelonBasis e;
    const auto& c = ring_.cell(a, b);
    // monomials in one W-orbit give proportional images, so skip repeats
    std::map<DiagonalRing::Exps, bool> done;
    for (const auto& m : c.monomials) {
      if (done.count(m)) continue;
      auto img = ring_.project({{m, Rational(1)}}, true);
      for (const auto& [mono, x] : img) done[mono] = true;
      if (!img.empty()) e.insert(ring_.to_vector(img, a, b));
    }
    return spaces_.emplace(Bidegree{a, b}, std::move(e)).first->second;
  }

 private:
  DiagonalRing& ring_;
  std::map<Bidegree, EchelonBasis> spaces_;
};

// J^d on a window, built from minimal ideal generators: J^1 is generated by
// A^1 and J^d = J^1 J^{d-1} by products of the respective generators.
class IdealPowers {
 public:
  IdealPowers(DiagonalRing& ring, OracleWindow window) : ring_(ring), window_(window), alternants_(ring) {}

  const std::map<Bidegree, EchelonBasis>& power(int d) {
    while (static_cast<int>(levels_.size()) <= d) build(static_cast<int>(levels_.size()));
    return levels_[static_cast<std::size_t>(d)].cells;
  }

  const std::map<Bidegree, std::vector<SparseVec>>& generators(int d) {
    power(d);
    return levels_[static_cast<std::size_t>(d)].generators;
  }

  AlternantSpaces& alternants() { return alternants_; }
  DiagonalRing& ring() { return ring_; }
  const OracleWindow& window() const { return window_; }

 private:
  struct Level {
    std::map<Bidegree, EchelonBasis> cells;
    std::map<Bidegree, std::vector<SparseVec>> generators;
  };

  void build(int d) {
    Level lv;
    for (const auto& [a, b] : detail::cells_in_window(window_)) {
      EchelonBasis e;
      const std::size_t full = ring_.cell_size(a, b);
      for (std::size_t var = 0; var < ring_.variables() && e.size() < full; ++var) {
        const bool xside = var < static_cast<std::size_t>(ring_.rank());
        int pa = a - (xside ? 1 : 0), pb = b - (xside ? 0 : 1);
        auto prev = lv.cells.find({pa, pb});
        if (prev == lv.cells.end()) continue;
        for (const auto& [k, row] : prev->second.rows()) {
          e.insert(ring_.shift(row, pa, pb, var));
          if (e.size() == full) break;
        }
      }
      std::vector<SparseVec> fresh;
      auto offer = [&](SparseVec v) {
        if (e.size() == full) return;
        SparseVec red = e.reduce(v);
        if (red.empty()) return;
        e.insert(v);
        fresh.push_back(std::move(v));
      };
      if (d == 0) {
        if (a == 0 && b == 0) offer(SparseVec{{0, Rational(1)}});
      } else if (d == 1) {
        for (const auto& row : detail::basis_rows(alternants_.at(a, b))) offer(row);
      } else {
        const auto& g1 = generators(1);
        const auto& gprev = levels_[static_cast<std::size_t>(d - 1)].generators;
        for (const auto& [c1, v1] : g1) {
          Bidegree c2{a - c1.first, b - c1.second};
          auto it = gprev.find(c2);
          if (it == gprev.end()) continue;
          for (const auto& x : v1)
            for (const auto& y : it->second) {
              auto prod = detail::poly_multiply(ring_.to_poly(x, c1.first, c1.second),
                                                ring_.to_poly(y, c2.first, c2.second));
              if (!prod.empty()) offer(ring_.to_vector(prod, a, b));
            }
        }
      }
      if (!fresh.empty()) lv.generators.emplace(Bidegree{a, b}, std::move(fresh));
      if (e.size()) lv.cells.emplace(Bidegree{a, b}, std::move(e));
    }
    levels_.push_back(std::move(lv));
  }

  DiagonalRing& ring_;
  OracleWindow window_;
  AlternantSpaces alternants_;
  std::vector<Level> levels_;
};

inline BigradedDims dims_of(const std::map<Bidegree, EchelonBasis>& cells, const OracleWindow& w) {
  BigradedDims out{w, {}};
  for (const auto& c : detail::cells_in_window(w)) {
    auto it = cells.find(c);
    out.dims[c] = it == cells.end() ? 0 : static_cast<long>(it->second.size());
  }
  return out;
}

inline BigradedDims alternants_dims(int n, const OracleWindow& w) {
  check_oracle_budget(n, 1, w);
  DiagonalRing ring(n);
  AlternantSpaces alt(ring);
  BigradedDims out{w, {}};
  for (const auto& [a, b] : detail::cells_in_window(w)) out.dims[{a, b}] = static_cast<long>(alt.at(a, b).size());
  return out;
}

inline BigradedDims ideal_power_dims(int n, int d, const OracleWindow& w) {
  check_oracle_budget(n, d, w);
  DiagonalRing ring(n);
  IdealPowers powers(ring, w);
  return dims_of(powers.power(d), w);
}

// Monomial counts of the polynomial ring in 2(n-1) variables.
inline BigradedDims polynomial_ring_dims(int n, const OracleWindow& w) {
  BigradedDims out{w, {}};
  auto choose = [](long top, long k) {
    Integer c = 1;
    for (long i = 1; i <= k; ++i) c = c * (top - k + i) / i;
    return to_long(Rational(c));
  };
  for (const auto& [a, b] : detail::cells_in_window(w)) out.dims[{a, b}] = choose(a + n - 2, n - 2) * choose(b + n - 2, n - 2);
  return out;
}

struct ParityReport {
  bool holds = true;
  std::map<Bidegree, std::pair<long, long>> mismatches;  // (dim of correct-parity part of J^d, dim A^d)
};

// The correct-parity part of J^d (alternating for odd d, invariant for even d)
// against A^d = (A^1)^d, cell by cell.
inline ParityReport parity_report(int n, int d, const OracleWindow& w) {
  check_oracle_budget(n, d, w);
  DiagonalRing ring(n);
  IdealPowers powers(ring, w);
  const auto& jd = powers.power(d);
  const bool alternating = d % 2 == 1;
  // A^d cells, with A^0 the invariants
  std::map<Bidegree, EchelonBasis> ad;
  std::map<Bidegree, EchelonBasis> prev;
  for (int level = 0; level <= d; ++level) {
    std::map<Bidegree, EchelonBasis> cur;
    for (const auto& [a, b] : detail::cells_in_window(w)) {
      EchelonBasis e;
      if (level == 0) {
        for (const auto& m : ring.cell(a, b).monomials) {
          auto img = ring.project({{m, Rational(1)}}, false);
          if (!img.empty()) e.insert(ring.to_vector(img, a, b));
        }
      } else {
        for (int a1 = 0; a1 <= a; ++a1)
          for (int b1 = 0; b1 <= b; ++b1) {
            const auto& alt = powers.alternants().at(a1, b1);
            if (!alt.size()) continue;
            Bidegree c2{a - a1, b - b1};
            auto it = prev.find(c2);
            if (it == prev.end()) continue;
            for (const auto& [k1, x] : alt.rows())
              for (const auto& [k2, y] : it->second.rows()) {
                auto prod = detail::poly_multiply(ring.to_poly(x, a1, b1), ring.to_poly(y, c2.first, c2.second));
                if (!prod.empty()) e.insert(ring.to_vector(prod, a, b));
              }
          }
      }
      if (e.size()) cur.emplace(Bidegree{a, b}, std::move(e));
    }
    prev = std::move(cur);
  }
  ad = std::move(prev);
  ParityReport rep;
  for (const auto& [a, b] : detail::cells_in_window(w)) {
    EchelonBasis proj;
    auto it = jd.find({a, b});
    if (it != jd.end())
      for (const auto& [k, row] : it->second.rows()) {
        auto img = ring.project(ring.to_poly(row, a, b), alternating);
        if (!img.empty()) proj.insert(ring.to_vector(img, a, b));
      }
    auto at = ad.find({a, b});
    long dim_a = at == ad.end() ? 0 : static_cast<long>(at->second.size());
    bool ok = static_cast<long>(proj.size()) == dim_a;
    if (ok && at != ad.end())
      for (const auto& [k, row] : at->second.rows())
        if (!proj.contains(row)) ok = false;
    if (!ok) {
      rep.holds = false;
      rep.mismatches[{a, b}] = {static_cast<long>(proj.size()), dim_a};
    }
  }
  return rep;
}

inline bool parity_check(int n, int d, const OracleWindow& w) { return parity_report(n, d, w).holds; }

struct JbarCells {
  OracleWindow window;
  std::map<Bidegree, long> dims;  // dim of J^d / C[h]^W_+ J^d per cell
};

inline JbarCells jbar_cell_dims(int n, int d, const OracleWindow& w) {
  check_oracle_budget(n, d, w);
  DiagonalRing ring(n);
  IdealPowers powers(ring, w);
  const auto& jd = powers.power(d);
  JbarCells out{w, {}};
  for (const auto& [a, b] : detail::cells_in_window(w)) {
    auto it = jd.find({a, b});
    if (it == jd.end()) {
      out.dims[{a, b}] = 0;
      continue;
    }
    EchelonBasis sub;
    for (int k = 2; k <= n && k <= a; ++k) {
      auto src = jd.find({a - k, b});
      if (src == jd.end()) continue;
      const auto& p = ring.fundamental_invariant(k);
      for (const auto& [key, row] : src->second.rows()) {
        auto prod = detail::poly_multiply(p, ring.to_poly(row, a - k, b));
        if (!prod.empty()) sub.insert(ring.to_vector(prod, a, b));
      }
    }
    out.dims[{a, b}] = static_cast<long>(it->second.size() - sub.size());
  }
  return out;
}

// Diagonal sums of the quotient over w, w+2 and w+4; a diagonal is saturated
// when the three sums agree.
inline DiagonalDims jbar_dims(int n, int d, const OracleWindow& w) {
  const OracleWindow big = w.enlarged(4);
  check_oracle_budget(n, d, big);
  JbarCells cells = jbar_cell_dims(n, d, big);
  DiagonalDims out;
  std::map<long, std::vector<long>> sums;
  for (int step = 0; step <= 2; ++step) {
    OracleWindow sub = w.enlarged(2 * step);
    std::map<long, long> s;
    for (const auto& [c, dim] : cells.dims)
      if (sub.contains(c.first, c.second)) s[c.first - c.second] += dim;
    for (long g = -w.max_b; g <= w.max_a; ++g) sums[g].push_back(s.count(g) ? s[g] : 0);
  }
  for (const auto& [g, v] : sums) {
    out.dims[g] = v[0];
    out.saturated[g] = v[0] == v[1] && v[1] == v[2];
  }
  return out;
}

// degree -> (partition -> multiplicity) for C[h]/(C[h]^W_+)
inline std::map<int, std::map<Partition, long>> coinvariant_multiplicities(int n) {
  require_oracle_rank(n);
  DiagonalRing ring(n);
  const int top = n * (n - 1) / 2;
  auto table = character_table(n);
  std::map<int, std::map<Partition, long>> out;
  for (int deg = 0; deg <= top + 1; ++deg) {
    EchelonBasis ideal;
    for (int k = 2; k <= n && k <= deg; ++k) {
      const auto& p = ring.fundamental_invariant(k);
      for (const auto& m : ring.cell(deg - k, 0).monomials) {
        auto prod = detail::poly_multiply(p, {{m, Rational(1)}});
        if (!prod.empty()) ideal.insert(ring.to_vector(prod, deg, 0));
      }
    }
    const auto& c = ring.cell(deg, 0);
    std::vector<std::size_t> standard;
    for (std::size_t i = 0; i < c.monomials.size(); ++i)
      if (!ideal.rows().count(i)) standard.push_back(i);
    if (standard.empty()) continue;
    // trace of each class on the quotient, using the standard monomials as a basis
    std::vector<Rational> values(table->partitions().size(), 0);
    std::vector<bool> seen(values.size(), false);
    for (std::size_t g = 0; g < ring.group().size(); ++g) {
      std::size_t cls = table->index(ring.group()[g].cycle_type);
      if (seen[cls]) continue;
      seen[cls] = true;
      Rational tr = 0;
      for (std::size_t i : standard) {
        SparseVec img = ideal.reduce(ring.to_vector(ring.act_on_monomial(g, c.monomials[i]), deg, 0));
        for (const auto& [j, x] : img)
          if (j == i) tr += x;
      }
      values[cls] = tr;
    }
    for (const auto& [mu, mult] : decompose_class_function(n, values)) {
      if (mult.get_den() != 1 || mult < 0) throw InternalConsistencyError("non-integral multiplicity in coinvariants");
      out[deg][mu] = to_long(mult);
    }
  }
  return out;
}

}  // namespace cherpoi
