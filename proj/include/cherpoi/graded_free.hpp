#pragma once

// Homogeneous free bases for graded projective modules P = E(F), where F is
// graded-free over a connected graded algebra A and E a homogeneous
// idempotent. Everything is truncated at a degree cutoff of A.
//
// Elements of A are kept per degree as coefficient vectors on the degree's
// basis. An element x of F of degree e is the column (x_i) with x_i in
// A_{e - shift_i}. Matrix entry (i, j) has degree shift_j - shift_i.

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "cherpoi/errors.hpp"
#include "cherpoi/linalg.hpp"
#include "cherpoi/rational.hpp"

namespace cherpoi {

using Coeffs = std::vector<Rational>;

inline bool is_zero_coeffs(const Coeffs& c) {
  return std::all_of(c.begin(), c.end(), [](const Rational& x) { return x == 0; });
}

// Commutative connected graded algebra given by monomials in weighted
// variables, optionally truncated (every exponent below `truncation`).
class ConnectedGradedAlgebra {
 public:
  ConnectedGradedAlgebra(std::vector<std::string> names, std::vector<int> weights, int cutoff, int truncation = 0)
      : names_(std::move(names)), weights_(std::move(weights)), cutoff_(cutoff), truncation_(truncation) {
    if (names_.size() != weights_.size()) throw InvalidInput("one weight per variable");
    if (cutoff_ < 0) throw InvalidInput("cutoff must be nonnegative");
    for (int w : weights_)
      if (w <= 0) throw InvalidInput("variable weights must be positive (A_0 = k)");
    if (truncation_ < 0) throw InvalidInput("truncation must be nonnegative");
    basis_.resize(static_cast<std::size_t>(cutoff_) + 1);
    std::vector<int> cur(names_.size(), 0);
    enumerate(0, 0, cur);
    for (auto& level : basis_) std::sort(level.begin(), level.end(), std::greater<>());
    for (int d = 0; d <= cutoff_; ++d)
      for (std::size_t i = 0; i < basis_[static_cast<std::size_t>(d)].size(); ++i)
        index_.emplace(basis_[static_cast<std::size_t>(d)][i], std::make_pair(d, i));
  }

  static ConnectedGradedAlgebra polynomial(std::size_t variables, int cutoff) {
    std::vector<std::string> names;
    const char* letters[] = {"x", "y", "z", "w"};
    for (std::size_t i = 0; i < variables; ++i)
      names.push_back(i < 4 ? letters[i] : "x" + std::to_string(i));
    return ConnectedGradedAlgebra(names, std::vector<int>(variables, 1), cutoff);
  }

  int cutoff() const { return cutoff_; }
  int truncation() const { return truncation_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<int>& weights() const { return weights_; }

  std::size_t dim(int d) const {
    if (d < 0 || d > cutoff_) return 0;
    return basis_[static_cast<std::size_t>(d)].size();
  }

  const std::vector<int>& monomial(int d, std::size_t i) const { return basis_.at(static_cast<std::size_t>(d)).at(i); }

  std::optional<std::pair<int, std::size_t>> locate(const std::vector<int>& exps) const {
    auto it = index_.find(exps);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  Coeffs zero(int d) const { return Coeffs(dim(d), 0); }
  Coeffs one() const { return Coeffs{1}; }

  Coeffs basis_element(int d, std::size_t i) const {
    Coeffs c = zero(d);
    c.at(i) = 1;
    return c;
  }

  // Product of x in degree i and y in degree j; empty past the cutoff.
  Coeffs multiply(int i, const Coeffs& x, int j, const Coeffs& y) const {
    if (i < 0 || j < 0 || i + j > cutoff_) return {};
    Coeffs out = zero(i + j);
    for (std::size_t a = 0; a < x.size(); ++a) {
      if (x[a] == 0) continue;
      for (std::size_t b = 0; b < y.size(); ++b) {
        if (y[b] == 0) continue;
        auto prod = product_index(i, a, j, b);
        if (prod) out[*prod] += x[a] * y[b];
      }
    }
    return out;
  }

  // Associativity on all basis triples within the cutoff.
  bool check_associative() const {
    for (int i = 0; i <= cutoff_; ++i)
      for (int j = 0; i + j <= cutoff_; ++j)
        for (int k = 0; i + j + k <= cutoff_; ++k)
          for (std::size_t a = 0; a < dim(i); ++a)
            for (std::size_t b = 0; b < dim(j); ++b)
              for (std::size_t c = 0; c < dim(k); ++c) {
                auto ea = basis_element(i, a), eb = basis_element(j, b), ec = basis_element(k, c);
                if (multiply(i + j, multiply(i, ea, j, eb), k, ec) != multiply(i, ea, j + k, multiply(j, eb, k, ec)))
                  return false;
              }
    return true;
  }

  std::string to_string(int d, const Coeffs& x) const {
    std::string s;
    for (std::size_t a = 0; a < x.size(); ++a) {
      if (x[a] == 0) continue;
      std::string mono;
      const auto& e = monomial(d, a);
      for (std::size_t v = 0; v < e.size(); ++v) {
        if (!e[v]) continue;
        if (!mono.empty()) mono += "*";
        mono += names_[v];
        if (e[v] > 1) mono += "^" + std::to_string(e[v]);
      }
      std::string coef = cherpoi::to_string(x[a]);
      std::string term = mono.empty() ? coef : (x[a] == 1 ? mono : (x[a] == -1 ? "-" + mono : coef + "*" + mono));
      if (!s.empty() && term[0] != '-') s += " + ";
      else if (!s.empty()) s += " ";
      s += term;
    }
    return s.empty() ? "0" : s;
  }

 private:
  void enumerate(std::size_t var, int degree, std::vector<int>& cur) {
    if (var == names_.size()) {
      basis_[static_cast<std::size_t>(degree)].push_back(cur);
      return;
    }
    for (int e = 0; degree + e * weights_[var] <= cutoff_; ++e) {
      if (truncation_ && e >= truncation_) break;
      cur[var] = e;
      enumerate(var + 1, degree + e * weights_[var], cur);
    }
    cur[var] = 0;
  }

  std::optional<std::size_t> product_index(int i, std::size_t a, int j, std::size_t b) const {
    std::vector<int> e = monomial(i, a);
    const auto& f = monomial(j, b);
    for (std::size_t v = 0; v < e.size(); ++v) {
      e[v] += f[v];
      if (truncation_ && e[v] >= truncation_) return std::nullopt;
    }
    return index_.at(e).second;
  }

  std::vector<std::string> names_;
  std::vector<int> weights_;
  int cutoff_;
  int truncation_;
  std::vector<std::vector<std::vector<int>>> basis_;
  std::map<std::vector<int>, std::pair<int, std::size_t>> index_;
};

// Square matrix over A with homogeneous entries: entry (i, j) sits in degree
// shift_j - shift_i and is stored as an empty vector when that degree is
// negative or past the cutoff.
struct HomogeneousMatrix {
  std::shared_ptr<const ConnectedGradedAlgebra> algebra;
  std::vector<int> shifts;
  std::vector<std::vector<Coeffs>> entries;

  std::size_t size() const { return shifts.size(); }
  int entry_degree(std::size_t i, std::size_t j) const { return shifts[j] - shifts[i]; }

  static HomogeneousMatrix zero(std::shared_ptr<const ConnectedGradedAlgebra> a, std::vector<int> shifts) {
    HomogeneousMatrix m{std::move(a), std::move(shifts), {}};
    const std::size_t k = m.shifts.size();
    m.entries.assign(k, std::vector<Coeffs>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) m.entries[i][j] = m.algebra->zero(m.entry_degree(i, j));
    return m;
  }

  static HomogeneousMatrix identity(std::shared_ptr<const ConnectedGradedAlgebra> a, std::vector<int> shifts) {
    auto m = zero(std::move(a), std::move(shifts));
    for (std::size_t i = 0; i < m.size(); ++i) m.entries[i][i] = m.algebra->one();
    return m;
  }
};

inline HomogeneousMatrix operator*(const HomogeneousMatrix& a, const HomogeneousMatrix& b) {
  if (a.shifts != b.shifts) throw InvalidInput("matrices over different free modules");
  auto r = HomogeneousMatrix::zero(a.algebra, a.shifts);
  const std::size_t k = a.size();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      Coeffs acc = r.entries[i][j];
      for (std::size_t l = 0; l < k; ++l) {
        auto p = a.algebra->multiply(a.entry_degree(i, l), a.entries[i][l], b.entry_degree(l, j), b.entries[l][j]);
        if (p.empty() || acc.empty()) continue;
        for (std::size_t t = 0; t < acc.size(); ++t) acc[t] += p[t];
      }
      r.entries[i][j] = std::move(acc);
    }
  return r;
}

inline bool operator==(const HomogeneousMatrix& a, const HomogeneousMatrix& b) {
  return a.shifts == b.shifts && a.entries == b.entries;
}

// A homogeneous element of F.
struct FreeElement {
  int degree = 0;
  std::vector<Coeffs> components;  // components[i] in A_{degree - shift_i}

  bool is_zero() const {
    return std::all_of(components.begin(), components.end(), [](const Coeffs& c) { return is_zero_coeffs(c); });
  }
};

class FreeModule {
 public:
  FreeModule(std::shared_ptr<const ConnectedGradedAlgebra> a, std::vector<int> shifts)
      : algebra_(std::move(a)), shifts_(std::move(shifts)) {}

  const ConnectedGradedAlgebra& algebra() const { return *algebra_; }
  const std::shared_ptr<const ConnectedGradedAlgebra>& algebra_ptr() const { return algebra_; }
  const std::vector<int>& shifts() const { return shifts_; }
  std::size_t rank() const { return shifts_.size(); }

  FreeElement zero(int e) const {
    FreeElement x{e, {}};
    for (int s : shifts_) x.components.push_back(algebra_->zero(e - s));
    return x;
  }

  // u_j * a with a in degree e - shift_j
  FreeElement basis_times(std::size_t j, int e, const Coeffs& a) const {
    FreeElement x = zero(e);
    x.components[j] = a;
    return x;
  }

  std::size_t dim(int e) const {
    std::size_t t = 0;
    for (int s : shifts_) t += algebra_->dim(e - s);
    return t;
  }

  SparseVec flatten(const FreeElement& x) const {
    SparseVec v;
    std::size_t offset = 0;
    for (std::size_t i = 0; i < shifts_.size(); ++i) {
      const auto& c = x.components[i];
      for (std::size_t t = 0; t < c.size(); ++t)
        if (c[t] != 0) v.emplace_back(offset + t, c[t]);
      offset += algebra_->dim(x.degree - shifts_[i]);
    }
    return v;
  }

  FreeElement apply(const HomogeneousMatrix& m, const FreeElement& x) const {
    FreeElement r = zero(x.degree);
    for (std::size_t i = 0; i < rank(); ++i)
      for (std::size_t j = 0; j < rank(); ++j) {
        auto p = algebra_->multiply(m.entry_degree(i, j), m.entries[i][j], x.degree - shifts_[j], x.components[j]);
        if (p.empty()) continue;
        for (std::size_t t = 0; t < p.size(); ++t) r.components[i][t] += p[t];
      }
    return r;
  }

  FreeElement times(const FreeElement& x, int d, const Coeffs& a) const {
    FreeElement r = zero(x.degree + d);
    for (std::size_t i = 0; i < rank(); ++i) {
      auto p = algebra_->multiply(x.degree - shifts_[i], x.components[i], d, a);
      if (!p.empty()) r.components[i] = std::move(p);
    }
    return r;
  }

  // Column j of m, which is the image of u_j.
  FreeElement column(const HomogeneousMatrix& m, std::size_t j) const {
    FreeElement x{shifts_[j], {}};
    for (std::size_t i = 0; i < rank(); ++i) x.components.push_back(m.entries[i][j]);
    return x;
  }

  std::string to_string(const FreeElement& x) const {
    std::string s = "(";
    for (std::size_t i = 0; i < rank(); ++i) {
      if (i) s += ", ";
      s += x.components[i].empty() ? "0" : algebra_->to_string(x.degree - shifts_[i], x.components[i]);
    }
    return s + ")";
  }

 private:
  std::shared_ptr<const ConnectedGradedAlgebra> algebra_;
  std::vector<int> shifts_;
};

struct GradedIdempotent {
  HomogeneousMatrix matrix;
  int cutoff = 0;

  const std::vector<int>& shifts() const { return matrix.shifts; }
};

inline int max_shift(const std::vector<int>& shifts) { return shifts.empty() ? 0 : *std::max_element(shifts.begin(), shifts.end()); }
inline int min_shift(const std::vector<int>& shifts) { return shifts.empty() ? 0 : *std::min_element(shifts.begin(), shifts.end()); }

// Entries well-formed and E E = E.
inline void validate_idempotent(const GradedIdempotent& e) {
  const auto& m = e.matrix;
  if (!m.algebra) throw InvalidInput("idempotent has no algebra");
  if (e.cutoff != m.algebra->cutoff()) throw InvalidInput("idempotent cutoff differs from the algebra cutoff");
  if (m.entries.size() != m.size()) throw InvalidInput("matrix is not square");
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m.entries[i].size() != m.size()) throw InvalidInput("matrix is not square");
    for (std::size_t j = 0; j < m.size(); ++j)
      if (m.entries[i][j].size() != m.algebra->dim(m.entry_degree(i, j)))
        throw InvalidInput("entry (" + std::to_string(i) + "," + std::to_string(j) + ") is not homogeneous of degree shift_j - shift_i");
  }
  if (!(m * m == m)) throw InvalidInput("matrix is not idempotent within the cutoff");
}

// Dimension of P_e = E(F)_e.
inline std::size_t image_dimension(const FreeModule& f, const HomogeneousMatrix& e, int degree) {
  EchelonBasis basis;
  for (std::size_t j = 0; j < f.rank(); ++j) {
    int d = degree - f.shifts()[j];
    for (std::size_t b = 0; b < f.algebra().dim(d); ++b)
      basis.insert(f.flatten(f.apply(e, f.basis_times(j, degree, f.algebra().basis_element(d, b)))));
  }
  return basis.size();
}

// Eilenberg's observation: keep from theta(p_i) only the component of the
// degree of p_i. phi and the output theta are given by their columns: phi on
// the generators f_i of F, theta on p_i = phi(f_i). theta is inhomogeneous:
// theta_columns[i][j] maps degree -> coefficients in A.
struct SplittingResult {
  std::vector<FreeElement> columns;
};

using InhomogeneousElement = std::map<int, Coeffs>;

inline SplittingResult eilenberg_homogenize(const FreeModule& source, const FreeModule& target,
                                            const std::vector<FreeElement>& phi_columns,
                                            const std::vector<std::vector<InhomogeneousElement>>& theta_columns,
                                            const std::vector<int>& target_degrees) {
  const std::size_t k = source.rank();
  if (phi_columns.size() != k || theta_columns.size() != k || target_degrees.size() != k)
    throw InvalidInput("one phi column, theta column and degree per generator");
  SplittingResult out;
  for (std::size_t i = 0; i < k; ++i) {
    if (target_degrees[i] != source.shifts()[i]) throw InvalidInput("phi must be graded of degree zero");
    if (theta_columns[i].size() != k) throw InvalidInput("theta column has the wrong length");
    FreeElement g = source.zero(target_degrees[i]);
    for (std::size_t j = 0; j < k; ++j) {
      int want = target_degrees[i] - source.shifts()[j];
      auto it = theta_columns[i][j].find(want);
      if (it != theta_columns[i][j].end() && !g.components[j].empty()) {
        if (it->second.size() != g.components[j].size()) throw InvalidInput("theta entry has the wrong size");
        g.components[j] = it->second;
      }
    }
    // phi(g_i) = p_i, with phi given by its columns
    FreeElement img = target.zero(target_degrees[i]);
    for (std::size_t j = 0; j < k; ++j) {
      FreeElement t = target.times(phi_columns[j], target_degrees[i] - source.shifts()[j], g.components[j]);
      for (std::size_t r = 0; r < target.rank(); ++r)
        for (std::size_t c = 0; c < img.components[r].size(); ++c) img.components[r][c] += t.components[r][c];
    }
    if (img.components != phi_columns[i].components)
      throw InvalidSplitting("homogenized theta does not split phi on generator " + std::to_string(i));
    out.columns.push_back(std::move(g));
  }
  return out;
}

struct MinimalExpression {
  HomogeneousMatrix basis;          // columns: the new basis u'_j in terms of u
  HomogeneousMatrix inverse;        // coordinates with respect to u'
  std::vector<std::size_t> support; // indices j with a_j != 0, ordered so |u'_j| is weakly increasing
  std::vector<Coeffs> coefficients; // a_j, aligned with support
};

namespace detail {

// Solve target = sum_l r_l a_l with r_l homogeneous of degree deg_target - deg(a_l).
inline std::optional<std::vector<std::pair<std::size_t, Coeffs>>> left_combination(
    const ConnectedGradedAlgebra& alg, int target_degree, const Coeffs& target,
    const std::vector<std::pair<std::size_t, std::pair<int, Coeffs>>>& others) {
  // columns: r-basis element times a_l
  struct Col {
    std::size_t l;
    int rdeg;
    std::size_t rindex;
  };
  std::vector<Col> cols;
  QMatrix a(alg.dim(target_degree));
  for (const auto& [l, da] : others) {
    const auto& [adeg, acoef] = da;
    int rdeg = target_degree - adeg;
    if (rdeg < 0) continue;
    for (std::size_t ri = 0; ri < alg.dim(rdeg); ++ri) {
      auto p = alg.multiply(rdeg, alg.basis_element(rdeg, ri), adeg, acoef);
      if (p.empty() || is_zero_coeffs(p)) continue;
      for (std::size_t row = 0; row < a.size(); ++row) a[row].push_back(p[row]);
      cols.push_back({l, rdeg, ri});
    }
  }
  if (cols.empty()) return std::nullopt;
  // least-effort exact solve: row reduce the augmented system
  const std::size_t rows = a.size(), ncol = cols.size();
  for (std::size_t row = 0; row < rows; ++row) a[row].push_back(target[row]);
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncol && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    Rational inv = 1 / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = c; j <= ncol; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (a[i][ncol] != 0) return std::nullopt;
  std::map<std::size_t, Coeffs> result;
  for (std::size_t i = 0; i < r; ++i) {
    const auto& col = cols[pivot_col[i]];
    auto& rl = result.try_emplace(col.l, alg.zero(col.rdeg)).first->second;
    rl[col.rindex] += a[i][ncol];
  }
  return std::vector<std::pair<std::size_t, Coeffs>>(result.begin(), result.end());
}

}  // namespace detail

// x = sum_j u'_j a_j with as few terms as the proof's reduction allows: no
// a_j is a homogeneous left combination of the others. Each reduction
// replaces u'_l by u'_l + u'_j r_l.
inline MinimalExpression minimal_expression(const FreeModule& f, const FreeElement& x) {
  const auto& alg = f.algebra();
  MinimalExpression out{HomogeneousMatrix::identity(f.algebra_ptr(), f.shifts()),
                        HomogeneousMatrix::identity(f.algebra_ptr(), f.shifts()), {}, {}};
  if (x.components.size() != f.rank()) throw InvalidInput("element has the wrong number of components");
  if (x.is_zero()) throw InvalidInput("zero has no expression");
  std::vector<Coeffs> a = x.components;
  const int e = x.degree;
  for (;;) {
    bool reduced = false;
    std::vector<std::size_t> support;
    for (std::size_t j = 0; j < f.rank(); ++j)
      if (!is_zero_coeffs(a[j])) support.push_back(j);
    // try the highest-degree coefficients first
    std::sort(support.begin(), support.end(), [&](std::size_t p, std::size_t q) {
      return f.shifts()[p] != f.shifts()[q] ? f.shifts()[p] < f.shifts()[q] : p < q;
    });
    for (std::size_t j : support) {
      std::vector<std::pair<std::size_t, std::pair<int, Coeffs>>> others;
      for (std::size_t l : support)
        if (l != j) others.push_back({l, {e - f.shifts()[l], a[l]}});
      auto comb = detail::left_combination(alg, e - f.shifts()[j], a[j], others);
      if (!comb) continue;
      // u'_l += u'_j r_l ; inverse: row j -= sum_l r_l row l
      auto& b = out.basis;
      auto& binv = out.inverse;
      for (const auto& [l, rl] : *comb) {
        const int rdeg = f.shifts()[l] - f.shifts()[j];
        for (std::size_t i = 0; i < f.rank(); ++i) {
          auto p = alg.multiply(b.entry_degree(i, j), b.entries[i][j], rdeg, rl);
          if (p.empty() || b.entries[i][l].empty()) continue;
          for (std::size_t t = 0; t < p.size(); ++t) b.entries[i][l][t] += p[t];
        }
        for (std::size_t k = 0; k < f.rank(); ++k) {
          auto p = alg.multiply(rdeg, rl, binv.entry_degree(l, k), binv.entries[l][k]);
          if (p.empty() || binv.entries[j][k].empty()) continue;
          for (std::size_t t = 0; t < p.size(); ++t) binv.entries[j][k][t] -= p[t];
        }
      }
      a[j] = alg.zero(e - f.shifts()[j]);
      reduced = true;
      break;
    }
    if (!reduced) {
      out.support = support;
      for (std::size_t j : support) out.coefficients.push_back(a[j]);
      return out;
    }
  }
}

struct HomogeneousBasis {
  std::vector<FreeElement> generators;
  int horizon = 0;                       // certified through this degree
  std::map<int, std::size_t> image_dims;  // dim P_e
  std::map<int, std::size_t> free_dims;   // sum_g dim A_{e - |g|}
  std::size_t sublemma_steps = 0;
};

// Checks the proof's change-of-basis matrix C for one minimal expression: the
// coordinates of p_i = E u'_i in the basis u' restricted to the support must
// be unit upper-triangular.
inline void check_triangular(const FreeModule& f, const HomogeneousMatrix& e, const MinimalExpression& m) {
  const auto& alg = f.algebra();
  const std::size_t n = m.support.size();
  for (std::size_t ci = 0; ci < n; ++ci) {
    const std::size_t i = m.support[ci];
    FreeElement p = f.apply(e, f.column(m.basis, i));
    FreeElement coords = f.apply(m.inverse, p);
    for (std::size_t cj = 0; cj < n; ++cj) {
      const std::size_t j = m.support[cj];
      const Coeffs& c = coords.components[j];
      if (cj == ci) {
        if (c != alg.one()) throw InternalConsistencyError("change-of-basis matrix has a non-unit diagonal entry");
      } else if (cj > ci || f.shifts()[i] == f.shifts()[j]) {
        if (!c.empty() && !is_zero_coeffs(c)) throw InternalConsistencyError("change-of-basis matrix is not upper triangular");
      }
    }
  }
}

inline HomogeneousBasis extract_homogeneous_basis(const GradedIdempotent& idem) {
  validate_idempotent(idem);
  const auto& e = idem.matrix;
  FreeModule f(e.algebra, e.shifts);
  const auto& alg = f.algebra();
  HomogeneousBasis out;
  out.horizon = idem.cutoff - max_shift(e.shifts);
  const int lo = min_shift(e.shifts);
  if (out.horizon < min_shift(e.shifts))
    throw CertificationError("cutoff too small to certify any degree", min_shift(e.shifts));

  for (int deg = lo; deg <= out.horizon; ++deg) {
    // span of the generators found so far, in degree deg
    EchelonBasis span;
    std::size_t free_dim = 0;
    for (const auto& g : out.generators) {
      const int d = deg - g.degree;
      free_dim += alg.dim(d);
      for (std::size_t b = 0; b < alg.dim(d); ++b) span.insert(f.flatten(f.times(g, d, alg.basis_element(d, b))));
    }
    // candidates: E(u_j b), lowest shift first
    std::vector<std::size_t> order(f.rank());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t p, std::size_t q) { return e.shifts[p] < e.shifts[q]; });
    EchelonBasis image;
    for (std::size_t j : order) {
      const int d = deg - e.shifts[j];
      for (std::size_t b = 0; b < alg.dim(d); ++b) {
        FreeElement x = f.apply(e, f.basis_times(j, deg, alg.basis_element(d, b)));
        SparseVec xv = f.flatten(x);
        image.insert(xv);
        if (xv.empty() || span.contains(xv)) continue;
        auto m = minimal_expression(f, x);
        check_triangular(f, e, m);
        ++out.sublemma_steps;
        for (std::size_t ci = 0; ci < m.support.size(); ++ci) {
          const std::size_t i = m.support[ci];
          if (e.shifts[i] != deg) continue;
          FreeElement p = f.apply(e, f.column(m.basis, i));
          SparseVec pv = f.flatten(p);
          if (span.contains(pv)) continue;
          span.insert(pv);
          ++free_dim;
          out.generators.push_back(std::move(p));
        }
        if (!span.contains(xv)) throw InternalConsistencyError("graded-free summand does not contain the element");
      }
    }
    out.image_dims[deg] = image.size();
    out.free_dims[deg] = free_dim;
    if (span.size() != image.size() || free_dim != image.size())
      throw CertificationError("generated module is not free with the image's Hilbert function", deg);
  }
  return out;
}

// E = U diag(keep) U^{-1} with U homogeneous and unipotent: U = I + N where N
// is strictly upper triangular once the basis is ordered by shift. Entries of
// N are random integer combinations of monomials.
inline GradedIdempotent conjugated_projection(std::shared_ptr<const ConnectedGradedAlgebra> alg, std::vector<int> shifts,
                                              const std::vector<bool>& keep, std::uint64_t seed) {
  if (keep.size() != shifts.size()) throw InvalidInput("one flag per basis vector");
  const std::size_t k = shifts.size();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-2, 2);
  auto n = HomogeneousMatrix::zero(alg, shifts);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      bool above = shifts[i] < shifts[j] || (shifts[i] == shifts[j] && i < j);
      if (!above) continue;
      for (auto& c : n.entries[i][j]) c = coef(rng);
    }
  auto u = HomogeneousMatrix::identity(alg, shifts);
  auto uinv = HomogeneousMatrix::identity(alg, shifts);
  auto power = HomogeneousMatrix::identity(alg, shifts);
  auto minus_n = n;
  for (auto& row : minus_n.entries)
    for (auto& e : row)
      for (auto& c : e) c = -c;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t t = 0; t < u.entries[i][j].size(); ++t) u.entries[i][j][t] += n.entries[i][j][t];
  for (std::size_t step = 1; step < k; ++step) {
    power = power * minus_n;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        for (std::size_t t = 0; t < uinv.entries[i][j].size(); ++t) uinv.entries[i][j][t] += power.entries[i][j][t];
  }
  auto d = HomogeneousMatrix::zero(alg, shifts);
  for (std::size_t i = 0; i < k; ++i)
    if (keep[i]) d.entries[i][i] = alg->one();
  return {u * d * uinv, alg->cutoff()};
}

}  // namespace cherpoi
