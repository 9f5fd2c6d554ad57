#pragma once

// Exact linear algebra over Q: dense Gauss-Jordan, fraction-free (Bareiss)
// elimination for integer systems, and an incremental sparse echelon basis
// used by the commutative oracle.

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "cherpoi/errors.hpp"
#include "cherpoi/rational.hpp"

namespace cherpoi {

using QMatrix = std::vector<std::vector<Rational>>;
using ZMatrix = std::vector<std::vector<Integer>>;

inline QMatrix identity_matrix(std::size_t k) {
  QMatrix m(k, std::vector<Rational>(k, 0));
  for (std::size_t i = 0; i < k; ++i) m[i][i] = 1;
  return m;
}

inline QMatrix multiply(const QMatrix& a, const QMatrix& b) {
  if (a.empty()) return {};
  const std::size_t inner = b.size(), cols = b.empty() ? 0 : b[0].size();
  if (a[0].size() != inner) throw InvalidInput("matrix shapes do not match");
  QMatrix r(a.size(), std::vector<Rational>(cols, 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

inline std::size_t rank(QMatrix m) {
  std::size_t r = 0;
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      Rational f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

// Solve A X = B for square nonsingular A; nullopt when A is singular.
inline std::optional<QMatrix> solve(QMatrix a, QMatrix b) {
  const std::size_t k = a.size();
  const std::size_t w = b.empty() ? 0 : b[0].size();
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t piv = c;
    while (piv < k && a[piv][c] == 0) ++piv;
    if (piv == k) return std::nullopt;
    std::swap(a[piv], a[c]);
    std::swap(b[piv], b[c]);
    Rational inv = 1 / a[c][c];
    for (std::size_t j = c; j < k; ++j) a[c][j] *= inv;
    for (std::size_t j = 0; j < w; ++j) b[c][j] *= inv;
    for (std::size_t i = 0; i < k; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = c; j < k; ++j) a[i][j] -= f * a[c][j];
      for (std::size_t j = 0; j < w; ++j) b[i][j] -= f * b[c][j];
    }
  }
  return b;
}

// Fraction-free elimination: after the forward pass every pivot is a minor of
// the original matrix, so intermediate entries stay integral.
inline std::optional<QMatrix> bareiss_inverse(ZMatrix a) {
  const std::size_t k = a.size();
  for (auto& row : a) {
    if (row.size() != k) throw InvalidInput("bareiss_inverse needs a square matrix");
    for (std::size_t j = 0; j < k; ++j) row.push_back(0);
  }
  for (std::size_t i = 0; i < k; ++i) a[i][k + i] = 1;
  Integer prev = 1;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t piv = c;
    while (piv < k && a[piv][c] == 0) ++piv;
    if (piv == k) return std::nullopt;
    std::swap(a[piv], a[c]);
    for (std::size_t i = c + 1; i < k; ++i) {
      for (std::size_t j = c + 1; j < 2 * k; ++j) a[i][j] = (a[c][c] * a[i][j] - a[i][c] * a[c][j]) / prev;
      a[i][c] = 0;
    }
    prev = a[c][c];
  }
  // Back substitution over Q on the upper-triangular integral system.
  QMatrix inv(k, std::vector<Rational>(k, 0));
  for (std::size_t col = 0; col < k; ++col) {
    for (std::size_t ii = k; ii-- > 0;) {
      Rational s = Rational(a[ii][k + col]);
      for (std::size_t j = ii + 1; j < k; ++j) s -= Rational(a[ii][j]) * inv[j][col];
      inv[ii][col] = s / Rational(a[ii][ii]);
    }
  }
  return inv;
}

// Sparse vector over Q, sorted by index, without zeros.
using SparseVec = std::vector<std::pair<std::size_t, Rational>>;

inline SparseVec sparse_from_map(const std::map<std::size_t, Rational>& m) {
  SparseVec v;
  v.reserve(m.size());
  for (const auto& [i, c] : m)
    if (c != 0) v.emplace_back(i, c);
  return v;
}

// a - f * b
inline SparseVec sparse_axpy(const SparseVec& a, const Rational& f, const SparseVec& b) {
  SparseVec r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      r.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      r.emplace_back(b[j].first, -f * b[j].second);
      ++j;
    } else {
      Rational c = a[i].second - f * b[j].second;
      if (c != 0) r.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return r;
}

// Semi-echelon basis: each stored row has a distinct leading index with
// coefficient 1 there. Adding a vector reduces it against the stored rows.
class EchelonBasis {
 public:
  std::size_t size() const { return rows_.size(); }

  SparseVec reduce(SparseVec v) const {
    std::size_t pos = 0;
    while (pos < v.size()) {
      auto it = rows_.find(v[pos].first);
      if (it == rows_.end()) {
        ++pos;
        continue;
      }
      Rational f = v[pos].second;
      v = sparse_axpy(v, f, it->second);
      // entries before pos are untouched since stored rows start at their pivot
    }
    return v;
  }

  bool contains(const SparseVec& v) const { return reduce(v).empty(); }

  // Returns true when v was independent of the rows already present.
  bool insert(SparseVec v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    Rational lead = v.front().second;
    if (lead != 1) {
      Rational inv = 1 / lead;
      for (auto& [i, c] : v) c *= inv;
    }
    std::size_t key = v.front().first;
    rows_.emplace(key, std::move(v));
    return true;
  }

  const std::map<std::size_t, SparseVec>& rows() const { return rows_; }

 private:
  std::map<std::size_t, SparseVec> rows_;
};

}  // namespace cherpoi
