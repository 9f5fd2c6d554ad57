#pragma once

// Integer partitions, cell geometry of Ferrers diagrams, dominance, and
// standard Young tableaux with the major index.
//
// Cells are addressed (row, col) with both indices 0-based: (i, j) lies in the
// diagram iff j < parts[i]. Rows are drawn upward (French convention), so the
// leg of a cell counts cells above it. The statistic n(mu) = sum_i mu_i (i-1)
// indexes rows from 1, as in the usual formula.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "cherpoi/errors.hpp"
#include "cherpoi/rational.hpp"

namespace cherpoi {

struct Cell {
  int row = 0;
  int col = 0;
  int arm = 0;
  int leg = 0;
  int hook = 1;
};

class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw InvalidInput("empty partition");
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0) throw InvalidInput("partition parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1]) throw InvalidInput("partition parts must be weakly decreasing");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
  }

  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  static Partition row(int n) { return Partition(std::vector<int>{n}); }
  static Partition column(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  bool contains(int row, int col) const {
    return row >= 0 && col >= 0 && row < length() && col < parts_[static_cast<std::size_t>(row)];
  }

  Partition transpose() const {
    std::vector<int> t(static_cast<std::size_t>(parts_.front()), 0);
    for (int p : parts_)
      for (int j = 0; j < p; ++j) ++t[static_cast<std::size_t>(j)];
    return Partition(std::move(t));
  }

  Cell cell(int row, int col) const {
    if (!contains(row, col))
      throw OutOfRange("cell (" + std::to_string(row) + "," + std::to_string(col) + ") outside " + to_string());
    int arm = parts_[static_cast<std::size_t>(row)] - col - 1;
    int leg = 0;
    for (int r = row + 1; r < length() && parts_[static_cast<std::size_t>(r)] > col; ++r) ++leg;
    return {row, col, arm, leg, 1 + arm + leg};
  }

  std::vector<Cell> cells() const {
    std::vector<Cell> out;
    out.reserve(static_cast<std::size_t>(size_));
    for (int i = 0; i < length(); ++i)
      for (int j = 0; j < parts_[static_cast<std::size_t>(i)]; ++j) out.push_back(cell(i, j));
    return out;
  }

  // sum_i mu_i (i - 1), rows counted from 1
  long nstat() const {
    long total = 0;
    for (std::size_t i = 0; i < parts_.size(); ++i) total += static_cast<long>(parts_[i]) * static_cast<long>(i);
    return total;
  }

  std::vector<int> hooks() const {
    std::vector<int> h;
    for (const auto& c : cells()) h.push_back(c.hook);
    std::sort(h.begin(), h.end());
    return h;
  }

  bool is_self_conjugate() const { return transpose() == *this; }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(parts_[i]);
    }
    return s + ")";
  }

  friend bool operator==(const Partition&, const Partition&) = default;

  // Lexicographic on parts; enumeration order is the reverse of this.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return std::lexicographical_compare_three_way(a.parts_.begin(), a.parts_.end(), b.parts_.begin(),
                                                  b.parts_.end());
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

inline long nstat(const Partition& mu) { return mu.nstat(); }

// All partitions of n, largest first in lexicographic order.
inline std::vector<Partition> enumerate_partitions(int n) {
  if (n < 1) throw InvalidInput("enumerate_partitions requires n >= 1");
  std::vector<Partition> out;
  std::vector<int> cur{n};
  while (true) {
    out.emplace_back(cur);
    // Find the rightmost part > 1, decrement it and refill greedily.
    int rem = 0;
    while (!cur.empty() && cur.back() == 1) {
      rem += 1;
      cur.pop_back();
    }
    if (cur.empty()) break;
    int k = --cur.back();
    rem += 1;
    while (rem > 0) {
      int p = std::min(k, rem);
      cur.push_back(p);
      rem -= p;
    }
  }
  return out;
}

struct DominanceRelation {
  bool leq = false;  // lambda <= mu
  bool geq = false;  // lambda >= mu
  bool comparable() const { return leq || geq; }
};

inline DominanceRelation compare_dominance(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw InvalidInput("dominance compares partitions of the same size");
  DominanceRelation rel{true, true};
  int sl = 0, sm = 0;
  int len = std::max(lambda.length(), mu.length());
  for (int k = 0; k < len; ++k) {
    sl += lambda[static_cast<std::size_t>(k)];
    sm += mu[static_cast<std::size_t>(k)];
    if (sl > sm) rel.leq = false;
    if (sl < sm) rel.geq = false;
  }
  return rel;
}

inline bool dominance_leq(const Partition& lambda, const Partition& mu) { return compare_dominance(lambda, mu).leq; }

struct Tableau {
  Partition shape;
  // rows[i][j] is the entry in cell (i, j); entries are 1..n
  std::vector<std::vector<int>> rows;
  int maj = 0;
};

namespace detail {

inline int tableau_maj(const std::vector<std::vector<int>>& rows, int n) {
  std::vector<int> row_of(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (int e : rows[i]) row_of[static_cast<std::size_t>(e)] = static_cast<int>(i);
  int maj = 0;
  for (int i = 1; i < n; ++i)
    if (row_of[static_cast<std::size_t>(i) + 1] > row_of[static_cast<std::size_t>(i)]) maj += i;
  return maj;
}

inline void fill_syt(const Partition& shape, std::vector<std::vector<int>>& rows, int next,
                     std::vector<Tableau>& out) {
  const int n = shape.size();
  if (next > n) {
    out.push_back({shape, rows, tableau_maj(rows, n)});
    return;
  }
  // Entry `next` goes at the end of a row whose extension keeps a partition shape.
  for (std::size_t i = 0; i < rows.size(); ++i) {
    int len = static_cast<int>(rows[i].size());
    if (len >= shape[i]) continue;
    if (i > 0 && static_cast<int>(rows[i - 1].size()) <= len) continue;
    rows[i].push_back(next);
    fill_syt(shape, rows, next + 1, out);
    rows[i].pop_back();
  }
}

}  // namespace detail

inline std::vector<Tableau> enumerate_syt(const Partition& mu) {
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(mu.length()));
  std::vector<Tableau> out;
  detail::fill_syt(mu, rows, 1, out);
  return out;
}

// n! / prod of hooks
inline Integer syt_count(const Partition& mu) {
  Integer prod = 1;
  for (int h : mu.hooks()) prod *= h;
  return factorial(static_cast<unsigned>(mu.size())) / prod;
}

}  // namespace cherpoi
