#pragma once

// PBW tableaux and PBW semistandard tableaux, and the bijection between
// PBW SSYTs of shape lambda and the FFLV patterns Pi_lambda.

#include "pbwdegen/core.hpp"
#include "pbwdegen/degrees.hpp"
#include "pbwdegen/fflv.hpp"

#include <set>
#include <vector>

namespace pbwdegen {

/// A filling of the Young diagram of lambda, stored column by column (tallest
/// first); column c has height lambda'_c.
class PBWTableau {
 public:
  PBWTableau() = default;
  PBWTableau(DominantWeight shape, std::vector<std::vector<int>> columns)
      : shape_(std::move(shape)), columns_(std::move(columns)) {
    const auto heights = shape_.column_heights();
    if (heights.size() != columns_.size()) throw InvalidInput("tableau has wrong number of columns");
    for (std::size_t c = 0; c < columns_.size(); ++c) {
      if (static_cast<int>(columns_[c].size()) != heights[c]) {
        throw InvalidInput("tableau column " + std::to_string(c + 1) + " has wrong height");
      }
      for (int x : columns_[c])
        if (x < 1 || x > shape_.n()) throw InvalidInput("tableau entry out of [1,n]");
    }
  }

  int n() const { return shape_.n(); }
  const DominantWeight& shape() const { return shape_; }
  const std::vector<std::vector<int>>& columns() const { return columns_; }

  auto operator<=>(const PBWTableau& o) const { return columns_ <=> o.columns_; }
  bool operator==(const PBWTableau& o) const { return shape_ == o.shape_ && columns_ == o.columns_; }

 private:
  DominantWeight shape_;
  std::vector<std::vector<int>> columns_;
};

namespace detail {

/// Conditions (1)-(3) for one column of height h.
inline bool is_pbw_column(const std::vector<int>& col) {
  const int h = static_cast<int>(col.size());
  for (int r = 0; r < h; ++r) {
    for (int s = r + 1; s < h; ++s)
      if (col[r] == col[s]) return false;
    if (col[r] <= h && col[r] != r + 1) return false;
  }
  // Entries above the height decrease down the column.
  for (int r = 0; r < h; ++r)
    for (int s = 0; s < h; ++s)
      if (col[r] > col[s] && col[s] > h && !(r < s)) return false;
  return true;
}

/// Condition (4) between a column and its left neighbour.
inline bool columns_semistandard(const std::vector<int>& left, const std::vector<int>& right) {
  for (std::size_t i = 0; i < right.size(); ++i) {
    bool found = false;
    for (std::size_t k = i; k < left.size(); ++k)
      if (left[k] >= right[i]) found = true;
    if (!found) return false;
  }
  return true;
}

}  // namespace detail

inline bool is_pbw_tableau(const PBWTableau& Y) {
  for (const auto& col : Y.columns())
    if (!detail::is_pbw_column(col)) return false;
  return true;
}

inline bool is_pbw_ssyt(const PBWTableau& Y) {
  if (!is_pbw_tableau(Y)) return false;
  const auto& cols = Y.columns();
  for (std::size_t c = 1; c < cols.size(); ++c)
    if (!detail::columns_semistandard(cols[c - 1], cols[c])) return false;
  return true;
}

/// The unique PBW column with content I: entries <= |I| sit in their own
/// row, the remaining entries fill the free rows in decreasing order.
inline std::vector<int> pbw_column(const PlueckerIndex& I) {
  const int h = I.size();
  std::vector<int> col(static_cast<std::size_t>(h), 0);
  std::vector<int> large;
  for (int x : I.elems()) {
    if (x <= h) col[static_cast<std::size_t>(x - 1)] = x;
    else large.push_back(x);
  }
  std::sort(large.rbegin(), large.rend());
  std::size_t next = 0;
  for (auto& v : col)
    if (v == 0) v = large[next++];
  return col;
}

inline PlueckerIndex column_content(int n, std::vector<int> col) {
  std::sort(col.begin(), col.end());
  return PlueckerIndex(n, std::move(col));
}

/// All PBW SSYTs of shape lambda, ordered lexicographically by columns.
inline std::vector<PBWTableau> enumerate_ssyt(const DominantWeight& lambda) {
  const int n = lambda.n();
  const auto heights = lambda.column_heights();
  std::map<int, std::vector<std::vector<int>>> choices;
  for (int h : heights) {
    if (choices.count(h)) continue;
    auto& v = choices[h];
    for (const auto& I : indices_of_size(n, h)) v.push_back(pbw_column(I));
    std::sort(v.begin(), v.end());
  }
  std::vector<PBWTableau> out;
  std::vector<std::vector<int>> cur;
  auto rec = [&](auto&& self, std::size_t c) -> void {
    if (c == heights.size()) {
      out.emplace_back(lambda, cur);
      return;
    }
    for (const auto& col : choices.at(heights[c])) {
      if (c > 0 && !detail::columns_semistandard(cur.back(), col)) continue;
      cur.push_back(col);
      self(self, c + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

/// x preceq y: |x| >= |y| and the two-column PBW tableau (x | y) is
/// semistandard.
inline bool order_preceq(const PlueckerIndex& x, const PlueckerIndex& y) {
  if (x.n() != y.n()) throw InvalidInput("order_preceq: different n");
  if (x.size() < y.size()) return false;
  return detail::columns_semistandard(pbw_column(x), pbw_column(y));
}

inline TrianglePattern column_pattern(int n, const std::vector<int>& col) {
  TrianglePattern T(n);
  for (std::size_t r = 0; r < col.size(); ++r) {
    const int i = static_cast<int>(r) + 1;
    if (col[r] > i) T.set(i, col[r], T.at(i, col[r]) + 1);
  }
  return T;
}

/// Sum over columns Z of tau(Z), tau(Z)_{i,j} = 1 iff Z_{i,1} = j > i.
inline TrianglePattern tau(const PBWTableau& Y) {
  if (!is_pbw_tableau(Y)) throw PreconditionError("tau: not a PBW tableau");
  TrianglePattern T(Y.n());
  for (const auto& col : Y.columns()) T = T + column_pattern(Y.n(), col);
  return T;
}

/// Inverse of tau on PBW SSYTs: peel off, column by column, the maximal
/// cells of the residual support lying in rows <= h and columns > h, where h
/// is the height of the current column.
inline PBWTableau zeta(const TrianglePattern& T, const DominantWeight& lambda) {
  if (T.n() != lambda.n()) throw InvalidInput("zeta: different n");
  if (!is_fflv_pattern(T, lambda)) throw PreconditionError("zeta: pattern is not in Pi_lambda");
  const int n = T.n();
  TrianglePattern rest = T;
  std::vector<std::vector<int>> columns;
  for (int h : lambda.column_heights()) {
    std::vector<RootPair> support;
    for (const auto& [i, j] : all_pairs(n))
      if (rest.at(i, j) > 0) support.push_back({i, j});
    std::vector<int> col(static_cast<std::size_t>(h));
    for (int r = 1; r <= h; ++r) col[static_cast<std::size_t>(r - 1)] = r;
    for (const auto& c : support) {
      if (!(c.i <= h && c.j >= h + 1)) continue;
      const bool maximal = std::none_of(support.begin(), support.end(), [&](const RootPair& o) {
        return o != c && c.i <= o.i && c.j <= o.j;
      });
      if (!maximal) continue;
      col[static_cast<std::size_t>(c.i - 1)] = c.j;
      rest.set(c.i, c.j, rest.at(c.i, c.j) - 1);
    }
    columns.push_back(std::move(col));
  }
  if (!rest.is_zero()) throw std::logic_error("zeta: residual pattern is not zero");
  return PBWTableau(lambda, std::move(columns));
}

}  // namespace pbwdegen
