#pragma once

#include <numeric>
#include <utility>
#include <vector>

#include "toric/value_set.hpp"

namespace toric {

/// Incremental fraction-free echelonization over the integers.  Rows are
/// combined by cross-multiplication and divided by their content, so every
/// intermediate value is exact.  Rows are stored sparsely; the family of
/// signed difference rows this library feeds in stays two-term throughout
/// reduction, which keeps inserts cheap.
class IntegerRowBasis {
public:
  // (column, coefficient) pairs sorted by column, coefficients nonzero
  using SparseRow = std::vector<std::pair<std::size_t, Int>>;

  explicit IntegerRowBasis(std::size_t cols) : cols_(cols), rows_(cols) {}

  Int rank() const { return rank_; }

  bool insert(const std::vector<Int>& dense) {
    if (dense.size() != cols_) throw std::invalid_argument("row width mismatch");
    SparseRow row;
    for (std::size_t j = 0; j < cols_; ++j)
      if (dense[j] != 0) row.emplace_back(j, dense[j]);
    return insert_sparse(std::move(row));
  }

  /// Returns true when the row was independent of the basis so far.
  bool insert_sparse(SparseRow row) {
    for (const auto& [col, coeff] : row)
      if (col >= cols_ || coeff == 0) throw std::invalid_argument("malformed sparse row");
    reduce_content(row);
    while (!row.empty()) {
      const std::size_t lead = row.front().first;
      const SparseRow& pivot = rows_[lead];
      if (pivot.empty()) {
        rows_[lead] = std::move(row);
        ++rank_;
        return true;
      }
      row = combine(pivot, row);
    }
    return false;
  }

private:
  // pivot[lead]*row - row[lead]*pivot, merged by column
  static SparseRow combine(const SparseRow& pivot, const SparseRow& row) {
    const Int a = pivot.front().second;
    const Int b = row.front().second;
    SparseRow out;
    out.reserve(pivot.size() + row.size());
    std::size_t i = 0, j = 0;
    while (i < row.size() || j < pivot.size()) {
      if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
        out.emplace_back(row[i].first, checked_mul(a, row[i].second));
        ++i;
      } else if (i == row.size() || pivot[j].first < row[i].first) {
        out.emplace_back(pivot[j].first, checked_sub(0, checked_mul(b, pivot[j].second)));
        ++j;
      } else {
        const Int val = checked_sub(checked_mul(a, row[i].second), checked_mul(b, pivot[j].second));
        if (val != 0) out.emplace_back(row[i].first, val);
        ++i;
        ++j;
      }
    }
    reduce_content(out);
    return out;
  }

  static void reduce_content(SparseRow& row) {
    if (row.empty()) return;
    Int g = 0;
    for (const auto& [col, coeff] : row) g = std::gcd(g, coeff);
    if (row.front().second < 0) g = -g;
    for (auto& [col, coeff] : row) coeff /= g;
  }

  std::size_t cols_;
  Int rank_ = 0;
  std::vector<SparseRow> rows_;  // indexed by pivot column; empty = none
};

}  // namespace toric
