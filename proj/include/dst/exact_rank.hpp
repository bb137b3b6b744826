#pragma once

#include <map>
#include <utility>
#include <vector>

#include "dst/qpoly.hpp"

namespace dst {

/// Sparse integer row: (column, coefficient) pairs sorted by column.
using SparseRow = std::vector<std::pair<int, BigInt>>;

/// Incremental exact row echelon form over Q, kept with integer entries.
/// Rows are content-normalized (divided by the gcd of their coefficients,
/// leading coefficient positive), so entries stay small in practice while
/// every rank computed is the exact rank over the rationals.
class ExactEchelon {
 public:
  /// Reduce the row against the current pivots and keep what survives.
  /// Returns true when the row added a new pivot.
  bool insert(SparseRow row);

  int rank() const { return static_cast<int>(pivots_.size()); }
  const std::map<int, SparseRow>& pivot_rows() const { return pivots_; }

 private:
  std::map<int, SparseRow> pivots_;  // keyed by leading column
};

/// Exact rank over Q of the matrix with the given rows.
int exact_rank(const std::vector<SparseRow>& rows);

}  // namespace dst
