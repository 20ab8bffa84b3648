#pragma once

#include <cstddef>
#include <map>

#include "quiverpa/rational.hpp"

namespace qpa {

/// Incremental exact Gaussian elimination over the rationals on sparse
/// coefficient vectors. Rows are kept in echelon form keyed by pivot
/// column, so rank, membership, and span comparisons are all exact.
class RowSpace {
public:
  using SparseRow = std::map<int, Rational>;

  /// Reduces the row against the current basis; stores it when independent.
  /// Returns true when the span grew.
  bool insert(SparseRow row);

  /// True when the row already lies in the span.
  bool contains(SparseRow row) const;

  std::size_t dimension() const { return rows_.size(); }

private:
  std::map<int, SparseRow> rows_;  // pivot column -> row with that pivot

  void reduce(SparseRow& row) const;
};

}  // namespace qpa
