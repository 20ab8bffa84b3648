#include "quiverpa/linalg.hpp"

namespace qpa {

void RowSpace::reduce(SparseRow& row) const {
  while (!row.empty()) {
    auto lead = row.begin();
    auto pivot = rows_.find(lead->first);
    if (pivot == rows_.end()) return;
    Rational factor = lead->second;  // pivot rows are normalized to lead 1
    for (const auto& [col, coeff] : pivot->second) {
      auto it = row.find(col);
      if (it == row.end()) {
        row.emplace(col, -(factor * coeff));
      } else {
        it->second -= factor * coeff;
        if (it->second.is_zero()) row.erase(it);
      }
    }
  }
}

bool RowSpace::insert(SparseRow row) {
  reduce(row);
  if (row.empty()) return false;
  Rational lead = row.begin()->second;
  for (auto& [col, coeff] : row) coeff /= lead;
  int pivot = row.begin()->first;
  rows_.emplace(pivot, std::move(row));
  return true;
}

bool RowSpace::contains(SparseRow row) const {
  reduce(row);
  return row.empty();
}

}  // namespace qpa
