#include "dst/exact_rank.hpp"

#include <algorithm>

namespace dst {

namespace {

void normalize_content(SparseRow& row) {
  if (row.empty()) return;
  BigInt g = 0;
  for (const auto& [col, c] : row) {
    g = boost::multiprecision::gcd(g, c);
    if (g == 1) break;
  }
  if (row.front().second < 0) g = -g;
  if (g != 1) {
    for (auto& [col, c] : row) c /= g;
  }
}

/// row := (b/g) * row - (a/g) * pivot, cancelling the shared leading column;
/// a and b are the leading coefficients of row and pivot.
SparseRow eliminate_leading(const SparseRow& row, const SparseRow& pivot) {
  BigInt a = row.front().second;
  BigInt b = pivot.front().second;
  BigInt g = boost::multiprecision::gcd(a, b);
  BigInt row_scale = b / g;
  BigInt pivot_scale = a / g;

  SparseRow out;
  out.reserve(row.size() + pivot.size());
  size_t ra = 0, rb = 0;
  while (ra < row.size() || rb < pivot.size()) {
    if (rb == pivot.size() ||
        (ra < row.size() && row[ra].first < pivot[rb].first)) {
      out.emplace_back(row[ra].first, row_scale * row[ra].second);
      ++ra;
    } else if (ra == row.size() || pivot[rb].first < row[ra].first) {
      out.emplace_back(pivot[rb].first, -pivot_scale * pivot[rb].second);
      ++rb;
    } else {
      BigInt c = row_scale * row[ra].second - pivot_scale * pivot[rb].second;
      if (c != 0) out.emplace_back(row[ra].first, std::move(c));
      ++ra;
      ++rb;
    }
  }
  return out;
}

}  // namespace

bool ExactEchelon::insert(SparseRow row) {
  while (!row.empty()) {
    auto it = pivots_.find(row.front().first);
    if (it == pivots_.end()) {
      normalize_content(row);
      int lead = row.front().first;
      pivots_.emplace(lead, std::move(row));
      return true;
    }
    row = eliminate_leading(row, it->second);
    normalize_content(row);
  }
  return false;
}

int exact_rank(const std::vector<SparseRow>& rows) {
  std::vector<SparseRow> sorted = rows;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const SparseRow& a, const SparseRow& b) {
                     return a.size() < b.size();
                   });
  ExactEchelon ech;
  for (auto& r : sorted) ech.insert(std::move(r));
  return ech.rank();
}

}  // namespace dst
