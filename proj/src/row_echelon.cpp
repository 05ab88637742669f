#include "reticular/row_echelon.hpp"

#include <algorithm>
#include <map>

namespace reticular {

SparseRow SparseEchelon::reduce(const SparseRow& row) const {
  std::map<std::size_t, Rational> work(row.begin(), row.end());
  SparseRow out;
  while (!work.empty()) {
    auto lead = work.begin();
    const long p = pivot_of_[lead->first];
    if (p < 0) {
      out.emplace_back(lead->first, lead->second);
      work.erase(lead);
      continue;
    }
    const Rational factor = lead->second;
    work.erase(lead);
    const SparseRow& prow = rows_[static_cast<std::size_t>(p)];
    for (std::size_t i = 1; i < prow.size(); ++i) {
      const auto& [col, v] = prow[i];
      auto [it, inserted] = work.try_emplace(col, 0);
      it->second -= factor * v;
      if (it->second == 0) work.erase(it);
    }
  }
  return out;
}

bool SparseEchelon::insert(const SparseRow& row) {
  SparseRow red = reduce(row);
  if (red.empty()) return false;
  const Rational inv = 1 / red.front().second;
  for (auto& [col, v] : red) v *= inv;
  pivot_of_[red.front().first] = static_cast<long>(rows_.size());
  rows_.push_back(std::move(red));
  return true;
}

std::vector<std::size_t> SparseEchelon::free_columns() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < pivot_of_.size(); ++c) {
    if (pivot_of_[c] < 0) out.push_back(c);
  }
  return out;
}

SparseRow jet_row(const CornerPoly& p, const JetSpace& J) {
  if (p.nvars() != J.nvars()) throw ShapeError("jet_row: variable count mismatch");
  SparseRow row;
  for (const auto& [e, c] : p.terms()) {
    const int d = total_degree(e);
    if (d > J.l()) break;
    if (d < J.min_degree()) throw ShapeError("jet_row: term below the jet space's minimal degree");
    row.emplace_back(*J.index(e), c);
  }
  std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return row;
}

SparseRow unit_row(std::size_t col) { return SparseRow{{col, Rational(1)}}; }

}  // namespace reticular
