#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "reticular/jet_space.hpp"
#include "reticular/poly.hpp"

namespace reticular {

// (column, value) pairs, strictly increasing columns, no zeros.
using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

// Incremental exact row echelon form. Each stored row is monic in its
// leading (lowest) column and leading columns are distinct, so the
// pivot-free columns are determined by the row space alone.
class SparseEchelon {
 public:
  explicit SparseEchelon(std::size_t ncols) : pivot_of_(ncols, -1) {}

  std::size_t ncols() const { return pivot_of_.size(); }
  std::size_t rank() const { return rows_.size(); }

  // Returns true when the row enlarged the span.
  bool insert(const SparseRow& row);
  SparseRow reduce(const SparseRow& row) const;
  bool in_span(const SparseRow& row) const { return reduce(row).empty(); }
  bool is_pivot(std::size_t col) const { return pivot_of_[col] >= 0; }
  std::vector<std::size_t> free_columns() const;

 private:
  std::vector<SparseRow> rows_;
  std::vector<long> pivot_of_;
};

// Coordinates of the jet of p in J; terms above J.l() are dropped, terms
// below J.min_degree() are a shape error.
SparseRow jet_row(const CornerPoly& p, const JetSpace& J);
SparseRow unit_row(std::size_t col);

}  // namespace reticular
