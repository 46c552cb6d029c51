#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace cpindex {

using DenseRow = std::vector<std::uint32_t>;

/// Incremental row echelon form over F_p.
///
/// Every stored row is normalized so that its leading entry (the pivot) is 1
/// and all entries left of the pivot are zero. Reducing a vector left to right
/// against the stored pivots therefore leaves a remainder that vanishes at
/// every pivot column, and the remainder is zero iff the vector lies in the
/// span of the inserted rows.
class RowReducer {
 public:
  RowReducer(std::size_t columns, std::uint32_t modulus);

  std::size_t columns() const { return columns_; }
  std::size_t rank() const { return rows_.size(); }
  std::uint32_t modulus() const { return p_; }

  /// Adds a row to the span. Returns true when the rank increased.
  bool insert(DenseRow row);

  /// Remainder of `row` after elimination against the current pivots.
  DenseRow reduce(DenseRow row) const;

  bool contains(const DenseRow& row) const;

 private:
  void reduce_in_place(DenseRow& row) const;

  std::size_t columns_;
  std::uint32_t p_;
  std::vector<DenseRow> rows_;
  std::vector<std::ptrdiff_t> pivot_row_;  // column -> row index, -1 if none
};

}  // namespace cpindex
