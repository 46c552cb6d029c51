#include "cpindex/linalg.hpp"

#include "cpindex/errors.hpp"
#include "cpindex/fp.hpp"

namespace cpindex {

RowReducer::RowReducer(std::size_t columns, std::uint32_t modulus)
    : columns_(columns), p_(modulus), pivot_row_(columns, -1) {}

void RowReducer::reduce_in_place(DenseRow& row) const {
  if (row.size() != columns_)
    throw StructuralError("row length " + std::to_string(row.size()) + " does not match " +
                          std::to_string(columns_) + " columns");
  const std::uint64_t p = p_;
  for (std::size_t c = 0; c < columns_; ++c) {
    const std::uint32_t f = row[c];
    if (f == 0 || pivot_row_[c] < 0) continue;
    const DenseRow& pivot = rows_[static_cast<std::size_t>(pivot_row_[c])];
    const std::uint64_t neg = p - f;
    for (std::size_t k = c; k < columns_; ++k) {
      if (pivot[k] != 0) row[k] = static_cast<std::uint32_t>((row[k] + neg * pivot[k]) % p);
    }
  }
}

bool RowReducer::insert(DenseRow row) {
  reduce_in_place(row);
  std::size_t lead = 0;
  while (lead < columns_ && row[lead] == 0) ++lead;
  if (lead == columns_) return false;
  const std::uint64_t inv = inverse_mod(row[lead], p_);
  for (std::size_t k = lead; k < columns_; ++k)
    row[k] = static_cast<std::uint32_t>(row[k] * inv % p_);
  pivot_row_[lead] = static_cast<std::ptrdiff_t>(rows_.size());
  rows_.push_back(std::move(row));
  return true;
}

DenseRow RowReducer::reduce(DenseRow row) const {
  reduce_in_place(row);
  return row;
}

bool RowReducer::contains(const DenseRow& row) const {
  DenseRow r = reduce(row);
  for (std::uint32_t x : r)
    if (x != 0) return false;
  return true;
}

}  // namespace cpindex
