#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "torustour/error.hpp"

namespace torustour {

/// A pair of +-1 vectors choosing the traversal direction of every row and
/// every column: +1 reads a row left-to-right / a column top-to-bottom.
/// Immutable after construction.
class Orientation {
public:
  Orientation(std::vector<std::int8_t> row_signs, std::vector<std::int8_t> col_signs);

  static Orientation all_plus(int rows, int cols);

  /// R all +1, C carrying -1 exactly at the listed 1-based columns.
  static Orientation with_minus_columns(int rows, int cols, std::span<const int> minus_cols);

  int rows() const noexcept { return static_cast<int>(row_signs_.size()); }
  int cols() const noexcept { return static_cast<int>(col_signs_.size()); }

  /// Sign of row i (1-based), +1 or -1.
  int r(int row) const { return row_signs_[row - 1]; }
  /// Sign of column j (1-based).
  int c(int col) const { return col_signs_[col - 1]; }

  std::span<const std::int8_t> row_signs() const noexcept { return row_signs_; }
  std::span<const std::int8_t> col_signs() const noexcept { return col_signs_; }

  /// Sorted 1-based positions of -1 entries in the column vector.
  std::vector<int> minus_columns() const;

  /// "+--+" style rendering, one character per entry.
  std::string row_string() const;
  std::string col_string() const;

  friend bool operator==(const Orientation&, const Orientation&) = default;

private:
  std::vector<std::int8_t> row_signs_;
  std::vector<std::int8_t> col_signs_;
};

}  // namespace torustour
