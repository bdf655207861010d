#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "torustour/error.hpp"

namespace torustour {

/// 1-based toroidal coordinates. All arithmetic wraps modulo the board
/// dimensions and is reduced to the representatives 1..n / 1..m.
struct Cell {
  int row = 1;
  int col = 1;

  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Reduces `value` modulo `modulus` into {1, ..., modulus}.
inline int wrap_index(int value, int modulus) {
  int v = (value - 1) % modulus;
  if (v < 0) v += modulus;
  return v + 1;
}

enum class Direction : int { forward = 1, backward = -1 };

/// A toroidal partially filled array: only which cells are filled matters.
/// Immutable after construction and safe to share across threads.
///
/// Membership queries are O(1); row/column successor queries are
/// O(log k) via per-row and per-column sorted indices of filled positions.
class Board {
public:
  Board(int rows, int cols, std::span<const Cell> filled);
  Board(int rows, int cols, std::initializer_list<Cell> filled)
      : Board(rows, cols, std::span<const Cell>(filled.begin(), filled.size())) {}

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  std::size_t filled_count() const noexcept { return count_; }

  Cell reduce(Cell cell) const {
    return {wrap_index(cell.row, rows_), wrap_index(cell.col, cols_)};
  }

  bool filled(Cell cell) const {
    cell = reduce(cell);
    return mask_[static_cast<std::size_t>(cell.row - 1) * cols_ + (cell.col - 1)] != 0;
  }

  /// Sorted filled column indices of a row (1-based row in 1..n).
  const std::vector<int>& row_columns(int row) const { return by_row_[row - 1]; }
  /// Sorted filled row indices of a column.
  const std::vector<int>& column_rows(int col) const { return by_col_[col - 1]; }

  /// All filled cells in row-major order.
  std::vector<Cell> cells() const;

  /// First filled cell in row-major order. Throws cell_not_filled when empty.
  Cell first_cell() const;

  /// Next filled cell in the same row, scanning in `direction` with wraparound.
  /// A row with a single filled cell yields the cell itself.
  Cell row_successor(Cell cell, Direction direction) const;

  /// Column counterpart of row_successor.
  Cell column_successor(Cell cell, Direction direction) const;

  friend bool operator==(const Board& a, const Board& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.mask_ == b.mask_;
  }

private:
  int rows_;
  int cols_;
  std::size_t count_ = 0;
  std::vector<std::uint8_t> mask_;
  std::vector<std::vector<int>> by_row_;
  std::vector<std::vector<int>> by_col_;
};

/// Checks that every row and every column holds at least one filled cell.
/// Returns the board unchanged; throws empty_row / empty_column naming the
/// first offending index (rows are checked first).
const Board& validate(const Board& board);

}  // namespace torustour
