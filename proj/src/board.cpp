#include "torustour/board.hpp"

#include <algorithm>

namespace torustour {

Board::Board(int rows, int cols, std::span<const Cell> filled) : rows_(rows), cols_(cols) {
  if (rows < 1 || cols < 1)
    throw Error(ErrorCode::invalid_board, "board dimensions must be at least 1x1");
  mask_.assign(static_cast<std::size_t>(rows) * cols, 0);
  by_row_.resize(rows);
  by_col_.resize(cols);
  for (Cell cell : filled) {
    cell = reduce(cell);
    auto& slot = mask_[static_cast<std::size_t>(cell.row - 1) * cols_ + (cell.col - 1)];
    if (slot) continue;  // duplicates are harmless
    slot = 1;
    ++count_;
    by_row_[cell.row - 1].push_back(cell.col);
    by_col_[cell.col - 1].push_back(cell.row);
  }
  for (auto& v : by_row_) std::sort(v.begin(), v.end());
  for (auto& v : by_col_) std::sort(v.begin(), v.end());
}

std::vector<Cell> Board::cells() const {
  std::vector<Cell> out;
  out.reserve(count_);
  for (int i = 1; i <= rows_; ++i)
    for (int j : by_row_[i - 1]) out.push_back({i, j});
  return out;
}

Cell Board::first_cell() const {
  for (int i = 1; i <= rows_; ++i)
    if (!by_row_[i - 1].empty()) return {i, by_row_[i - 1].front()};
  throw Error(ErrorCode::cell_not_filled, "board has no filled cell");
}

namespace {

// Position of `value` in sorted `values`; throws when absent.
std::size_t locate(const std::vector<int>& values, int value, const char* what) {
  auto it = std::lower_bound(values.begin(), values.end(), value);
  if (it == values.end() || *it != value)
    throw Error(ErrorCode::cell_not_filled, std::string("cell is not filled: ") + what);
  return static_cast<std::size_t>(it - values.begin());
}

int cyclic_neighbor(const std::vector<int>& values, std::size_t pos, Direction direction) {
  const std::size_t size = values.size();
  if (direction == Direction::forward) {
    ++pos;
    if (pos == size) pos = 0;
  } else {
    pos = (pos == 0 ? size : pos) - 1;
  }
  return values[pos];
}

}  // namespace

Cell Board::row_successor(Cell cell, Direction direction) const {
  cell = reduce(cell);
  const auto& cols = by_row_[cell.row - 1];
  const std::size_t pos = locate(cols, cell.col, "row successor");
  return {cell.row, cyclic_neighbor(cols, pos, direction)};
}

Cell Board::column_successor(Cell cell, Direction direction) const {
  cell = reduce(cell);
  const auto& rows = by_col_[cell.col - 1];
  const std::size_t pos = locate(rows, cell.row, "column successor");
  return {cyclic_neighbor(rows, pos, direction), cell.col};
}

const Board& validate(const Board& board) {
  for (int i = 1; i <= board.rows(); ++i)
    if (board.row_columns(i).empty())
      throw Error(ErrorCode::empty_row, "row " + std::to_string(i) + " has no filled cell", i);
  for (int j = 1; j <= board.cols(); ++j)
    if (board.column_rows(j).empty())
      throw Error(ErrorCode::empty_column, "column " + std::to_string(j) + " has no filled cell",
                  j);
  return board;
}

}  // namespace torustour
