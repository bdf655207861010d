#include "torustour/tour.hpp"

#include <stdexcept>

namespace torustour {

namespace {

void require_dimensions(const Board& board, const Orientation& orientation) {
  if (orientation.rows() != board.rows() || orientation.cols() != board.cols())
    throw Error(ErrorCode::dimension_mismatch,
                "orientation is " + std::to_string(orientation.rows()) + "x" +
                    std::to_string(orientation.cols()) + " but board is " +
                    std::to_string(board.rows()) + "x" + std::to_string(board.cols()));
}

inline Cell step(const Board& board, std::span<const std::int8_t> row_signs,
                 std::span<const std::int8_t> col_signs, Cell cell) {
  const Direction row_dir =
      row_signs[cell.row - 1] > 0 ? Direction::forward : Direction::backward;
  const Cell mid = board.row_successor(cell, row_dir);
  const Direction col_dir =
      col_signs[mid.col - 1] > 0 ? Direction::forward : Direction::backward;
  return board.column_successor(mid, col_dir);
}

}  // namespace

Cell move(const Board& board, const Orientation& orientation, Cell cell) {
  require_dimensions(board, orientation);
  cell = board.reduce(cell);
  if (!board.filled(cell)) throw Error(ErrorCode::cell_not_filled, "move from an empty cell");
  return step(board, orientation.row_signs(), orientation.col_signs(), cell);
}

std::size_t tour_length(const Board& board, const Orientation& orientation, Cell start) {
  require_dimensions(board, orientation);
  start = board.reduce(start);
  if (!board.filled(start)) throw Error(ErrorCode::cell_not_filled, "tour from an empty cell");
  const auto rs = orientation.row_signs();
  const auto cs = orientation.col_signs();
  std::size_t length = 0;
  Cell current = start;
  do {
    current = step(board, rs, cs, current);
    ++length;
    // The move function is a bijection on the filled cells, so the cycle
    // cannot exceed the filled count; anything longer means corruption.
    if (length > board.filled_count())
      throw std::logic_error("tour exceeded the filled-cell count");
  } while (current != start);
  return length;
}

Tour tour(const Board& board, const Orientation& orientation, Cell start) {
  require_dimensions(board, orientation);
  start = board.reduce(start);
  if (!board.filled(start)) throw Error(ErrorCode::cell_not_filled, "tour from an empty cell");
  const auto rs = orientation.row_signs();
  const auto cs = orientation.col_signs();
  Tour result;
  result.start = start;
  result.cells.push_back(start);
  for (Cell current = step(board, rs, cs, start); current != start;
       current = step(board, rs, cs, current)) {
    result.cells.push_back(current);
    if (result.cells.size() > board.filled_count())
      throw std::logic_error("tour exceeded the filled-cell count");
  }
  result.covers_all = result.cells.size() == board.filled_count();
  return result;
}

bool is_solution(const Board& board, const Orientation& orientation) {
  require_dimensions(board, orientation);
  return detail::tour_covers(board, orientation.row_signs(), orientation.col_signs(),
                             board.first_cell());
}

std::vector<Tour> cycle_structure(const Board& board, const Orientation& orientation) {
  require_dimensions(board, orientation);
  const auto rs = orientation.row_signs();
  const auto cs = orientation.col_signs();
  std::vector<std::uint8_t> visited(static_cast<std::size_t>(board.rows()) * board.cols(), 0);
  auto mark = [&](Cell c) {
    visited[static_cast<std::size_t>(c.row - 1) * board.cols() + (c.col - 1)] = 1;
  };
  auto seen = [&](Cell c) {
    return visited[static_cast<std::size_t>(c.row - 1) * board.cols() + (c.col - 1)] != 0;
  };
  std::vector<Tour> parts;
  for (Cell start : board.cells()) {
    if (seen(start)) continue;
    Tour part;
    part.start = start;
    part.cells.push_back(start);
    mark(start);
    for (Cell current = step(board, rs, cs, start); current != start;
         current = step(board, rs, cs, current)) {
      part.cells.push_back(current);
      mark(current);
      if (part.cells.size() > board.filled_count())
        throw std::logic_error("tour exceeded the filled-cell count");
    }
    part.covers_all = part.cells.size() == board.filled_count();
    parts.push_back(std::move(part));
  }
  return parts;
}

namespace detail {

bool tour_covers(const Board& board, std::span<const std::int8_t> row_signs,
                 std::span<const std::int8_t> col_signs, Cell start) {
  const std::size_t target = board.filled_count();
  std::size_t length = 0;
  Cell current = start;
  do {
    current = step(board, row_signs, col_signs, current);
    ++length;
    if (length > target) throw std::logic_error("tour exceeded the filled-cell count");
  } while (current != start);
  return length == target;
}

}  // namespace detail

}  // namespace torustour
