#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "torustour/board.hpp"
#include "torustour/orientation.hpp"

namespace torustour {

/// The closed cycle obtained by iterating the move function from `start`.
struct Tour {
  Cell start;
  std::vector<Cell> cells;  // cells[0] == start, all distinct
  bool covers_all = false;  // cells visit every filled cell of the board
};

/// One application of the move function: step inside the row along its
/// orientation to the next filled cell (i, j'), then inside column j' along
/// its orientation to the next filled cell.
Cell move(const Board& board, const Orientation& orientation, Cell cell);

/// Length of the cycle through `start` without storing it.
std::size_t tour_length(const Board& board, const Orientation& orientation, Cell start);

/// Iterates `move` until `start` recurs and returns the ordered cycle.
Tour tour(const Board& board, const Orientation& orientation, Cell start);

/// True iff the tour from any filled cell covers the whole board. The board
/// must be validated; a single start is evaluated (coverage is independent
/// of the starting cell).
bool is_solution(const Board& board, const Orientation& orientation);

/// Disjoint closed tours partitioning the filled cells, ordered by their
/// row-major smallest cell.
std::vector<Tour> cycle_structure(const Board& board, const Orientation& orientation);

namespace detail {

/// Hot path shared by the search sweep: cycle through `start` covers all
/// filled cells. Sign spans must match the board dimensions.
bool tour_covers(const Board& board, std::span<const std::int8_t> row_signs,
                 std::span<const std::int8_t> col_signs, Cell start);

}  // namespace detail

}  // namespace torustour
