#pragma once

#include <iosfwd>
#include <string>

#include "torustour/board.hpp"
#include "torustour/orientation.hpp"

namespace torustour {

/// Board text format: first line "n m", then n lines of exactly m characters,
/// '#' filled and '.' empty.
Board read_board(std::istream& in);
Board board_from_string(const std::string& text);
void write_board(std::ostream& out, const Board& board);
std::string board_to_string(const Board& board);

/// Orientation text format: line 1 is the row vector as '+'/'-' characters,
/// line 2 the column vector.
Orientation read_orientation(std::istream& in);
Orientation orientation_from_string(const std::string& text);
void write_orientation(std::ostream& out, const Orientation& orientation);
std::string orientation_to_string(const Orientation& orientation);

/// Step-numbered grid of the tour from `start`, with per-row and per-column
/// direction arrows. Filled cells missed by the tour show as a bullet.
/// `ascii` swaps the arrows for > < v ^ and the bullet for '*'.
std::string render_tour(const Board& board, const Orientation& orientation, Cell start,
                        bool ascii = false);

}  // namespace torustour
