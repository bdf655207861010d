#include <doctest.h>

#include "helpers.hpp"
#include "torustour/board.hpp"

using namespace torustour;

TEST_CASE("construction wraps indices and drops duplicates") {
  const Board board(4, 4, {{1, 1}, {5, 5}, {0, 4}});
  CHECK(board.filled_count() == 2);
  CHECK(board.filled({1, 1}));
  CHECK(board.filled({4, 4}));
  CHECK(board.filled({5, 5}));  // wraps back onto (1,1)
  CHECK_FALSE(board.filled({2, 2}));
  CHECK_THROWS_AS(Board(0, 3, {{1, 1}}), Error);
}

TEST_CASE("validate accepts boards covering every row and column") {
  const Board diagonal(2, 2, {{1, 1}, {2, 2}});
  CHECK(&validate(diagonal) == &diagonal);
  CHECK_NOTHROW(validate(sample_4x4()));
}

TEST_CASE("validate names the first offending index") {
  const Board no_second_row(2, 2, {{1, 1}, {1, 2}});
  try {
    validate(no_second_row);
    FAIL("expected empty_row");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::empty_row);
    CHECK(e.index() == 2);
  }
  const Board no_second_col(2, 2, {{1, 1}, {2, 1}});
  try {
    validate(no_second_col);
    FAIL("expected empty_column");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::empty_column);
    CHECK(e.index() == 2);
  }
  const Board empty(3, 3, std::initializer_list<Cell>{});
  CHECK_THROWS_AS(validate(empty), Error);
}

TEST_CASE("row successor walks to the next filled cell with wraparound") {
  const Board board = sample_4x4();
  CHECK(board.row_successor({1, 1}, Direction::backward) == Cell{1, 4});
  CHECK(board.row_successor({3, 4}, Direction::forward) == Cell{3, 2});
  // A row with a single filled cell is its own successor.
  const Board lonely(2, 3, {{1, 2}, {2, 1}, {2, 3}});
  CHECK(lonely.row_successor({1, 2}, Direction::forward) == Cell{1, 2});
  CHECK(lonely.row_successor({1, 2}, Direction::backward) == Cell{1, 2});
  CHECK_THROWS_AS(board.row_successor({1, 2}, Direction::forward), Error);
}

TEST_CASE("column successor mirrors the row logic") {
  const Board board = sample_4x4();
  CHECK(board.column_successor({1, 4}, Direction::forward) == Cell{3, 4});
  CHECK(board.column_successor({3, 2}, Direction::backward) == Cell{2, 2});
  const Board lonely(3, 2, {{2, 1}, {1, 2}, {3, 2}});
  CHECK(lonely.column_successor({2, 1}, Direction::forward) == Cell{2, 1});
}

TEST_CASE("successors agree with a linear-scan reference") {
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 200; ++trial) {
    const Board board = random_valid_board(rng, 6, 6);
    const auto grid = to_grid(board);
    for (const Cell cell : board.cells()) {
      for (int dir : {1, -1}) {
        const auto direction = dir > 0 ? Direction::forward : Direction::backward;
        const auto expected_row = oracle::row_step(grid, cell.row, cell.col, dir);
        CHECK(board.row_successor(cell, direction) ==
              Cell{expected_row.first, expected_row.second});
        const auto expected_col = oracle::col_step(grid, cell.row, cell.col, dir);
        CHECK(board.column_successor(cell, direction) ==
              Cell{expected_col.first, expected_col.second});
      }
    }
  }
}

TEST_CASE("successor and inverse successor cancel") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const Board board = random_valid_board(rng);
    for (const Cell cell : board.cells()) {
      CHECK(board.row_successor(board.row_successor(cell, Direction::forward),
                                Direction::backward) == cell);
      CHECK(board.column_successor(board.column_successor(cell, Direction::backward),
                                   Direction::forward) == cell);
    }
  }
}

TEST_CASE("cells come back in row-major order") {
  const Board board = sample_4x4();
  const auto cells = board.cells();
  REQUIRE(cells.size() == 9);
  CHECK(cells.front() == Cell{1, 1});
  CHECK(cells.back() == Cell{4, 3});
  CHECK(std::is_sorted(cells.begin(), cells.end()));
  CHECK(board.first_cell() == Cell{1, 1});
}
