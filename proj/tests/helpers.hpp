#pragma once

#include <initializer_list>
#include <random>
#include <vector>

#include "oracle.hpp"
#include "torustour/board.hpp"
#include "torustour/orientation.hpp"

inline torustour::Orientation make_orientation(std::initializer_list<int> rows,
                                               std::initializer_list<int> cols) {
  std::vector<std::int8_t> r, c;
  for (int v : rows) r.push_back(static_cast<std::int8_t>(v));
  for (int v : cols) c.push_back(static_cast<std::int8_t>(v));
  return torustour::Orientation(std::move(r), std::move(c));
}

// The 4x4 nine-cell demo board used throughout.
inline torustour::Board sample_4x4() {
  return torustour::Board(
      4, 4, {{1, 1}, {1, 4}, {2, 2}, {2, 3}, {3, 2}, {3, 3}, {3, 4}, {4, 1}, {4, 3}});
}

inline torustour::Orientation sample_4x4_solution() {
  return make_orientation({-1, 1, 1, -1}, {1, -1, 1, 1});
}

// A 7x9 board splitting into two row/column components.
inline torustour::Board disconnected_7x9() {
  std::vector<torustour::Cell> cells;
  auto row = [&](int r, std::initializer_list<int> cols) {
    for (int c : cols) cells.push_back({r, c});
  };
  row(1, {4});
  row(2, {1, 3, 5, 7, 8, 9});
  row(3, {4, 6});
  row(4, {1, 2, 3, 5, 7, 8, 9});
  row(5, {1, 2, 3, 5, 7});
  row(6, {4, 6});
  row(7, {4, 6});
  return torustour::Board(7, 9, cells);
}

inline oracle::Grid to_grid(const torustour::Board& board) {
  oracle::Grid grid{board.rows(), board.cols(), {}};
  for (auto cell : board.cells()) grid.cells.insert({cell.row, cell.col});
  return grid;
}

inline std::vector<int> to_signs(std::span<const std::int8_t> signs) {
  return {signs.begin(), signs.end()};
}

inline torustour::Orientation random_orientation(std::mt19937& rng, int n, int m) {
  std::bernoulli_distribution coin(0.5);
  std::vector<std::int8_t> r(n), c(m);
  for (auto& v : r) v = coin(rng) ? 1 : -1;
  for (auto& v : c) v = coin(rng) ? 1 : -1;
  return torustour::Orientation(std::move(r), std::move(c));
}

// Uniform random filled pattern, re-drawn until every row and column holds a
// filled cell.
inline torustour::Board random_valid_board(std::mt19937& rng, int max_rows = 5,
                                           int max_cols = 5) {
  std::uniform_int_distribution<int> rows_dist(1, max_rows), cols_dist(1, max_cols);
  std::bernoulli_distribution coin(0.5);
  while (true) {
    const int n = rows_dist(rng);
    const int m = cols_dist(rng);
    std::vector<torustour::Cell> cells;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= m; ++j)
        if (coin(rng)) cells.push_back({i, j});
    if (cells.empty()) continue;
    torustour::Board board(n, m, cells);
    bool valid = true;
    for (int i = 1; i <= n && valid; ++i) valid = !board.row_columns(i).empty();
    for (int j = 1; j <= m && valid; ++j) valid = !board.column_rows(j).empty();
    if (valid) return board;
  }
}
