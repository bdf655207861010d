#include "torustour/generators.hpp"

#include <algorithm>

namespace torustour {

int diagonal_of(Cell cell, int n) { return wrap_index(cell.row - cell.col + 1, n); }

namespace {

std::vector<int> checked_indices(const DiagonalSet& spec) {
  if (spec.n < 1)
    throw Error(ErrorCode::invalid_family_parameters, "board size must be at least 1");
  std::vector<int> indices = spec.indices;
  std::sort(indices.begin(), indices.end());
  if (indices.empty() || indices.front() < 1 || indices.back() > spec.n ||
      std::adjacent_find(indices.begin(), indices.end()) != indices.end())
    throw Error(ErrorCode::invalid_family_parameters,
                "diagonal indices must be distinct values in 1..n");
  return indices;
}

void append_diagonal(std::vector<Cell>& cells, int index, int n) {
  for (int col = 1; col <= n; ++col) cells.push_back({wrap_index(index + col - 1, n), col});
}

}  // namespace

Board gen_totally_filled(int n, int m) {
  if (n < 1 || m < 1)
    throw Error(ErrorCode::invalid_family_parameters, "dimensions must be at least 1");
  std::vector<Cell> cells;
  cells.reserve(static_cast<std::size_t>(n) * m);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= m; ++j) cells.push_back({i, j});
  return Board(n, m, cells);
}

Board gen_kdiagonal(const DiagonalSet& spec) {
  const auto indices = checked_indices(spec);
  std::vector<Cell> cells;
  cells.reserve(indices.size() * spec.n);
  for (int index : indices) append_diagonal(cells, index, spec.n);
  return Board(spec.n, spec.n, cells);
}

Board gen_cyclic_kdiagonal(int n, int k) {
  if (k < 1 || k > n)
    throw Error(ErrorCode::invalid_family_parameters, "need 1 <= k <= n");
  std::vector<int> indices(k);
  for (int i = 0; i < k; ++i) indices[i] = i + 1;
  return gen_kdiagonal({n, std::move(indices)});
}

Board gen_width_kdiagonal(int n, int k, int s) {
  if (k < 1 || s < 1 || k * (s + 1) != n)
    throw Error(ErrorCode::invalid_family_parameters,
                "uniform width needs k(s+1) = n with s >= 1");
  std::vector<int> indices(k);
  for (int i = 0; i < k; ++i) indices[i] = 1 + i * (s + 1);
  return gen_kdiagonal({n, std::move(indices)});
}

Board gen_almost(int n, int k, int ell) {
  if (k < 1 || k >= n)
    throw Error(ErrorCode::invalid_family_parameters, "need 1 <= k < n");
  if (ell < 2 || ell > n - k + 1)
    throw Error(ErrorCode::invalid_family_parameters,
                "extra column must satisfy 2 <= ell <= n-k+1");
  std::vector<Cell> cells;
  cells.reserve(static_cast<std::size_t>(k) * n + 1);
  for (int index = 1; index <= k; ++index) append_diagonal(cells, index, n);
  cells.push_back({1, ell});
  return Board(n, n, cells);
}

Board shift(const Board& board, int dr, int dc) {
  std::vector<Cell> cells = board.cells();
  for (Cell& cell : cells) {
    cell.row = wrap_index(cell.row + dr, board.rows());
    cell.col = wrap_index(cell.col + dc, board.cols());
  }
  return Board(board.rows(), board.cols(), cells);
}

Orientation shift(const Orientation& orientation, int dr, int dc) {
  const int n = orientation.rows();
  const int m = orientation.cols();
  std::vector<std::int8_t> r(n), c(m);
  for (int i = 1; i <= n; ++i) r[wrap_index(i + dr, n) - 1] = static_cast<std::int8_t>(orientation.r(i));
  for (int j = 1; j <= m; ++j) c[wrap_index(j + dc, m) - 1] = static_cast<std::int8_t>(orientation.c(j));
  return Orientation(std::move(r), std::move(c));
}

std::vector<int> strip_widths(const DiagonalSet& spec) {
  const auto indices = checked_indices(spec);
  std::vector<int> widths;
  const std::size_t k = indices.size();
  if (static_cast<int>(k) == spec.n) return widths;
  for (std::size_t j = 0; j < k; ++j) {
    const int current = indices[j];
    const int next = (j + 1 < k) ? indices[j + 1] : indices[0] + spec.n;
    const int gap = next - current - 1;
    if (gap > 0) widths.push_back(gap);
  }
  return widths;
}

}  // namespace torustour
