#pragma once

#include <vector>

#include "torustour/board.hpp"
#include "torustour/orientation.hpp"

namespace torustour {

/// A set of broken diagonals of a square board. Diagonal i holds the cells
/// {(i,1), (i+1,2), ..., (i-1,n)} with row arithmetic modulo n.
struct DiagonalSet {
  int n = 1;
  std::vector<int> indices;  // distinct values in 1..n, kept sorted
};

/// Diagonal index of a cell on a square board of size n.
int diagonal_of(Cell cell, int n);

Board gen_totally_filled(int n, int m);

/// Square board filled exactly on the listed diagonals.
Board gen_kdiagonal(const DiagonalSet& spec);

/// Standard-form cyclically k-diagonal board: diagonals D_1..D_k.
Board gen_cyclic_kdiagonal(int n, int k);

/// Standard-form k-diagonal board whose empty strips all have width s;
/// requires k(s+1) = n (diagonals 1, s+2, 2s+3, ...).
Board gen_width_kdiagonal(int n, int k, int s);

/// Standard-form cyclically almost k-diagonal board: diagonals D_1..D_k plus
/// the extra cell (1, ell), 2 <= ell <= n-k+1.
Board gen_almost(int n, int k, int ell);

/// Toroidal translation: filled cell (r, c) moves to (r+dr, c+dc).
Board shift(const Board& board, int dr, int dc);

/// Orientation of the shifted board: the sign of row i+dr equals the sign of
/// row i before the shift, so (R, C) solves a board exactly when the shifted
/// pair solves the shifted board.
Orientation shift(const Orientation& orientation, int dr, int dc);

/// Widths of the maximal runs of empty diagonals, in cyclic order.
std::vector<int> strip_widths(const DiagonalSet& spec);

}  // namespace torustour
