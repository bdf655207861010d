#include "torustour/orientation.hpp"

#include <algorithm>

namespace torustour {

Orientation::Orientation(std::vector<std::int8_t> row_signs, std::vector<std::int8_t> col_signs)
    : row_signs_(std::move(row_signs)), col_signs_(std::move(col_signs)) {
  if (row_signs_.empty() || col_signs_.empty())
    throw Error(ErrorCode::invalid_board, "orientation vectors must be non-empty");
  auto ok = [](std::int8_t s) { return s == 1 || s == -1; };
  if (!std::all_of(row_signs_.begin(), row_signs_.end(), ok) ||
      !std::all_of(col_signs_.begin(), col_signs_.end(), ok))
    throw Error(ErrorCode::invalid_board, "orientation entries must be +1 or -1");
}

Orientation Orientation::all_plus(int rows, int cols) {
  return Orientation(std::vector<std::int8_t>(rows, 1), std::vector<std::int8_t>(cols, 1));
}

Orientation Orientation::with_minus_columns(int rows, int cols, std::span<const int> minus_cols) {
  std::vector<std::int8_t> c(cols, 1);
  for (int col : minus_cols) {
    if (col < 1 || col > cols)
      throw Error(ErrorCode::positions_out_of_range,
                  "minus position " + std::to_string(col) + " outside 1.." + std::to_string(cols));
    c[col - 1] = -1;
  }
  return Orientation(std::vector<std::int8_t>(rows, 1), std::move(c));
}

std::vector<int> Orientation::minus_columns() const {
  std::vector<int> out;
  for (int j = 1; j <= cols(); ++j)
    if (c(j) < 0) out.push_back(j);
  return out;
}

namespace {
std::string signs_to_string(std::span<const std::int8_t> signs) {
  std::string s;
  s.reserve(signs.size());
  for (auto v : signs) s.push_back(v > 0 ? '+' : '-');
  return s;
}
}  // namespace

std::string Orientation::row_string() const { return signs_to_string(row_signs_); }
std::string Orientation::col_string() const { return signs_to_string(col_signs_); }

}  // namespace torustour
