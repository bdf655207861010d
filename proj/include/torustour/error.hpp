#pragma once

#include <stdexcept>
#include <string>

namespace torustour {

enum class ErrorCode {
  invalid_board,
  empty_row,
  empty_column,
  cell_not_filled,
  dimension_mismatch,
  invalid_family_parameters,
  positions_out_of_range,
  base_case_search_failed,
  embedding_collision,
  extra_cell_inside_block,
  budget_zero,
  search_space_too_large,
  parse_error,
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, std::string message, long index = -1)
      : std::runtime_error(std::move(message)), code_(code), index_(index) {}

  ErrorCode code() const noexcept { return code_; }

  /// Offending 1-based index for empty_row / empty_column, -1 otherwise.
  long index() const noexcept { return index_; }

private:
  ErrorCode code_;
  long index_;
};

}  // namespace torustour
