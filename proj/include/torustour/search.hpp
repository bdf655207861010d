#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "torustour/board.hpp"
#include "torustour/orientation.hpp"

namespace torustour {

struct SearchOutcome {
  /// Lexicographically first solution under the enumeration order, if any.
  std::optional<Orientation> found;
  /// Candidates enumerated up to and including the hit, or the full count
  /// scanned when no hit occurred.
  std::uint64_t tested = 0;
  /// Row vector pinned to all +1 (only the column vector varied).
  bool restricted = false;
  /// The whole candidate space was scanned without finding a solution.
  bool exhausted = false;
};

struct SearchOptions {
  bool restrict_rows_to_plus_one = false;
  /// Cap on the number of candidates examined. A capped run that finds no
  /// solution is inconclusive, never an exhaustion.
  std::optional<std::uint64_t> budget;
  unsigned threads = 1;
  /// Guard on the exponent of the candidate space (2^bits tours) when no
  /// budget is given.
  int ceiling_bits = 26;
};

/// Enumerates orientation vectors in lexicographic order (row vector varying
/// slowest, +1 before -1) and returns the first one whose tour covers the
/// board, or exhaustion. Deterministic for any thread count: workers report
/// their chunk's first hit and the global lexicographic minimum wins.
SearchOutcome exhaustive(const Board& board, const SearchOptions& options = {});

struct CensusCase {
  std::string params;
  Board board;
};

struct CensusRow {
  std::string params;
  bool has_solution = false;
  std::optional<Orientation> witness;
  std::uint64_t tested = 0;
};

/// Runs the exhaustive search over a batch of boards; rows keep the input
/// order.
std::vector<CensusRow> census(const std::vector<CensusCase>& cases,
                              const SearchOptions& options = {});

}  // namespace torustour
