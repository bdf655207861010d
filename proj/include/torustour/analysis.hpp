#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "torustour/board.hpp"
#include "torustour/orientation.hpp"

namespace torustour {

/// Filled-cell count must have the same parity as n+m-1 for a covering tour
/// to exist.
bool parity_ok(const Board& board);

/// A proper closed subarray: every filled cell in a listed row or column
/// lies in both a listed row and a listed column.
struct ClosureWitness {
  std::vector<int> rows;
  std::vector<int> cols;
  bool proper = true;
};

struct ClosureCheck {
  bool minimal = true;
  std::optional<ClosureWitness> witness;  // present iff not minimal
};

/// A validated board is a minimal closed subarray iff its bipartite
/// row-column incidence graph (edges = filled cells) is connected; closed
/// subarrays are exactly unions of connected components. When disconnected,
/// the witness is the component containing column 1.
ClosureCheck minimal_closed(const Board& board);

struct PermutationSigns {
  int row_sweep;   // each row cycled one step along its orientation
  int col_sweep;   // each column likewise
  int composite;   // the move function itself
};

/// Signs (+1/-1) of the row-sweep, column-sweep and composite permutations
/// of the filled cells. The composite sign always equals the product.
PermutationSigns permutation_signs(const Board& board, const Orientation& orientation);

enum class Family {
  totally_filled,
  k_diagonal,
  cyclically_k_diagonal,
  width_k_diagonal,
  almost_k_diagonal,
  other,
};

const char* family_name(Family family);

/// Classification of a board into the supported structured families.
///
/// `standard_form_shift` = (dr, dc) is the toroidal shift that carries the
/// board into standard form: diagonal families get their first filled
/// diagonal moved to D_1 (and D_n empty where applicable); almost boards
/// additionally get the extra cell moved to (1, extra_col).
struct FamilyProfile {
  Family kind = Family::other;
  std::optional<int> k;          // number of (fully) filled diagonals
  std::optional<int> width;      // uniform empty-strip width s, when uniform
  std::optional<int> extra_col;  // column of the extra cell in standard form
  std::pair<int, int> standard_form_shift{0, 0};
  std::vector<int> diagonals;    // filled diagonal indices in standard form
};

/// Detects the most specific family (cyclically k-diagonal over width over
/// plain k-diagonal); falls back to `other`. Non-square boards classify as
/// totally_filled or other.
FamilyProfile classify(const Board& board);

/// A permutation of a fixed sorted list of column positions.
struct ListPermutation {
  std::vector<int> domain;  // sorted, the positions E of -1 entries
  std::vector<int> image;   // image[i] is where domain[i] maps

  int apply(int element) const;
  std::vector<std::vector<int>> cycles() const;
  std::size_t cycle_count() const { return cycles().size(); }
  bool single_cycle() const { return cycle_count() == 1; }
};

/// The three permutations of the minus positions E that govern covering
/// tours on a cyclically k-diagonal board of size n with all rows oriented
/// forward:
///   - decrement_hop: e -> first marked position reachable as e - m(k-1) mod n,
///   - rank_shift:    e_i -> e_{i+(k-1)} in sorted order (indices mod |E|),
///   - combined:      rank_shift after decrement_hop; it equals the map
///                    "next marked diagonal cell reached by the tour" and a
///                    covering tour requires it to be a single cycle.
struct MinusPermutations {
  ListPermutation decrement_hop;
  ListPermutation rank_shift;
  ListPermutation combined;
};

MinusPermutations minus_permutations(int n, int k, std::span<const int> minus_positions);

/// Do the values cover every congruence class modulo d?
bool covers_all_classes(int d, std::span<const int> values);

}  // namespace torustour
