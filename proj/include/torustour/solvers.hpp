#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "torustour/analysis.hpp"
#include "torustour/board.hpp"
#include "torustour/generators.hpp"
#include "torustour/orientation.hpp"

namespace torustour {

enum class Verdict { solution, proven_none, unknown };

enum class NoneReason {
  parity_violation,
  closed_subarray,
  family_necessary_condition,
  search_exhausted,
};

const char* verdict_name(Verdict verdict);
const char* reason_name(NoneReason reason);

struct SolveReport {
  Verdict verdict = Verdict::unknown;
  std::optional<Orientation> orientation;   // present iff solution
  std::optional<NoneReason> reason;         // present iff proven_none
  std::string method;                       // which construction or check decided
  std::string detail;                       // human-readable specifics
  std::optional<ClosureWitness> witness;    // for closed_subarray
  std::optional<std::uint64_t> tested;      // when a search ran
  std::optional<std::size_t> tour_length;   // for solutions
};

/// Complete decision for totally filled n x m boards: no solution when both
/// dimensions are even, otherwise R all +1 and C with a canonical trailing
/// block of -1 entries (m-2l = 1 for odd m, = 2 for even m).
SolveReport solve_totally_filled(int n, int m);

/// Cyclically k-diagonal boards of size n (standard form). n = k delegates
/// to the totally filled solver. Dispatch: parity conditions, then the
/// single-minus construction when gcd(n, k-1) = 1, the explicit spread
/// minus set when n >= (k-2)(k-1), and otherwise a memoized restricted
/// search in the base window [k+2, 2k-1] lifted by steps of k-1.
SolveReport solve_cyclic_kdiagonal(int n, int k);

/// Lifts a known all-plus-rows solution at size n to size n + lambda(k-1):
/// same minus positions, longer vectors.
Orientation extend_cyclic_solution(std::span<const int> minus_positions, int n, int k,
                                   int lambda);

/// k-diagonal boards (k >= 3 odd) whose empty strips all have width s,
/// given in standard form (D_1 filled, D_n empty).
SolveReport solve_width_kdiagonal(int n, int k, int s, const DiagonalSet& diagonals);

/// Almost k-diagonal boards in standard form: underlying diagonals plus the
/// extra cell (1, ell), 2 <= ell <= s+1.
SolveReport solve_almost_kdiagonal(int n, int k, int s, int ell, const DiagonalSet& diagonals);

enum class AlmostCondition {
  minus_at_extra_column,   // c_ell must be -1
  count_coprime_half_k,    // gcd(|E|, k/2) = 1
  class_coverage,          // E covers the classes mod gcd(n, k-1), all of
                           // them when ell = 1 mod d, else all but at most
                           // the class of 1
};

const char* almost_condition_name(AlmostCondition condition);

/// Necessary conditions for all-plus-rows solutions on cyclically almost
/// k-diagonal boards with k >= 4 even; returns the violated subset.
std::vector<AlmostCondition> almost_necessary_keven(int n, int k, int ell,
                                                    std::span<const int> minus_positions);

/// Injective placement of a block's rows/columns into the composite board.
struct BlockEmbedding {
  std::vector<int> rows;  // rows[i-1] = composite row of block row i
  std::vector<int> cols;
};

struct ComposeResult {
  Board board;
  Orientation orientation;
  Cell extra;
  bool verified = false;  // the composite orientation covers the composite board
};

/// Joins two solved boards into one: block cells are placed through the
/// embeddings (block-diagonal by default), one extra cell is added in an
/// off-block region, and the orientations are carried over entry by entry.
/// The default extra cell sits at the first composite row of the second
/// block and the first composite column of the first block.
ComposeResult compose_block(const Board& first, const Orientation& first_solution,
                            const Board& second, const Orientation& second_solution,
                            std::optional<Cell> extra = {},
                            std::optional<BlockEmbedding> first_embedding = {},
                            std::optional<BlockEmbedding> second_embedding = {});

struct SolveOptions {
  /// Candidate cap for the exhaustive fallback; unset runs the whole space
  /// within the search ceiling.
  std::optional<std::uint64_t> search_budget;
  unsigned threads = 1;
};

/// Full pipeline: validation, necessary conditions (weakest violated
/// condition cited first), family classification and dispatch, exhaustive
/// search fallback. Every returned solution is verified against the input
/// board.
SolveReport solve(const Board& board, const SolveOptions& options = {});

}  // namespace torustour
