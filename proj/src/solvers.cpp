#include "torustour/solvers.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "torustour/search.hpp"
#include "torustour/tour.hpp"

namespace torustour {

const char* verdict_name(Verdict verdict) {
  switch (verdict) {
    case Verdict::solution: return "solution";
    case Verdict::proven_none: return "proven_none";
    case Verdict::unknown: return "unknown";
  }
  return "unknown";
}

const char* reason_name(NoneReason reason) {
  switch (reason) {
    case NoneReason::parity_violation: return "parity_violation";
    case NoneReason::closed_subarray: return "closed_subarray";
    case NoneReason::family_necessary_condition: return "family_necessary_condition";
    case NoneReason::search_exhausted: return "search_exhausted";
  }
  return "unknown";
}

const char* almost_condition_name(AlmostCondition condition) {
  switch (condition) {
    case AlmostCondition::minus_at_extra_column: return "minus_at_extra_column";
    case AlmostCondition::count_coprime_half_k: return "count_coprime_half_k";
    case AlmostCondition::class_coverage: return "class_coverage";
  }
  return "unknown";
}

namespace {

SolveReport none_report(NoneReason reason, std::string method, std::string detail) {
  SolveReport report;
  report.verdict = Verdict::proven_none;
  report.reason = reason;
  report.method = std::move(method);
  report.detail = std::move(detail);
  return report;
}

SolveReport unknown_report(std::string method, std::string detail) {
  SolveReport report;
  report.verdict = Verdict::unknown;
  report.method = std::move(method);
  report.detail = std::move(detail);
  return report;
}

// Every constructive branch runs through here: a claimed solution that does
// not cover its board is a falsified construction, never returned quietly.
SolveReport checked_solution(const Board& board, Orientation orientation, std::string method,
                             std::string detail = {}) {
  if (!is_solution(board, orientation))
    throw std::logic_error("construction '" + method + "' failed self-verification");
  SolveReport report;
  report.verdict = Verdict::solution;
  report.tour_length = board.filled_count();
  report.orientation = std::move(orientation);
  report.method = std::move(method);
  report.detail = std::move(detail);
  return report;
}

std::vector<int> checked_sorted_positions(std::span<const int> values, int upper,
                                          const char* what) {
  std::vector<int> out(values.begin(), values.end());
  if (!std::is_sorted(out.begin(), out.end()) ||
      std::adjacent_find(out.begin(), out.end()) != out.end() ||
      (!out.empty() && (out.front() < 1 || out.back() > upper)))
    throw Error(ErrorCode::positions_out_of_range,
                std::string(what) + " must be strictly increasing within 1.." +
                    std::to_string(upper));
  return out;
}

// Standard-form check shared by the width and almost solvers.
void require_standard_diagonals(const DiagonalSet& diagonals, int n, int k) {
  if (diagonals.n != n)
    throw Error(ErrorCode::invalid_family_parameters, "diagonal set size differs from n");
  if (static_cast<int>(diagonals.indices.size()) != k)
    throw Error(ErrorCode::invalid_family_parameters, "diagonal set does not hold k diagonals");
  const auto& idx = diagonals.indices;
  if (!std::is_sorted(idx.begin(), idx.end()) ||
      std::adjacent_find(idx.begin(), idx.end()) != idx.end())
    throw Error(ErrorCode::invalid_family_parameters, "diagonal indices must be sorted and distinct");
  if (!std::binary_search(idx.begin(), idx.end(), 1))
    throw Error(ErrorCode::invalid_family_parameters, "standard form needs diagonal 1 filled");
}

void require_uniform_width(const DiagonalSet& diagonals, int s) {
  const auto widths = strip_widths(diagonals);
  const bool uniform = !widths.empty() && std::all_of(widths.begin(), widths.end(),
                                                      [&](int w) { return w == s; });
  if (!uniform)
    throw Error(ErrorCode::invalid_family_parameters,
                "diagonal set does not realize uniform strip width " + std::to_string(s));
}

std::mutex base_cache_mutex;
std::map<std::pair<int, int>, std::vector<int>> base_cache;  // (n, k) -> minus positions

// Lexicographically first all-plus-rows solution in the base window,
// memoized per (n, k).
std::vector<int> base_window_solution(int n, int k) {
  {
    std::lock_guard<std::mutex> lock(base_cache_mutex);
    if (auto it = base_cache.find({n, k}); it != base_cache.end()) return it->second;
  }
  SearchOptions options;
  options.restrict_rows_to_plus_one = true;
  options.ceiling_bits = std::max(32, n + 1);
  const SearchOutcome outcome = exhaustive(gen_cyclic_kdiagonal(n, k), options);
  if (!outcome.found)
    throw Error(ErrorCode::base_case_search_failed,
                "restricted search found no solution at size " + std::to_string(n) +
                    " with " + std::to_string(k) + " diagonals");
  std::vector<int> positions = outcome.found->minus_columns();
  std::lock_guard<std::mutex> lock(base_cache_mutex);
  return base_cache.emplace(std::make_pair(n, k), std::move(positions)).first->second;
}

}  // namespace

SolveReport solve_totally_filled(int n, int m) {
  if (n < 1 || m < 1)
    throw Error(ErrorCode::invalid_family_parameters, "dimensions must be at least 1");
  if (n % 2 == 0 && m % 2 == 0)
    return none_report(NoneReason::parity_violation, "totally_filled",
                       "both dimensions are even");
  const int l = (m % 2 == 1) ? (m - 1) / 2 : (m - 2) / 2;
  std::vector<int> minus(l);
  std::iota(minus.begin(), minus.end(), m - l + 1);
  return checked_solution(gen_totally_filled(n, m),
                          Orientation::with_minus_columns(n, m, minus), "totally_filled",
                          std::to_string(l) + " trailing minus columns");
}

SolveReport solve_cyclic_kdiagonal(int n, int k) {
  if (k < 1 || n < k)
    throw Error(ErrorCode::invalid_family_parameters, "need n >= k >= 1");
  if (n == k) return solve_totally_filled(n, n);
  if (n % 2 == 0 || k % 2 == 0 || k == 1)
    return none_report(NoneReason::family_necessary_condition, "cyclic_kdiagonal",
                       "n and k must both be odd, with k != 1");
  const Board board = gen_cyclic_kdiagonal(n, k);
  const int d = std::gcd(n, k - 1);
  if (d == 1) {
    const int minus[] = {1};
    return checked_solution(board, Orientation::with_minus_columns(n, n, minus),
                            "single_minus", "gcd(n, k-1) = 1");
  }
  if (n >= (k - 2) * (k - 1)) {
    // d-1 leading positions, then positions spaced k-1 apart in the class
    // of d; together they cover every class mod d and hop through all of E.
    std::vector<int> minus;
    for (int i = 1; i <= d - 1; ++i) minus.push_back(i);
    for (int i = d; i <= k; ++i) minus.push_back(d + (k - 1) * (i - d));
    return checked_solution(board, Orientation::with_minus_columns(n, n, minus),
                            "spread_minus_set", "d = " + std::to_string(d));
  }
  const int base = (k + 2) + ((n - (k + 2)) % (k - 1));
  const int lambda = (n - base) / (k - 1);
  const std::vector<int> base_minus = base_window_solution(base, k);
  Orientation lifted = extend_cyclic_solution(base_minus, base, k, lambda);
  return checked_solution(board, std::move(lifted), "base_extend",
                          "base size " + std::to_string(base) + ", lifted " +
                              std::to_string(lambda) + " steps of k-1");
}

Orientation extend_cyclic_solution(std::span<const int> minus_positions, int n, int k,
                                   int lambda) {
  if (n < 1 || k < 2)
    throw Error(ErrorCode::invalid_family_parameters, "need n >= 1 and k >= 2");
  if (lambda < 0)
    throw Error(ErrorCode::invalid_family_parameters, "lambda must be non-negative");
  const std::vector<int> positions =
      checked_sorted_positions(minus_positions, n, "minus positions");
  const int extended = n + lambda * (k - 1);
  return Orientation::with_minus_columns(extended, extended, positions);
}

SolveReport solve_width_kdiagonal(int n, int k, int s, const DiagonalSet& diagonals) {
  if (k < 3 || k % 2 == 0)
    throw Error(ErrorCode::invalid_family_parameters, "width solver needs odd k >= 3");
  if (n <= k || s < 1)
    throw Error(ErrorCode::invalid_family_parameters, "need n > k and s >= 1");
  require_standard_diagonals(diagonals, n, k);
  const auto& idx = diagonals.indices;
  if (std::binary_search(idx.begin(), idx.end(), n))
    throw Error(ErrorCode::invalid_family_parameters, "standard form needs diagonal n empty");
  require_uniform_width(diagonals, s);
  const Board board = gen_kdiagonal(diagonals);
  const int minus[] = {1};
  if (std::gcd(n, s + 1) == 1)
    return checked_solution(board, Orientation::with_minus_columns(n, n, minus),
                            "width_single_minus", "gcd(n, s+1) = 1");
  if (strip_widths(diagonals).size() == 2 && 2 * s == n - k && std::gcd(n, k - 2) == 1)
    return checked_solution(board, Orientation::with_minus_columns(n, n, minus),
                            "two_strip_single_minus", "gcd(n, k-2) = 1");
  return unknown_report("width_kdiagonal",
                        "gcd(n, s+1) = " + std::to_string(std::gcd(n, s + 1)) +
                            " is not covered by a construction");
}

SolveReport solve_almost_kdiagonal(int n, int k, int s, int ell, const DiagonalSet& diagonals) {
  if (k < 1 || n <= k)
    throw Error(ErrorCode::invalid_family_parameters, "need n > k >= 1");
  require_standard_diagonals(diagonals, n, k);
  const auto& idx = diagonals.indices;
  if (std::binary_search(idx.begin(), idx.end(), n))
    throw Error(ErrorCode::invalid_family_parameters, "standard form needs diagonal n empty");
  require_uniform_width(diagonals, s);
  if (ell < 2 || ell > s + 1)
    throw Error(ErrorCode::invalid_family_parameters,
                "standard form needs 2 <= ell <= s+1");
  const bool cyclic = idx.back() == k;  // sorted 1..k exactly
  // The extra cell sits in the strip that ends at diagonal n.
  std::vector<Cell> cells = gen_kdiagonal(diagonals).cells();
  cells.push_back({1, ell});
  const Board board(n, n, cells);

  if ((k % 2 == 1 && n % 2 == 1) || (k == 1 && !(n == 2)))
    return none_report(NoneReason::family_necessary_condition, "almost_kdiagonal",
                       "kn must be even with k != 1");
  if (k == 2 && cyclic && n >= 3) {
    const int minus[] = {ell};
    return checked_solution(board, Orientation::with_minus_columns(n, n, minus), "almost_k2",
                            "single minus at the extra column");
  }
  if (k >= 3 && k % 2 == 1 && std::gcd(n, s + 1) == 2 && ell % 2 == 0) {
    // Sound when the filled diagonals are consecutive. On split diagonal
    // sets the step inside a diagonal that follows a strip is s+1, so with
    // gcd(n, s+1) = 2 its even-column cells never meet the minus column and
    // close early (diagonals {1,3,5} plus (1,2) at n=6 leave two 3-cycles).
    const int minus[] = {1};
    Orientation candidate = Orientation::with_minus_columns(n, n, minus);
    if (cyclic || is_solution(board, candidate))
      return checked_solution(board, std::move(candidate), "almost_even_extra_single_minus",
                              "gcd(n, s+1) = 2, ell even");
  }
  if (cyclic && k % 4 == 3 && std::gcd(n, k - 1) == 2 && ell % 2 == 1) {
    const int minus[] = {2, ell};
    return checked_solution(board, Orientation::with_minus_columns(n, n, minus),
                            "almost_two_minus", "gcd(n, k-1) = 2, ell odd");
  }
  if (cyclic && k >= 4 && k % 2 == 0 && std::gcd(n, k - 1) == 1) {
    const int minus[] = {ell};
    return checked_solution(board, Orientation::with_minus_columns(n, n, minus),
                            "almost_keven_single_minus", "gcd(n, k-1) = 1");
  }
  return unknown_report("almost_kdiagonal", "no construction covers these parameters");
}

std::vector<AlmostCondition> almost_necessary_keven(int n, int k, int ell,
                                                    std::span<const int> minus_positions) {
  if (k < 4 || k % 2 == 1 || n <= k)
    throw Error(ErrorCode::invalid_family_parameters, "needs even k >= 4 and n > k");
  if (ell < 2 || ell > n - k + 1)
    throw Error(ErrorCode::invalid_family_parameters, "needs 2 <= ell <= n-k+1");
  const std::vector<int> positions =
      checked_sorted_positions(minus_positions, n, "minus positions");
  std::vector<AlmostCondition> violated;
  if (!std::binary_search(positions.begin(), positions.end(), ell))
    violated.push_back(AlmostCondition::minus_at_extra_column);
  if (std::gcd(static_cast<int>(positions.size()), k / 2) != 1)
    violated.push_back(AlmostCondition::count_coprime_half_k);
  const int d = std::gcd(n, k - 1);
  bool coverage_ok;
  if (ell % d == 1 % d) {
    coverage_ok = covers_all_classes(d, positions);
  } else {
    // Every class must be hit except possibly the class of 1.
    std::vector<std::uint8_t> seen(d, 0);
    for (int v : positions) seen[v % d] = 1;
    coverage_ok = true;
    for (int h = 0; h < d; ++h)
      if (!seen[h] && h != 1 % d) coverage_ok = false;
  }
  if (!coverage_ok) violated.push_back(AlmostCondition::class_coverage);
  return violated;
}

namespace {

BlockEmbedding identity_embedding(int rows, int cols, int row_offset, int col_offset) {
  BlockEmbedding embedding;
  embedding.rows.resize(rows);
  embedding.cols.resize(cols);
  std::iota(embedding.rows.begin(), embedding.rows.end(), row_offset + 1);
  std::iota(embedding.cols.begin(), embedding.cols.end(), col_offset + 1);
  return embedding;
}

void require_partition(const std::vector<int>& a, const std::vector<int>& b, int total,
                       const char* axis) {
  std::vector<std::uint8_t> used(total + 1, 0);
  for (const auto* part : {&a, &b}) {
    for (int v : *part) {
      if (v < 1 || v > total || used[v])
        throw Error(ErrorCode::embedding_collision,
                    std::string("block ") + axis + " embeddings must partition 1.." +
                        std::to_string(total));
      used[v] = 1;
    }
  }
}

}  // namespace

ComposeResult compose_block(const Board& first, const Orientation& first_solution,
                            const Board& second, const Orientation& second_solution,
                            std::optional<Cell> extra,
                            std::optional<BlockEmbedding> first_embedding,
                            std::optional<BlockEmbedding> second_embedding) {
  if (first_solution.rows() != first.rows() || first_solution.cols() != first.cols() ||
      second_solution.rows() != second.rows() || second_solution.cols() != second.cols())
    throw Error(ErrorCode::dimension_mismatch, "block orientations must match their boards");
  const int total_rows = first.rows() + second.rows();
  const int total_cols = first.cols() + second.cols();
  const BlockEmbedding e1 =
      first_embedding.value_or(identity_embedding(first.rows(), first.cols(), 0, 0));
  const BlockEmbedding e2 = second_embedding.value_or(
      identity_embedding(second.rows(), second.cols(), first.rows(), first.cols()));
  if (static_cast<int>(e1.rows.size()) != first.rows() ||
      static_cast<int>(e1.cols.size()) != first.cols() ||
      static_cast<int>(e2.rows.size()) != second.rows() ||
      static_cast<int>(e2.cols.size()) != second.cols())
    throw Error(ErrorCode::embedding_collision, "embedding sizes must match the blocks");
  require_partition(e1.rows, e2.rows, total_rows, "row");
  require_partition(e1.cols, e2.cols, total_cols, "column");

  const Cell extra_cell =
      extra.value_or(Cell{*std::min_element(e2.rows.begin(), e2.rows.end()),
                          *std::min_element(e1.cols.begin(), e1.cols.end())});
  auto contains = [](const std::vector<int>& values, int v) {
    return std::find(values.begin(), values.end(), v) != values.end();
  };
  const bool upper_right =
      contains(e1.rows, extra_cell.row) && contains(e2.cols, extra_cell.col);
  const bool lower_left =
      contains(e2.rows, extra_cell.row) && contains(e1.cols, extra_cell.col);
  if (!upper_right && !lower_left)
    throw Error(ErrorCode::extra_cell_inside_block,
                "the extra cell must pair one block's rows with the other block's columns");

  std::vector<Cell> cells;
  cells.reserve(first.filled_count() + second.filled_count() + 1);
  for (Cell cell : first.cells()) cells.push_back({e1.rows[cell.row - 1], e1.cols[cell.col - 1]});
  for (Cell cell : second.cells()) cells.push_back({e2.rows[cell.row - 1], e2.cols[cell.col - 1]});
  cells.push_back(extra_cell);
  Board board(total_rows, total_cols, cells);

  std::vector<std::int8_t> r(total_rows, 1), c(total_cols, 1);
  for (int i = 1; i <= first.rows(); ++i)
    r[e1.rows[i - 1] - 1] = static_cast<std::int8_t>(first_solution.r(i));
  for (int i = 1; i <= second.rows(); ++i)
    r[e2.rows[i - 1] - 1] = static_cast<std::int8_t>(second_solution.r(i));
  for (int j = 1; j <= first.cols(); ++j)
    c[e1.cols[j - 1] - 1] = static_cast<std::int8_t>(first_solution.c(j));
  for (int j = 1; j <= second.cols(); ++j)
    c[e2.cols[j - 1] - 1] = static_cast<std::int8_t>(second_solution.c(j));
  Orientation orientation(std::move(r), std::move(c));

  const bool verified = is_solution(board, orientation);
  return {std::move(board), std::move(orientation), extra_cell, verified};
}

SolveReport solve(const Board& board, const SolveOptions& options) {
  validate(board);
  if (!parity_ok(board))
    return none_report(NoneReason::parity_violation, "necessary_conditions",
                       "filled-cell count has the wrong parity for n+m-1");
  ClosureCheck closure = minimal_closed(board);
  if (!closure.minimal) {
    SolveReport report = none_report(NoneReason::closed_subarray, "necessary_conditions",
                                     "a proper closed subarray blocks every tour");
    report.witness = std::move(closure.witness);
    return report;
  }

  const FamilyProfile profile = classify(board);
  const auto [dr, dc] = profile.standard_form_shift;
  std::optional<SolveReport> family;
  switch (profile.kind) {
    case Family::totally_filled:
      family = solve_totally_filled(board.rows(), board.cols());
      break;
    case Family::cyclically_k_diagonal:
      family = solve_cyclic_kdiagonal(board.rows(), *profile.k);
      break;
    case Family::width_k_diagonal:
      family = solve_width_kdiagonal(board.rows(), *profile.k, *profile.width,
                                     {board.rows(), profile.diagonals});
      break;
    case Family::almost_k_diagonal:
      if (profile.width && profile.extra_col)
        family = solve_almost_kdiagonal(board.rows(), *profile.k, *profile.width,
                                        *profile.extra_col, {board.rows(), profile.diagonals});
      break;
    case Family::k_diagonal:
    case Family::other:
      break;
  }
  if (family && family->verdict == Verdict::solution) {
    // The family solver worked on the standard form; carry its orientation
    // back through the inverse toroidal shift and re-verify on the input.
    Orientation carried = shift(*family->orientation, -dr, -dc);
    if (!is_solution(board, carried))
      throw std::logic_error("standard-form solution failed on the original board");
    family->orientation = std::move(carried);
    family->tour_length = board.filled_count();
    return *family;
  }
  if (family && family->verdict == Verdict::proven_none) return *family;

  // No family construction applies: fall through to the exhaustive oracle.
  SearchOptions search_options;
  search_options.budget = options.search_budget;
  search_options.threads = options.threads;
  const int bits = board.rows() + board.cols();
  if (!options.search_budget && bits > search_options.ceiling_bits)
    return unknown_report("search", "candidate space 2^" + std::to_string(bits) +
                                        " exceeds the search ceiling; pass a budget");
  const SearchOutcome outcome = exhaustive(board, search_options);
  if (outcome.found) {
    SolveReport report = checked_solution(board, *outcome.found, "search");
    report.tested = outcome.tested;
    return report;
  }
  if (outcome.exhausted) {
    SolveReport report =
        none_report(NoneReason::search_exhausted, "search",
                    "all " + std::to_string(outcome.tested) + " orientations fail");
    report.tested = outcome.tested;
    return report;
  }
  SolveReport report = unknown_report("search", "budget exhausted without a verdict");
  report.tested = outcome.tested;
  return report;
}

}  // namespace torustour
