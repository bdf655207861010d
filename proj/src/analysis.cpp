#include "torustour/analysis.hpp"

#include <algorithm>
#include <numeric>

#include "torustour/tour.hpp"

namespace torustour {

bool parity_ok(const Board& board) {
  const int target = board.rows() + board.cols() - 1;
  return static_cast<int>(board.filled_count() % 2) == target % 2;
}

ClosureCheck minimal_closed(const Board& board) {
  const int n = board.rows();
  const int m = board.cols();
  // Bipartite nodes: rows are 0..n-1, columns are n..n+m-1.
  std::vector<std::uint8_t> reached(static_cast<std::size_t>(n) + m, 0);
  std::vector<int> stack{n};  // start from column 1
  reached[n] = 1;
  while (!stack.empty()) {
    const int node = stack.back();
    stack.pop_back();
    if (node < n) {
      for (int col : board.row_columns(node + 1)) {
        if (!reached[n + col - 1]) {
          reached[n + col - 1] = 1;
          stack.push_back(n + col - 1);
        }
      }
    } else {
      for (int row : board.column_rows(node - n + 1)) {
        if (!reached[row - 1]) {
          reached[row - 1] = 1;
          stack.push_back(row - 1);
        }
      }
    }
  }
  if (std::all_of(reached.begin(), reached.end(), [](std::uint8_t v) { return v != 0; }))
    return {true, std::nullopt};
  ClosureWitness witness;
  for (int i = 1; i <= n; ++i)
    if (reached[i - 1]) witness.rows.push_back(i);
  for (int j = 1; j <= m; ++j)
    if (reached[n + j - 1]) witness.cols.push_back(j);
  witness.proper = true;
  return {false, std::move(witness)};
}

PermutationSigns permutation_signs(const Board& board, const Orientation& orientation) {
  if (orientation.rows() != board.rows() || orientation.cols() != board.cols())
    throw Error(ErrorCode::dimension_mismatch, "orientation does not match board dimensions");
  // Each row sweep is a single cycle over that row's filled cells, whatever
  // the direction, so its parity is the cell count minus one.
  std::size_t row_parity = 0;
  for (int i = 1; i <= board.rows(); ++i) row_parity += board.row_columns(i).size() - 1;
  std::size_t col_parity = 0;
  for (int j = 1; j <= board.cols(); ++j) col_parity += board.column_rows(j).size() - 1;
  std::size_t composite_parity = 0;
  for (const Tour& part : cycle_structure(board, orientation))
    composite_parity += part.cells.size() - 1;
  auto sign = [](std::size_t parity) { return parity % 2 == 0 ? 1 : -1; };
  return {sign(row_parity), sign(col_parity), sign(composite_parity)};
}

const char* family_name(Family family) {
  switch (family) {
    case Family::totally_filled: return "totally_filled";
    case Family::k_diagonal: return "k_diagonal";
    case Family::cyclically_k_diagonal: return "cyclically_k_diagonal";
    case Family::width_k_diagonal: return "width_k_diagonal";
    case Family::almost_k_diagonal: return "almost_k_diagonal";
    case Family::other: return "other";
  }
  return "other";
}

namespace {

int diagonal_of(Cell cell, int n) { return wrap_index(cell.row - cell.col + 1, n); }

// Widths of the maximal runs of empty diagonals between filled ones, in
// cyclic order starting after the first filled index.
std::vector<int> strip_widths_of(const std::vector<int>& filled_sorted, int n) {
  std::vector<int> widths;
  const std::size_t k = filled_sorted.size();
  if (k == 0 || static_cast<int>(k) == n) return widths;
  for (std::size_t j = 0; j < k; ++j) {
    const int current = filled_sorted[j];
    const int next = (j + 1 < k) ? filled_sorted[j + 1] : filled_sorted[0] + n;
    const int gap = next - current - 1;
    if (gap > 0) widths.push_back(gap);
  }
  return widths;
}

bool in_sorted(const std::vector<int>& values, int value) {
  return std::binary_search(values.begin(), values.end(), value);
}

// Smallest non-negative row shift carrying the diagonal set into standard
// form: D_1 filled and D_n empty.
int standard_row_shift(const std::vector<int>& filled_sorted, int n) {
  for (int dr = 0; dr < n; ++dr) {
    const bool first_filled = in_sorted(filled_sorted, wrap_index(1 - dr, n));
    const bool last_empty = !in_sorted(filled_sorted, wrap_index(n - dr, n));
    if (first_filled && last_empty) return dr;
  }
  return 0;  // unreachable for k < n
}

std::vector<int> shifted_diagonals(const std::vector<int>& filled_sorted, int n, int delta) {
  std::vector<int> out;
  out.reserve(filled_sorted.size());
  for (int d : filled_sorted) out.push_back(wrap_index(d + delta, n));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

FamilyProfile classify(const Board& board) {
  const int n = board.rows();
  const int m = board.cols();
  FamilyProfile profile;
  if (board.filled_count() == static_cast<std::size_t>(n) * m) {
    profile.kind = Family::totally_filled;
    if (n == m) profile.k = n;
    return profile;
  }
  if (n != m) return profile;  // other

  std::vector<int> per_diagonal(n, 0);
  for (Cell cell : board.cells()) ++per_diagonal[diagonal_of(cell, n) - 1];
  std::vector<int> full;
  std::size_t extras = 0;
  for (int d = 1; d <= n; ++d) {
    if (per_diagonal[d - 1] == n)
      full.push_back(d);
    else
      extras += per_diagonal[d - 1];
  }
  if (full.empty()) return profile;

  const int k = static_cast<int>(full.size());
  if (extras == 0) {
    profile.k = k;
    // Count cyclic runs of consecutive filled diagonals.
    int runs = 0;
    int run_start = 0;
    for (int d : full) {
      if (!in_sorted(full, wrap_index(d - 1, n))) {
        ++runs;
        run_start = d;
      }
    }
    if (runs == 1) {
      profile.kind = Family::cyclically_k_diagonal;
      profile.width = n - k;
      profile.standard_form_shift = {((1 - run_start) % n + n) % n, 0};
      profile.diagonals.resize(k);
      std::iota(profile.diagonals.begin(), profile.diagonals.end(), 1);
      return profile;
    }
    const auto widths = strip_widths_of(full, n);
    const bool uniform =
        std::all_of(widths.begin(), widths.end(), [&](int w) { return w == widths.front(); });
    profile.kind = uniform ? Family::width_k_diagonal : Family::k_diagonal;
    if (uniform) profile.width = widths.front();
    const int dr = standard_row_shift(full, n);
    profile.standard_form_shift = {dr, 0};
    profile.diagonals = shifted_diagonals(full, n, dr);
    return profile;
  }

  if (extras == 1) {
    // Locate the unique extra cell.
    Cell extra{};
    for (Cell cell : board.cells())
      if (!in_sorted(full, diagonal_of(cell, n))) extra = cell;
    const int j0 = diagonal_of(extra, n);
    // Filled diagonal preceding the extra's strip and that strip's width.
    int below = j0;
    do below = wrap_index(below - 1, n);
    while (!in_sorted(full, below));
    int above = j0;
    do above = wrap_index(above + 1, n);
    while (!in_sorted(full, above));
    const int strip = (above - below - 1 + 2 * n) % n;

    profile.kind = Family::almost_k_diagonal;
    profile.k = k;
    const auto widths = strip_widths_of(full, n);
    if (std::all_of(widths.begin(), widths.end(),
                    [&](int w) { return w == widths.front(); }))
      profile.width = widths.front();
    const int dr = ((1 - extra.row) % n + n) % n;
    const int delta = ((-(below + strip)) % n + n) % n;  // diagonal displacement
    const int dc = ((dr - delta) % n + n) % n;
    profile.standard_form_shift = {dr, dc};
    profile.extra_col = wrap_index(extra.col + dc, n);
    profile.diagonals = shifted_diagonals(full, n, delta);
    return profile;
  }

  return profile;
}

int ListPermutation::apply(int element) const {
  const auto it = std::lower_bound(domain.begin(), domain.end(), element);
  if (it == domain.end() || *it != element)
    throw Error(ErrorCode::positions_out_of_range, "element is not in the permutation domain");
  return image[static_cast<std::size_t>(it - domain.begin())];
}

std::vector<std::vector<int>> ListPermutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<std::uint8_t> used(domain.size(), 0);
  for (std::size_t i = 0; i < domain.size(); ++i) {
    if (used[i]) continue;
    std::vector<int> cycle;
    int element = domain[i];
    while (true) {
      const auto pos = static_cast<std::size_t>(
          std::lower_bound(domain.begin(), domain.end(), element) - domain.begin());
      if (used[pos]) break;
      used[pos] = 1;
      cycle.push_back(element);
      element = image[pos];
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

bool covers_all_classes(int d, std::span<const int> values) {
  if (d <= 1) return true;
  std::vector<std::uint8_t> seen(d, 0);
  for (int v : values) seen[((v % d) + d) % d] = 1;
  return std::all_of(seen.begin(), seen.end(), [](std::uint8_t v) { return v != 0; });
}

MinusPermutations minus_permutations(int n, int k, std::span<const int> minus_positions) {
  if (k < 3 || k % 2 == 0 || n <= k)
    throw Error(ErrorCode::invalid_family_parameters,
                "minus permutations need odd k >= 3 and n > k");
  if (minus_positions.empty())
    throw Error(ErrorCode::invalid_family_parameters, "minus positions must be non-empty");
  std::vector<int> e(minus_positions.begin(), minus_positions.end());
  if (!std::is_sorted(e.begin(), e.end()) ||
      std::adjacent_find(e.begin(), e.end()) != e.end() || e.front() < 1 || e.back() > n)
    throw Error(ErrorCode::positions_out_of_range,
                "minus positions must be strictly increasing within 1..n");

  const int t = static_cast<int>(e.size());
  const int step = k - 1;
  std::vector<std::uint8_t> marked(n + 1, 0);
  for (int v : e) marked[v] = 1;

  MinusPermutations maps;
  maps.decrement_hop.domain = e;
  for (int v : e) {
    int x = v;
    do x = wrap_index(x - step, n);
    while (!marked[x]);
    maps.decrement_hop.image.push_back(x);
  }
  maps.rank_shift.domain = e;
  for (int i = 0; i < t; ++i) maps.rank_shift.image.push_back(e[(i + step) % t]);
  maps.combined.domain = e;
  for (int v : e) maps.combined.image.push_back(maps.rank_shift.apply(maps.decrement_hop.apply(v)));
  return maps;
}

}  // namespace torustour
