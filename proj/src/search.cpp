#include "torustour/search.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "torustour/tour.hpp"

namespace torustour {

namespace {

constexpr std::uint64_t kNoHit = ~std::uint64_t{0};

// Writes the candidate's signs. Bit 0 of the most significant enumerated
// position flips last: candidate 0 is all +1 and the row vector (when it
// varies at all) changes slowest.
void decode(std::uint64_t index, bool restricted, std::vector<std::int8_t>& r,
            std::vector<std::int8_t>& c) {
  const int n = static_cast<int>(r.size());
  const int m = static_cast<int>(c.size());
  const int bits = restricted ? m : n + m;
  if (!restricted)
    for (int i = 0; i < n; ++i)
      r[i] = ((index >> (bits - 1 - i)) & 1) ? -1 : 1;
  for (int j = 0; j < m; ++j)
    c[j] = ((index >> (m - 1 - j)) & 1) ? -1 : 1;
}

void update_min(std::atomic<std::uint64_t>& best, std::uint64_t candidate) {
  std::uint64_t seen = best.load(std::memory_order_relaxed);
  while (candidate < seen &&
         !best.compare_exchange_weak(seen, candidate, std::memory_order_relaxed)) {
  }
}

}  // namespace

SearchOutcome exhaustive(const Board& board, const SearchOptions& options) {
  validate(board);
  if (options.budget && *options.budget == 0)
    throw Error(ErrorCode::budget_zero, "search budget must be positive");
  const int n = board.rows();
  const int m = board.cols();
  const int bits = options.restrict_rows_to_plus_one ? m : n + m;
  if (!options.budget && bits > options.ceiling_bits)
    throw Error(ErrorCode::search_space_too_large,
                "candidate space 2^" + std::to_string(bits) + " exceeds the 2^" +
                    std::to_string(options.ceiling_bits) +
                    " ceiling; restrict rows or pass a budget");
  const bool whole_space_fits = bits < 64;
  if (!whole_space_fits && !options.budget)
    throw Error(ErrorCode::search_space_too_large,
                "candidate space 2^" + std::to_string(bits) + " needs a budget");
  const std::uint64_t total = whole_space_fits ? (std::uint64_t{1} << bits) : kNoHit;
  const std::uint64_t limit = options.budget ? std::min(*options.budget, total) : total;

  const Cell start = board.first_cell();
  std::atomic<std::uint64_t> best{kNoHit};

  auto sweep = [&](std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::int8_t> r(n, 1), c(m, 1);
    for (std::uint64_t index = lo; index < hi; ++index) {
      if (index >= best.load(std::memory_order_relaxed)) break;
      decode(index, options.restrict_rows_to_plus_one, r, c);
      if (detail::tour_covers(board, r, c, start)) {
        update_min(best, index);
        break;
      }
    }
  };

  const unsigned threads = std::max(1u, options.threads);
  if (threads == 1 || limit < 2 * threads) {
    sweep(0, limit);
  } else {
    const std::uint64_t chunk = (limit + threads - 1) / threads;
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) {
      const std::uint64_t lo = w * chunk;
      const std::uint64_t hi = std::min(limit, lo + chunk);
      if (lo >= hi) break;
      pool.emplace_back(sweep, lo, hi);
    }
    for (auto& t : pool) t.join();
  }

  SearchOutcome outcome;
  outcome.restricted = options.restrict_rows_to_plus_one;
  const std::uint64_t hit = best.load(std::memory_order_relaxed);
  if (hit != kNoHit) {
    std::vector<std::int8_t> r(n, 1), c(m, 1);
    decode(hit, options.restrict_rows_to_plus_one, r, c);
    outcome.found = Orientation(std::move(r), std::move(c));
    outcome.tested = hit + 1;
  } else {
    outcome.tested = limit;
    outcome.exhausted = whole_space_fits && limit == total;
  }
  return outcome;
}

std::vector<CensusRow> census(const std::vector<CensusCase>& cases,
                              const SearchOptions& options) {
  std::vector<CensusRow> rows;
  rows.reserve(cases.size());
  for (const CensusCase& item : cases) {
    SearchOutcome outcome = exhaustive(item.board, options);
    rows.push_back({item.params, outcome.found.has_value(), std::move(outcome.found),
                    outcome.tested});
  }
  return rows;
}

}  // namespace torustour
