#pragma once

/**
 * @file sequence.hpp
 * @brief Stern's diatomic sequence s(n) and rows of the diatomic array.
 *
 * s(0) = 0, s(1) = 1, s(2n) = s(n), s(2n+1) = s(n) + s(n+1).  Row r of the
 * array is s(2^r), s(2^r + 1), ..., s(2^{r+1}); each row copies the previous
 * one and inserts the sum of every pair of neighbours.
 */

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "diatomic/bigint.hpp"
#include "diatomic/errors.hpp"

namespace diatomic {

/// Default cap on the number of row entries an operation may materialize.
inline constexpr std::size_t kDefaultEntryCap = std::size_t{1} << 28;

/**
 * s(n) for n >= 0, iteratively in O(log n) additions.
 *
 * Walks the bits of n from the most significant end carrying the pair
 * (s(p), s(p+1)) for the prefix p read so far: a 1-bit maps (a,b) to (a+b,b),
 * a 0-bit maps (a,b) to (a,a+b).
 */
inline BigInt stern(const BigInt& n) {
  if (n < 0) throw std::domain_error("stern: index must be nonnegative");
  if (n == 0) return 0;
  BigInt a = 0, b = 1;
  for (std::int64_t bit = static_cast<std::int64_t>(msb(n)); bit >= 0; --bit) {
    if (bit_test(n, static_cast<unsigned>(bit))) {
      a += b;
    } else {
      b += a;
    }
  }
  return a;
}

/**
 * One fully materialized row of the diatomic array.
 *
 * Entries are stored as 64-bit words: a row is bounded by F_{r+2}, and any
 * row small enough to satisfy an entry cap (2^r + 1 entries) has r far below
 * the first index where F_{r+2} outgrows a word (r = 85).  The accessors
 * still hand out BigInt.
 */
class SternRow {
 public:
  SternRow(std::uint32_t r, std::vector<std::uint64_t> values)
      : r_(r), values_(std::move(values)) {}

  std::uint32_t r() const { return r_; }
  std::size_t size() const { return values_.size(); }  // 2^r + 1

  /// values()[k] = s(2^r + k).
  const std::vector<std::uint64_t>& words() const { return values_; }
  BigInt at(std::size_t k) const { return BigInt(values_.at(k)); }

 private:
  std::uint32_t r_;
  std::vector<std::uint64_t> values_;
};

/**
 * Builds row r by iterated copy-and-insert-sums from row 0 = (1, 1).
 * Throws resource_limit_error if 2^r + 1 exceeds max_entries.
 */
inline SternRow stern_row(std::uint32_t r,
                          std::size_t max_entries = kDefaultEntryCap) {
  if (r >= 63 || ((std::uint64_t{1} << r) + 1) > max_entries) {
    throw resource_limit_error("stern_row: row " + std::to_string(r) +
                               " needs 2^" + std::to_string(r) +
                               "+1 entries, cap is " +
                               std::to_string(max_entries));
  }
  std::vector<std::uint64_t> v{1, 1};
  v.reserve((std::size_t{1} << r) + 1);
  for (std::uint32_t step = 1; step <= r; ++step) {
    const std::size_t old_len = v.size();
    v.resize(2 * old_len - 1);
    // Fill from the top so positions 2k, 2k+1 never clobber an unread old
    // entry (the writes for index k land at positions >= k+1, except the
    // final k = 0 pair which has no readers left).
    v[2 * old_len - 2] = v[old_len - 1];
    for (std::size_t k = old_len - 1; k-- > 0;) {
      v[2 * k + 1] = v[k] + v[k + 1];
      v[2 * k] = v[k];
    }
  }
  return SternRow(r, std::move(v));
}

// One of the m largest distinct values of a row, with every position
// attaining it.
struct RankedValue {
  std::uint64_t rank = 0;  // m, 1-based, descending by value
  BigInt value;
  std::vector<std::uint64_t> positions;  // n in [2^r, 2^{r+1}], ascending
};

/**
 * The min(m_max, #distinct) largest distinct values of a row, in descending
 * order.  Single pass with a bounded ordered buffer of distinct values; a
 * value evicted from the buffer can never re-enter the final answer, so the
 * position lists of the survivors are complete.
 */
inline std::vector<RankedValue> brute_force_top(const SternRow& row,
                                                std::uint64_t m_max) {
  if (m_max == 0) {
    throw std::invalid_argument("brute_force_top: m_max must be positive");
  }
  std::map<std::uint64_t, std::vector<std::uint64_t>> best;
  const auto& w = row.words();
  for (std::size_t k = 0; k < w.size(); ++k) {
    auto it = best.find(w[k]);
    if (it != best.end()) {
      it->second.push_back(k);
      continue;
    }
    if (best.size() == m_max && w[k] < best.begin()->first) continue;
    best.emplace(w[k], std::vector<std::uint64_t>{k});
    if (best.size() > m_max) best.erase(best.begin());
  }
  const std::uint64_t base = std::uint64_t{1} << row.r();
  std::vector<RankedValue> out;
  out.reserve(best.size());
  std::uint64_t rank = 1;
  for (auto it = best.rbegin(); it != best.rend(); ++it, ++rank) {
    RankedValue rv;
    rv.rank = rank;
    rv.value = BigInt(it->first);
    rv.positions = std::move(it->second);
    for (auto& p : rv.positions) p += base;
    out.push_back(std::move(rv));
  }
  return out;
}

inline std::vector<RankedValue> brute_force_top(
    std::uint32_t r, std::uint64_t m_max,
    std::size_t max_entries = kDefaultEntryCap) {
  return brute_force_top(stern_row(r, max_entries), m_max);
}

}  // namespace diatomic
