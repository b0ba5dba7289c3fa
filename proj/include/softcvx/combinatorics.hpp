#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace softcvx {

/// Visits every subset of {0..n-1} with size in [lo, hi], ordered by size
/// and then lexicographically. `fn(std::span<const std::size_t>)` returns
/// false to stop; the function returns false if stopped early.
template <class Fn>
bool for_each_combination(std::size_t n, std::size_t lo, std::size_t hi, Fn&& fn) {
  if (hi > n) hi = n;
  std::vector<std::size_t> idx;
  for (std::size_t k = lo; k <= hi; ++k) {
    idx.resize(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      if (!fn(std::span<const std::size_t>(idx))) return false;
      // advance to the next k-combination
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return true;
}

/// Number of subsets of an n-set with size <= cap, saturating at `limit`.
std::uint64_t count_combinations(std::uint64_t n, std::size_t cap, std::uint64_t limit);

/// Literal upward-directedness of a list of codes: every pair has an entry
/// containing both.
bool codes_upward_directed(std::span<const std::uint64_t> codes) noexcept;
bool codes_downward_directed(std::span<const std::uint64_t> codes) noexcept;

/// All upward directed subfamilies of the soft-set lattice with `bits`
/// membership bits, with sizes 0..cap, found by filtering every subfamily
/// against the pairwise definition. Flattened: family i spans
/// codes[offsets[i] .. offsets[i+1]). Cached per (bits, cap).
struct DirectedFamilies {
  std::vector<std::uint64_t> codes;
  std::vector<std::size_t> offsets;

  std::size_t size() const noexcept { return offsets.empty() ? 0 : offsets.size() - 1; }
  std::span<const std::uint64_t> operator[](std::size_t i) const noexcept {
    return {codes.data() + offsets[i], offsets[i + 1] - offsets[i]};
  }
};

/// Throws BudgetExceeded when more than `kMaxLatticeScan` candidate
/// subfamilies would have to be inspected.
const DirectedFamilies& lattice_directed_families(std::size_t bits, std::size_t cap);

inline constexpr std::uint64_t kMaxLatticeScan = 20'000'000;

}  // namespace softcvx
