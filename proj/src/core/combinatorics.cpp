#include "softcvx/combinatorics.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "softcvx/error.hpp"

namespace softcvx {

std::uint64_t count_combinations(std::uint64_t n, std::size_t cap, std::uint64_t limit) {
  std::uint64_t total = 0;
  std::uint64_t term = 1;  // C(n, k)
  for (std::size_t k = 0; k <= cap && k <= n; ++k) {
    if (k > 0) {
      // term * (n-k+1) / k without overflow past the limit
      const std::uint64_t num = n - k + 1;
      if (term > limit / num + 1) return limit;
      term = term * num / k;
    }
    total += term;
    if (total >= limit) return limit;
  }
  return total;
}

bool codes_upward_directed(std::span<const std::uint64_t> codes) noexcept {
  for (std::size_t i = 0; i < codes.size(); ++i) {
    for (std::size_t j = i + 1; j < codes.size(); ++j) {
      const std::uint64_t u = codes[i] | codes[j];
      bool bounded = false;
      for (auto c : codes) {
        if ((u & ~c) == 0) {
          bounded = true;
          break;
        }
      }
      if (!bounded) return false;
    }
  }
  return true;
}

bool codes_downward_directed(std::span<const std::uint64_t> codes) noexcept {
  for (std::size_t i = 0; i < codes.size(); ++i) {
    for (std::size_t j = i + 1; j < codes.size(); ++j) {
      const std::uint64_t m = codes[i] & codes[j];
      bool bounded = false;
      for (auto c : codes) {
        if ((c & ~m) == 0) {
          bounded = true;
          break;
        }
      }
      if (!bounded) return false;
    }
  }
  return true;
}

const DirectedFamilies& lattice_directed_families(std::size_t bits, std::size_t cap) {
  static std::mutex mu;
  static std::map<std::pair<std::size_t, std::size_t>, std::unique_ptr<DirectedFamilies>> cache;

  std::lock_guard lock(mu);
  auto& slot = cache[{bits, cap}];
  if (slot) return *slot;

  if (bits > 20 || count_combinations(std::uint64_t{1} << bits, cap, kMaxLatticeScan) >= kMaxLatticeScan) {
    cache.erase({bits, cap});
    throw Error(ErrorCode::BudgetExceeded,
                "literal directed-family scan over 2^" + std::to_string(bits) +
                    " soft sets at cap " + std::to_string(cap) + " is too large");
  }
  auto out = std::make_unique<DirectedFamilies>();
  out->offsets.push_back(0);
  const std::size_t n = std::size_t{1} << bits;
  std::vector<std::uint64_t> members;
  for_each_combination(n, 0, cap, [&](std::span<const std::size_t> idx) {
    members.assign(idx.begin(), idx.end());
    if (codes_upward_directed(members)) {
      out->codes.insert(out->codes.end(), members.begin(), members.end());
      out->offsets.push_back(out->codes.size());
    }
    return true;
  });
  slot = std::move(out);
  return *slot;
}

}  // namespace softcvx
