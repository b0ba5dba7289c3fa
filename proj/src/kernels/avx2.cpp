// Compiled with -mavx2. Nothing in this file may be called unless the CPU
// reports AVX2; dispatch.cpp enforces that.

#include <immintrin.h>

#include "softcvx/kernels.hpp"

namespace softcvx::kernels {
namespace {

inline int lane_mask(__m256i v) { return _mm256_movemask_pd(_mm256_castsi256_pd(v)); }

// Single-word rows: four rows per iteration.

std::size_t find_equal_w1(FamilyView f, std::uint64_t t) {
  const __m256i tv = _mm256_set1_epi64x(static_cast<long long>(t));
  std::size_t i = 0;
  for (; i + 4 <= f.count; i += 4) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(f.rows + i));
    const int m = lane_mask(_mm256_cmpeq_epi64(v, tv));
    if (m) return i + static_cast<std::size_t>(__builtin_ctz(static_cast<unsigned>(m)));
  }
  for (; i < f.count; ++i)
    if (f.rows[i] == t) return i;
  return npos;
}

std::size_t find_superset_w1(FamilyView f, std::uint64_t t) {
  const __m256i tv = _mm256_set1_epi64x(static_cast<long long>(t));
  std::size_t i = 0;
  for (; i + 4 <= f.count; i += 4) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(f.rows + i));
    const int m = lane_mask(_mm256_cmpeq_epi64(_mm256_and_si256(v, tv), tv));
    if (m) return i + static_cast<std::size_t>(__builtin_ctz(static_cast<unsigned>(m)));
  }
  for (; i < f.count; ++i)
    if ((t & ~f.rows[i]) == 0) return i;
  return npos;
}

std::size_t find_subset_w1(FamilyView f, std::uint64_t t) {
  const __m256i tv = _mm256_set1_epi64x(static_cast<long long>(t));
  const __m256i zero = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= f.count; i += 4) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(f.rows + i));
    const int m = lane_mask(_mm256_cmpeq_epi64(_mm256_andnot_si256(tv, v), zero));
    if (m) return i + static_cast<std::size_t>(__builtin_ctz(static_cast<unsigned>(m)));
  }
  for (; i < f.count; ++i)
    if ((f.rows[i] & ~t) == 0) return i;
  return npos;
}

std::size_t meet_w1(FamilyView f, std::uint64_t t, std::uint64_t* acc) {
  const __m256i tv = _mm256_set1_epi64x(static_cast<long long>(t));
  const __m256i ones = _mm256_set1_epi64x(-1);
  __m256i meet = ones;
  std::size_t matched = 0;
  std::size_t i = 0;
  for (; i + 4 <= f.count; i += 4) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(f.rows + i));
    const __m256i hit = _mm256_cmpeq_epi64(_mm256_and_si256(v, tv), tv);
    // rows that miss contribute all-ones
    meet = _mm256_and_si256(meet, _mm256_or_si256(v, _mm256_xor_si256(hit, ones)));
    matched += static_cast<std::size_t>(__builtin_popcount(static_cast<unsigned>(lane_mask(hit))));
  }
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), meet);
  std::uint64_t a = *acc & lanes[0] & lanes[1] & lanes[2] & lanes[3];
  for (; i < f.count; ++i) {
    if ((t & ~f.rows[i]) == 0) {
      a &= f.rows[i];
      ++matched;
    }
  }
  *acc = a;
  return matched;
}

// Multi-word rows: four words of one row per iteration, scalar tail.

inline __m256i load(const std::uint64_t* p) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

bool row_equal(const std::uint64_t* row, const std::uint64_t* t, std::size_t words) {
  std::size_t w = 0;
  for (; w + 4 <= words; w += 4) {
    const __m256i x = _mm256_xor_si256(load(row + w), load(t + w));
    if (!_mm256_testz_si256(x, x)) return false;
  }
  for (; w < words; ++w)
    if (row[w] != t[w]) return false;
  return true;
}

// true when every bit of `inner` is set in `outer`
bool row_contains(const std::uint64_t* outer, const std::uint64_t* inner, std::size_t words) {
  std::size_t w = 0;
  for (; w + 4 <= words; w += 4)
    if (!_mm256_testc_si256(load(outer + w), load(inner + w))) return false;
  for (; w < words; ++w)
    if ((inner[w] & ~outer[w]) != 0) return false;
  return true;
}

std::size_t find_equal_avx2(FamilyView f, const std::uint64_t* t) {
  if (f.words == 1) return find_equal_w1(f, *t);
  for (std::size_t i = 0; i < f.count; ++i)
    if (row_equal(f.rows + i * f.words, t, f.words)) return i;
  return npos;
}

std::size_t find_superset_avx2(FamilyView f, const std::uint64_t* t) {
  if (f.words == 1) return find_superset_w1(f, *t);
  for (std::size_t i = 0; i < f.count; ++i)
    if (row_contains(f.rows + i * f.words, t, f.words)) return i;
  return npos;
}

std::size_t find_subset_avx2(FamilyView f, const std::uint64_t* t) {
  if (f.words == 1) return find_subset_w1(f, *t);
  for (std::size_t i = 0; i < f.count; ++i)
    if (row_contains(t, f.rows + i * f.words, f.words)) return i;
  return npos;
}

std::size_t meet_of_supersets_avx2(FamilyView f, const std::uint64_t* t, std::uint64_t* acc) {
  if (f.words == 1) return meet_w1(f, *t, acc);
  std::size_t matched = 0;
  for (std::size_t i = 0; i < f.count; ++i) {
    const std::uint64_t* row = f.rows + i * f.words;
    if (!row_contains(row, t, f.words)) continue;
    ++matched;
    std::size_t w = 0;
    for (; w + 4 <= f.words; w += 4) {
      const __m256i a = _mm256_and_si256(load(acc + w), load(row + w));
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(acc + w), a);
    }
    for (; w < f.words; ++w) acc[w] &= row[w];
  }
  return matched;
}

constexpr KernelTable kAvx2{
    "avx2", find_equal_avx2, find_superset_avx2, find_subset_avx2, meet_of_supersets_avx2,
};

}  // namespace

const KernelTable& avx2_table() { return kAvx2; }

}  // namespace softcvx::kernels
