#pragma once

// Bitmask scan kernels over a family of soft sets stored row-major: row i
// occupies words [i*words, (i+1)*words). Every kernel has a scalar reference
// implementation; an AVX2 variant is compiled separately and chosen at
// runtime when the CPU supports it. Results must be identical across
// variants (see tests/test_kernels.cpp).

#include <cstddef>
#include <cstdint>
#include <limits>

namespace softcvx::kernels {

inline constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

struct FamilyView {
  const std::uint64_t* rows = nullptr;
  std::size_t count = 0;
  std::size_t words = 0;
};

struct KernelTable {
  const char* name;
  /// First row equal to target, or npos.
  std::size_t (*find_equal)(FamilyView family, const std::uint64_t* target);
  /// First row containing target (row & target == target), or npos.
  std::size_t (*find_superset)(FamilyView family, const std::uint64_t* target);
  /// First row contained in target (row & ~target == 0), or npos.
  std::size_t (*find_subset)(FamilyView family, const std::uint64_t* target);
  /// ANDs every row containing target into acc; returns how many rows matched.
  std::size_t (*meet_of_supersets)(FamilyView family, const std::uint64_t* target,
                                   std::uint64_t* acc);
};

const KernelTable& scalar();

/// AVX2 variant, or nullptr when it was not built or the CPU lacks AVX2.
const KernelTable* avx2();

/// The variant used by the library. Defaults to the widest supported one;
/// the environment variable SOFTCVX_KERNELS=scalar|avx2 overrides.
const KernelTable& active();

/// Forces a variant for the rest of the process (tests and benchmarks).
void set_active(const KernelTable& table);

}  // namespace softcvx::kernels
