#include "softcvx/kernels.hpp"

namespace softcvx::kernels {
namespace {

std::size_t find_equal_scalar(FamilyView f, const std::uint64_t* t) {
  for (std::size_t i = 0; i < f.count; ++i) {
    const std::uint64_t* row = f.rows + i * f.words;
    std::size_t w = 0;
    while (w < f.words && row[w] == t[w]) ++w;
    if (w == f.words) return i;
  }
  return npos;
}

std::size_t find_superset_scalar(FamilyView f, const std::uint64_t* t) {
  for (std::size_t i = 0; i < f.count; ++i) {
    const std::uint64_t* row = f.rows + i * f.words;
    std::size_t w = 0;
    while (w < f.words && (t[w] & ~row[w]) == 0) ++w;
    if (w == f.words) return i;
  }
  return npos;
}

std::size_t find_subset_scalar(FamilyView f, const std::uint64_t* t) {
  for (std::size_t i = 0; i < f.count; ++i) {
    const std::uint64_t* row = f.rows + i * f.words;
    std::size_t w = 0;
    while (w < f.words && (row[w] & ~t[w]) == 0) ++w;
    if (w == f.words) return i;
  }
  return npos;
}

std::size_t meet_of_supersets_scalar(FamilyView f, const std::uint64_t* t, std::uint64_t* acc) {
  std::size_t matched = 0;
  for (std::size_t i = 0; i < f.count; ++i) {
    const std::uint64_t* row = f.rows + i * f.words;
    std::size_t w = 0;
    while (w < f.words && (t[w] & ~row[w]) == 0) ++w;
    if (w != f.words) continue;
    ++matched;
    for (w = 0; w < f.words; ++w) acc[w] &= row[w];
  }
  return matched;
}

constexpr KernelTable kScalar{
    "scalar", find_equal_scalar, find_superset_scalar, find_subset_scalar,
    meet_of_supersets_scalar,
};

}  // namespace

const KernelTable& scalar() { return kScalar; }

}  // namespace softcvx::kernels
