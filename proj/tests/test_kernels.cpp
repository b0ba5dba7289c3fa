#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "softcvx/kernels.hpp"

using namespace softcvx;

namespace {

struct Rows {
  std::size_t count, words;
  std::vector<std::uint64_t> data;
  kernels::FamilyView view() const { return {data.data(), count, words}; }
};

// Sparse random words so that subset/superset hits are common.
std::uint64_t sparse(std::mt19937_64& rng) { return rng() & rng() & rng(); }

Rows random_rows(std::mt19937_64& rng, std::size_t count, std::size_t words) {
  Rows r{count, words, std::vector<std::uint64_t>(count * words)};
  for (auto& w : r.data) w = sparse(rng);
  return r;
}

std::vector<const kernels::KernelTable*> variants() {
  std::vector<const kernels::KernelTable*> v{&kernels::scalar()};
  if (kernels::avx2()) v.push_back(kernels::avx2());
  return v;
}

// Reference answers written out directly.
std::size_t ref_find(const Rows& r, const std::uint64_t* t, int kind) {
  for (std::size_t i = 0; i < r.count; ++i) {
    bool ok = true;
    for (std::size_t w = 0; w < r.words; ++w) {
      const std::uint64_t row = r.data[i * r.words + w];
      if (kind == 0 && row != t[w]) ok = false;
      if (kind == 1 && (row & t[w]) != t[w]) ok = false;
      if (kind == 2 && (row & ~t[w]) != 0) ok = false;
    }
    if (ok) return i;
  }
  return kernels::npos;
}

}  // namespace

TEST(Kernels, ActiveIsAKnownVariant) {
  const auto& a = kernels::active();
  EXPECT_TRUE(&a == &kernels::scalar() || &a == kernels::avx2());
}

TEST(Kernels, VariantsAgreeWithReference) {
  std::mt19937_64 rng(42);
  for (std::size_t words : {1, 2, 3, 5, 8}) {
    for (std::size_t count = 0; count <= 67; ++count) {
      Rows r = random_rows(rng, count, words);
      for (int trial = 0; trial < 6; ++trial) {
        std::vector<std::uint64_t> t(words);
        if (count && trial % 2 == 0) {
          // pick an existing row, sometimes thinned or thickened
          const std::size_t i = rng() % count;
          for (std::size_t w = 0; w < words; ++w) {
            t[w] = r.data[i * words + w];
            if (trial == 2) t[w] &= rng();
            if (trial == 4) t[w] |= sparse(rng);
          }
        } else {
          for (auto& w : t) w = sparse(rng);
        }
        const std::size_t eq = ref_find(r, t.data(), 0);
        const std::size_t sup = ref_find(r, t.data(), 1);
        const std::size_t sub = ref_find(r, t.data(), 2);
        std::vector<std::uint64_t> meet(words, ~std::uint64_t{0});
        std::size_t matched = 0;
        for (std::size_t i = 0; i < count; ++i) {
          bool ok = true;
          for (std::size_t w = 0; w < words; ++w)
            if ((r.data[i * words + w] & t[w]) != t[w]) ok = false;
          if (!ok) continue;
          ++matched;
          for (std::size_t w = 0; w < words; ++w) meet[w] &= r.data[i * words + w];
        }
        for (const auto* k : variants()) {
          SCOPED_TRACE(k->name);
          ASSERT_EQ(k->find_equal(r.view(), t.data()), eq);
          ASSERT_EQ(k->find_superset(r.view(), t.data()), sup);
          ASSERT_EQ(k->find_subset(r.view(), t.data()), sub);
          std::vector<std::uint64_t> acc(words, ~std::uint64_t{0});
          ASSERT_EQ(k->meet_of_supersets(r.view(), t.data(), acc.data()), matched);
          ASSERT_EQ(acc, meet);
        }
      }
    }
  }
}

TEST(Kernels, SetActiveSwitchesVariant) {
  const auto& before = kernels::active();
  kernels::set_active(kernels::scalar());
  EXPECT_EQ(&kernels::active(), &kernels::scalar());
  kernels::set_active(before);
  EXPECT_EQ(&kernels::active(), &before);
}
