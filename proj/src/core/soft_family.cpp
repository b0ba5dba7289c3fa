#include "softcvx/soft_family.hpp"

#include <algorithm>

#include "softcvx/error.hpp"

namespace softcvx {

SoftFamily::SoftFamily(SpacePtr space) : space_(std::move(space)), words_(space_->word_count()) {}

SoftFamily::SoftFamily(SpacePtr space, std::span<const SoftSet> members) : SoftFamily(std::move(space)) {
  for (const auto& m : members) insert(m);
}

SoftFamily::SoftFamily(SpacePtr space, std::initializer_list<SoftSet> members)
    : SoftFamily(std::move(space), std::span<const SoftSet>(members.begin(), members.size())) {}

SoftFamily SoftFamily::from_codes(SpacePtr space, std::span<const std::uint64_t> codes) {
  if (space->bit_count() > 64)
    throw Error(ErrorCode::BudgetExceeded, "soft-set codes need |X|*|E| <= 64");
  const std::uint64_t mask = word_mask(space->bit_count(), 0);
  SoftFamily f(std::move(space));
  for (std::uint64_t c : codes) {
    const std::uint64_t w = c & mask;
    f.insert_row(&w);
  }
  return f;
}

std::uint64_t SoftFamily::row_hash(const std::uint64_t* words) const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (std::size_t w = 0; w < words_; ++w) {
    h ^= words[w];
    h *= 0x100000001b3ULL;
    h ^= h >> 29;
  }
  return h;
}

void SoftFamily::build_index() {
  index_.clear();
  index_.reserve(count_ * 2);
  for (std::size_t i = 0; i < count_; ++i) index_.emplace(row_hash(rows_.data() + i * words_), i);
}

std::optional<std::size_t> SoftFamily::index_of_row(const std::uint64_t* words) const {
  if (count_ > kIndexThreshold) {
    auto [lo, hi] = index_.equal_range(row_hash(words));
    for (auto it = lo; it != hi; ++it) {
      if (std::equal(words, words + words_, rows_.data() + it->second * words_)) return it->second;
    }
    return std::nullopt;
  }
  const std::size_t i = kernels::active().find_equal(view(), words);
  if (i == kernels::npos) return std::nullopt;
  return i;
}

bool SoftFamily::contains_row(const std::uint64_t* words) const { return index_of_row(words).has_value(); }

bool SoftFamily::insert_row(const std::uint64_t* words) {
  if (contains_row(words)) return false;
  rows_.insert(rows_.end(), words, words + words_);
  ++count_;
  if (count_ == kIndexThreshold + 1) {
    build_index();
  } else if (count_ > kIndexThreshold) {
    index_.emplace(row_hash(words), count_ - 1);
  }
  return true;
}

bool SoftFamily::insert(const SoftSet& s) {
  require_same_space(*space_, s.space());
  return insert_row(s.words().data());
}

bool SoftFamily::contains(const SoftSet& s) const {
  require_same_space(*space_, s.space());
  return contains_row(s.words().data());
}

std::optional<std::size_t> SoftFamily::index_of(const SoftSet& s) const {
  require_same_space(*space_, s.space());
  return index_of_row(s.words().data());
}

SoftSet SoftFamily::operator[](std::size_t i) const {
  auto r = row(i);
  return SoftSet(space_, std::vector<std::uint64_t>(r.begin(), r.end()));
}

std::vector<SoftSet> SoftFamily::members() const {
  std::vector<SoftSet> out;
  out.reserve(count_);
  for (std::size_t i = 0; i < count_; ++i) out.push_back((*this)[i]);
  return out;
}

std::vector<std::uint64_t> SoftFamily::codes() const {
  if (space_->bit_count() > 64)
    throw Error(ErrorCode::BudgetExceeded, "soft-set codes need |X|*|E| <= 64");
  return rows_;
}

bool operator==(const SoftFamily& a, const SoftFamily& b) {
  if (!a.space_->same_as(*b.space_) || a.count_ != b.count_) return false;
  for (std::size_t i = 0; i < a.count_; ++i)
    if (!b.contains_row(a.rows_.data() + i * a.words_)) return false;
  return true;
}

SoftSet family_union(const SoftFamily& f) {
  std::vector<std::uint64_t> acc(f.space().word_count(), 0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    auto r = f.row(i);
    for (std::size_t w = 0; w < acc.size(); ++w) acc[w] |= r[w];
  }
  return SoftSet(f.space_ptr(), std::move(acc));
}

SoftSet family_intersection(const SoftFamily& f) {
  std::vector<std::uint64_t> acc(f.space().word_count(), ~std::uint64_t{0});
  for (std::size_t i = 0; i < f.size(); ++i) {
    auto r = f.row(i);
    for (std::size_t w = 0; w < acc.size(); ++w) acc[w] &= r[w];
  }
  return SoftSet(f.space_ptr(), std::move(acc));
}

bool is_upward_directed(const SoftFamily& f) {
  const auto& k = kernels::active();
  std::vector<std::uint64_t> joined(f.space().word_count());
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      auto a = f.row(i);
      auto b = f.row(j);
      for (std::size_t w = 0; w < joined.size(); ++w) joined[w] = a[w] | b[w];
      if (k.find_superset(f.view(), joined.data()) == kernels::npos) return false;
    }
  }
  return true;
}

bool is_downward_directed(const SoftFamily& f) {
  const auto& k = kernels::active();
  std::vector<std::uint64_t> met(f.space().word_count());
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      auto a = f.row(i);
      auto b = f.row(j);
      for (std::size_t w = 0; w < met.size(); ++w) met[w] = a[w] & b[w];
      if (k.find_subset(f.view(), met.data()) == kernels::npos) return false;
    }
  }
  return true;
}

SoftFamily complement_each(const SoftFamily& f) {
  SoftFamily out(f.space_ptr());
  for (std::size_t i = 0; i < f.size(); ++i) out.insert(complement(f[i]));
  return out;
}

std::vector<ElementSet> parameter_slices(const SoftFamily& f, std::size_t parameter) {
  if (parameter >= f.space().parameter_count())
    throw Error(ErrorCode::UnknownParameter, "parameter index out of range");
  std::vector<ElementSet> out;
  for (std::size_t i = 0; i < f.size(); ++i) out.push_back(f[i].slice(parameter));
  std::sort(out.begin(), out.end(), canonical_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace softcvx
